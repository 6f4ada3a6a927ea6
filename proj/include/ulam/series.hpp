#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ulam {

using Complex = std::complex<double>;

/// Default truncation order. Functionals read a_0..a_5 only; the extra
/// terms keep products from contaminating those indices.
inline constexpr int kDefaultOrder = 16;

/// reciprocal() refuses constant terms smaller than this in modulus.
inline constexpr double kReciprocalEpsilon = 1e-9;

/// Tolerance used when checking f_0 = 0 and f_1 = 1.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Truncated Taylor expansion sum_{k<=N} a_k z^k with complex coefficients.
/// Values are immutable; every operation returns a new series.
class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(int order);
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit PowerSeries(std::vector<Complex> coeffs);
  /// Pads with zeros or drops terms so the result has exactly `order`.
  PowerSeries(std::span<const Complex> coeffs, int order);

  static PowerSeries constant(Complex c, int order);
  static PowerSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k; zero beyond the truncation order.
  Complex operator[](int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<size_t>(k)] : Complex{};
  }

  std::span<const Complex> coeffs() const { return coeffs_; }

  PowerSeries truncated(int order) const;

  bool is_normalized(double tol = kNormalizationTolerance) const;

  friend PowerSeries operator+(const PowerSeries& p, const PowerSeries& q);
  friend PowerSeries operator-(const PowerSeries& p, const PowerSeries& q);
  friend PowerSeries operator*(Complex s, const PowerSeries& p);

 private:
  std::vector<Complex> coeffs_;
};

/// Truncated Cauchy product at min(N_p, N_q).
PowerSeries multiply(const PowerSeries& p, const PowerSeries& q);

/// r with p*r = 1 + O(z^{N+1}). Throws ZeroConstantTerm when |p_0| < eps.
PowerSeries reciprocal(const PowerSeries& p, double eps = kReciprocalEpsilon);

/// Term-by-term derivative; order drops by one (a constant stays order 0).
PowerSeries derivative(const PowerSeries& p);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const PowerSeries& p, Complex z);

/// z*p, exact: the order grows by one.
PowerSeries mul_z(const PowerSeries& p);

/// p/z for p_0 = 0, exact: the order drops by one. p_0 is discarded.
PowerSeries div_z(const PowerSeries& p);

/// Series of U_f(z) = (z/f(z))^2 f'(z) at order N-1.
/// Throws NotNormalized unless f_0 = 0 and f_1 = 1.
PowerSeries u_transform(const PowerSeries& f);

}  // namespace ulam
