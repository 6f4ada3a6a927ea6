#pragma once

#include <random>
#include <span>
#include <vector>

#include "ulam/series.hpp"

namespace ulam {

inline constexpr int kMaxPsiDegree = 4;
inline constexpr int kCertificationPoints = 4096;
inline constexpr double kCertificationSlack = 1e-12;

/// First three Taylor coefficients of a Schwarz-type function omega_1.
struct CoefTriple {
  Complex c1;
  Complex c2;
  Complex c3;
};

/// The three coefficient inequalities for omega_1:
///   |c1| <= 1,  |c2| <= (1 - |c1|^2)/2,
///   |c3| <= (1/3)[1 - |c1|^2 - 4|c2|^2/(1 + |c1|)]   (bracket clamped at 0).
/// `tol` loosens every inequality by the same absolute amount.
bool is_admissible_triple(const CoefTriple& t, double tol = 0.0);

/// Draws |c1| and its phase, then |c2| uniformly in its allowed interval,
/// then |c3| likewise. Always admissible.
CoefTriple sample_triple(std::mt19937_64& rng);

/// e^{2 pi i k/m} for k < m, cached per thread.
const std::vector<Complex>& roots_of_unity(int m);

/// max |p(r e^{i theta})| over m equispaced angles (m >= 256).
double sup_norm_on_circle(std::span<const Complex> poly, double r, int m);

/// Upper bound for the true sup over |z| = 1 given the sampled maximum of a
/// degree-n polynomial on m points: sampled / (1 - n*pi/m), from Bernstein's
/// inequality |p'| <= n ||p|| applied across the half-gap pi/m.
double certified_sup_bound(double sampled, int degree, int m);

/// omega_1 represented through psi = omega_1', a polynomial of degree <= 4
/// with sup_{|z|=1} |psi| <= 1. Then omega_1(z) = sum c_k z^k, k c_k = psi_{k-1}.
class SchwarzFn {
 public:
  std::span<const Complex> psi_coeffs() const { return psi_; }
  /// Coefficients of omega_1, index 0 is the zero constant term.
  std::span<const Complex> omega1_coeffs() const { return omega_; }

  /// c_k, zero beyond the stored degree.
  Complex c(int k) const {
    return (k >= 1 && k < static_cast<int>(omega_.size())) ? omega_[static_cast<size_t>(k)] : Complex{};
  }
  CoefTriple triple() const { return {c(1), c(2), c(3)}; }
  int degree() const { return static_cast<int>(psi_.size()) - 1; }

  Complex psi(Complex z) const;
  Complex omega1(Complex z) const;

  double sampled_sup() const { return sampled_sup_; }
  double sup_bound() const { return sup_bound_; }

 private:
  friend SchwarzFn make_schwarz(std::vector<Complex> psi_coeffs);

  std::vector<Complex> psi_;
  std::vector<Complex> omega_;
  double sampled_sup_ = 0.0;
  double sup_bound_ = 0.0;
};

/// Certifies psi on the unit circle with kCertificationPoints samples.
/// Throws DegreeTooHigh for degree > 4 and NormExceeded when the sampled
/// sup exceeds 1 + 1e-12. Trailing zero coefficients are dropped.
SchwarzFn make_schwarz(std::vector<Complex> psi_coeffs);

/// Rescales psi so that certified_sup_bound() <= target. Used by generators
/// that must stay strictly inside the admissible set.
std::vector<Complex> scale_to_sup(std::vector<Complex> psi_coeffs, double target = 1.0);

}  // namespace ulam
