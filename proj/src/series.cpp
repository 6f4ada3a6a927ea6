#include "ulam/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ulam/error.hpp"

namespace ulam {

PowerSeries::PowerSeries(int order) : coeffs_(static_cast<size_t>(std::max(order, 0)) + 1) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

PowerSeries::PowerSeries(std::span<const Complex> coeffs, int order) : PowerSeries(order) {
  const size_t n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

PowerSeries PowerSeries::constant(Complex c, int order) {
  PowerSeries p(order);
  p.coeffs_[0] = c;
  return p;
}

PowerSeries PowerSeries::identity(int order) {
  PowerSeries p(order);
  if (order >= 1) p.coeffs_[1] = 1.0;
  return p;
}

PowerSeries PowerSeries::truncated(int order) const { return PowerSeries(coeffs_, order); }

bool PowerSeries::is_normalized(double tol) const {
  return std::abs((*this)[0]) <= tol && std::abs((*this)[1] - 1.0) <= tol;
}

PowerSeries operator+(const PowerSeries& p, const PowerSeries& q) {
  PowerSeries r(std::min(p.order(), q.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = p[k] + q[k];
  return r;
}

PowerSeries operator-(const PowerSeries& p, const PowerSeries& q) {
  PowerSeries r(std::min(p.order(), q.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = p[k] - q[k];
  return r;
}

PowerSeries operator*(Complex s, const PowerSeries& p) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

PowerSeries multiply(const PowerSeries& p, const PowerSeries& q) {
  const int n = std::min(p.order(), q.order());
  std::vector<Complex> r(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc{};
    for (int i = 0; i <= k; ++i) acc += p[i] * q[k - i];
    r[k] = acc;
  }
  return PowerSeries(std::move(r));
}

PowerSeries reciprocal(const PowerSeries& p, double eps) {
  const Complex p0 = p[0];
  if (std::abs(p0) < eps) {
    throw Error(ErrorCode::ZeroConstantTerm,
                "|p0| = " + std::to_string(std::abs(p0)) + " below " + std::to_string(eps));
  }
  const int n = p.order();
  std::vector<Complex> r(static_cast<size_t>(n) + 1);
  r[0] = 1.0 / p0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += p[j] * r[k - j];
    r[k] = -acc / p0;
  }
  return PowerSeries(std::move(r));
}

PowerSeries derivative(const PowerSeries& p) {
  const int n = std::max(p.order() - 1, 0);
  std::vector<Complex> r(static_cast<size_t>(n) + 1);
  for (int k = 0; k < p.order(); ++k) r[k] = static_cast<double>(k + 1) * p[k + 1];
  return PowerSeries(std::move(r));
}

Complex evaluate(const PowerSeries& p, Complex z) {
  Complex acc{};
  for (int k = p.order(); k >= 0; --k) acc = acc * z + p[k];
  return acc;
}

PowerSeries mul_z(const PowerSeries& p) {
  std::vector<Complex> r(static_cast<size_t>(p.order()) + 2);
  std::copy(p.coeffs().begin(), p.coeffs().end(), r.begin() + 1);
  return PowerSeries(std::move(r));
}

PowerSeries div_z(const PowerSeries& p) {
  if (p.order() == 0) return PowerSeries(0);
  return PowerSeries(std::vector<Complex>(p.coeffs().begin() + 1, p.coeffs().end()));
}

PowerSeries u_transform(const PowerSeries& f) {
  if (f.order() < 2 || !f.is_normalized()) {
    throw Error(ErrorCode::NotNormalized, "u_transform expects f = z + a2 z^2 + ...");
  }
  const PowerSeries z_over_f = reciprocal(div_z(f));
  return multiply(multiply(z_over_f, z_over_f), derivative(f));
}

}  // namespace ulam
