#include "ulam/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "ulam/error.hpp"

namespace ulam {

namespace {

Complex horner(std::span<const Complex> poly, Complex z) {
  Complex acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int effective_degree(std::span<const Complex> poly) {
  int d = static_cast<int>(poly.size()) - 1;
  while (d > 0 && poly[static_cast<size_t>(d)] == Complex{}) --d;
  return std::max(d, 0);
}

}  // namespace

bool is_admissible_triple(const CoefTriple& t, double tol) {
  const double x = std::abs(t.c1);
  const double y = std::abs(t.c2);
  const double w = std::abs(t.c3);
  if (x > 1.0 + tol) return false;
  if (y > 0.5 * (1.0 - x * x) + tol) return false;
  const double bracket = std::max(0.0, 1.0 - x * x - 4.0 * y * y / (1.0 + x));
  return w <= bracket / 3.0 + tol;
}

CoefTriple sample_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double x = unit(rng);
  const double y = unit(rng) * 0.5 * (1.0 - x * x);
  const double bracket = std::max(0.0, 1.0 - x * x - 4.0 * y * y / (1.0 + x));
  const double w = unit(rng) * bracket / 3.0;
  return {std::polar(x, phase(rng)), std::polar(y, phase(rng)), std::polar(w, phase(rng))};
}

const std::vector<Complex>& roots_of_unity(int m) {
  thread_local std::unordered_map<int, std::vector<Complex>> cache;
  auto& table = cache[m];
  if (table.empty()) {
    table.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) table.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
  }
  return table;
}

double sup_norm_on_circle(std::span<const Complex> poly, double r, int m) {
  m = std::max(m, 256);
  double best = 0.0;
  for (const Complex& w : roots_of_unity(m)) best = std::max(best, std::norm(horner(poly, r * w)));
  return std::sqrt(best);
}

double certified_sup_bound(double sampled, int degree, int m) {
  if (degree == 0) return sampled;
  return sampled / (1.0 - degree * std::numbers::pi / m);
}

Complex SchwarzFn::psi(Complex z) const { return horner(psi_, z); }

Complex SchwarzFn::omega1(Complex z) const { return horner(omega_, z); }

SchwarzFn make_schwarz(std::vector<Complex> psi_coeffs) {
  if (psi_coeffs.empty()) psi_coeffs.emplace_back();
  psi_coeffs.resize(static_cast<size_t>(effective_degree(psi_coeffs)) + 1);
  if (static_cast<int>(psi_coeffs.size()) - 1 > kMaxPsiDegree) {
    throw Error(ErrorCode::DegreeTooHigh,
                "psi degree " + std::to_string(psi_coeffs.size() - 1) + " exceeds 4");
  }

  SchwarzFn w;
  w.sampled_sup_ = sup_norm_on_circle(psi_coeffs, 1.0, kCertificationPoints);
  if (w.sampled_sup_ > 1.0 + kCertificationSlack) {
    throw Error(ErrorCode::NormExceeded, "sup |psi| = " + std::to_string(w.sampled_sup_));
  }
  w.sup_bound_ = certified_sup_bound(w.sampled_sup_, static_cast<int>(psi_coeffs.size()) - 1,
                                     kCertificationPoints);
  w.omega_.assign(psi_coeffs.size() + 1, Complex{});
  for (size_t k = 1; k < w.omega_.size(); ++k) w.omega_[k] = psi_coeffs[k - 1] / static_cast<double>(k);
  w.psi_ = std::move(psi_coeffs);
  return w;
}

std::vector<Complex> scale_to_sup(std::vector<Complex> psi_coeffs, double target) {
  const int degree = effective_degree(psi_coeffs);
  const double sampled = sup_norm_on_circle(psi_coeffs, 1.0, kCertificationPoints);
  if (sampled == 0.0) return psi_coeffs;
  const double s = target / certified_sup_bound(sampled, degree, kCertificationPoints);
  for (auto& c : psi_coeffs) c *= s;
  return psi_coeffs;
}

}  // namespace ulam
