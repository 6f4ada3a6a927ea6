#include "ulam/member.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "ulam/error.hpp"

namespace ulam {

namespace {

Complex horner(std::span<const Complex> poly, Complex z) {
  Complex acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(std::span<const Complex> poly, Complex z) {
  Complex acc{};
  for (size_t k = poly.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * poly[k];
  return acc;
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1], got " + std::to_string(lambda));
  }
}

bool roots_outside_disk(std::span<const Complex> q) {
  for (const Complex& r : polynomial_roots(q)) {
    if (std::abs(r) < 1.0 - kRootTolerance) return false;
  }
  return true;
}

template <typename Eval>
void sample_deviation(MembershipReport& rep, const MembershipGrid& grid, Eval&& u_at, bool rational) {
  double max_dev2 = 0.0;
  for (double r : grid.radii) {
    if ((r > kRationalFormRadius) != rational) continue;
    for (const Complex& w : roots_of_unity(grid.angles)) {
      const Complex z = r * w;
      const double dev2 = std::norm(u_at(z) - 1.0);
      if (!std::isfinite(dev2)) {
        rep.denom_ok = false;
        continue;
      }
      max_dev2 = std::max(max_dev2, dev2);
    }
  }
  rep.max_dev = std::max(rep.max_dev, std::sqrt(max_dev2));
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Generated: return "generated";
    case Provenance::CatalogFLambda: return "catalog-f_lambda";
    case Provenance::CatalogRotation: return "catalog-rotation";
    case Provenance::CatalogHankel3: return "catalog-hankel3";
  }
  return "generated";
}

Provenance provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::Generated, Provenance::CatalogFLambda, Provenance::CatalogRotation,
                 Provenance::CatalogHankel3}) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

Complex MemberSpec::coefficient(int n) const {
  if (n < 1 || n > 5) {
    throw Error(ErrorCode::IndexOutOfRange, "coefficient a_" + std::to_string(n) + " not stored");
  }
  return a[static_cast<size_t>(n - 1)];
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n > 0 && std::abs(coeffs[static_cast<size_t>(n)]) == 0.0) --n;
  if (n <= 0) return {};

  const Complex lead = coeffs[static_cast<size_t>(n)];
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<size_t>(i)] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto poly = coeffs.first(static_cast<size_t>(n) + 1);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()(i);
    // Newton polish; kept only while the residual shrinks.
    for (int it = 0; it < 4; ++it) {
      const Complex d = horner_derivative(poly, z);
      if (std::abs(d) == 0.0) break;
      const Complex next = z - horner(poly, z) / d;
      if (!(std::abs(horner(poly, next)) < std::abs(horner(poly, z)))) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

MembershipReport check_membership(const PowerSeries& f, double lambda, const MembershipGrid& grid) {
  MembershipReport rep;
  rep.lambda = lambda;
  rep.grid = grid;
  const PowerSeries u = u_transform(f);
  auto series_u = [&](Complex z) { return evaluate(u, z); };
  sample_deviation(rep, grid, series_u, false);
  sample_deviation(rep, grid, series_u, true);
  rep.margin = lambda - rep.max_dev;
  return rep;
}

MembershipReport check_membership(const MemberSpec& m, const MembershipGrid& grid) {
  MembershipReport rep;
  rep.lambda = m.lambda;
  rep.grid = grid;
  rep.denom_ok = roots_outside_disk(m.denominator);
  const PowerSeries u = u_transform(m.f);
  sample_deviation(rep, grid, [&](Complex z) { return evaluate(u, z); }, false);
  // With z/f = Q: f' = (Q - zQ')/Q^2, so U_f = Q^2 f' = Q - zQ' holds exactly.
  sample_deviation(
      rep, grid, [&](Complex z) { return horner(m.denominator, z) - z * horner_derivative(m.denominator, z); },
      true);
  rep.margin = m.lambda - rep.max_dev;
  return rep;
}

MemberSpec build_member(double lambda, Complex a2, const SchwarzFn& w, Provenance provenance,
                        int order, const MembershipGrid& grid) {
  require_lambda(lambda);
  if (order < 8) throw std::invalid_argument("truncation order must be at least 8");

  MemberSpec m;
  m.lambda = lambda;
  m.a2 = a2;
  m.schwarz = w;
  m.provenance = provenance;

  const auto omega = w.omega1_coeffs();
  m.denominator.assign(omega.size() + 1, Complex{});
  m.denominator[0] = 1.0;
  m.denominator[1] -= a2;
  for (size_t k = 1; k < omega.size(); ++k) m.denominator[k + 1] -= lambda * omega[k];

  if (!roots_outside_disk(m.denominator)) {
    throw Error(ErrorCode::DenominatorVanishes, "1 - a2 z - lambda z omega_1(z) has a root in the disk");
  }

  m.f = mul_z(reciprocal(PowerSeries(m.denominator, order - 1)));
  for (int n = 1; n <= 5; ++n) m.a[static_cast<size_t>(n - 1)] = m.f[n];

  m.membership = check_membership(m, grid);
  if (!m.membership.accepted()) {
    throw Error(ErrorCode::MembershipFailed,
                "sampled max |U_f - 1| = " + std::to_string(m.membership.max_dev) +
                    " for lambda = " + std::to_string(lambda));
  }
  return m;
}

std::array<Complex, 3> coefficients_from_schwarz(double lambda, Complex a2, const CoefTriple& t) {
  const Complex a2sq = a2 * a2;
  const Complex a3 = lambda * t.c1 + a2sq;
  const Complex a4 = lambda * t.c2 + 2.0 * lambda * a2 * t.c1 + a2sq * a2;
  const Complex a5 = lambda * t.c3 + 2.0 * lambda * a2 * t.c2 + lambda * lambda * t.c1 * t.c1 +
                     3.0 * lambda * a2sq * t.c1 + a2sq * a2sq;
  return {a3, a4, a5};
}

double f_lambda_coefficient(int n, double lambda) {
  if (std::abs(1.0 - lambda) < 1e-12) return static_cast<double>(n);
  return (1.0 - std::pow(lambda, n)) / (1.0 - lambda);
}

MemberSpec extremal_f_lambda(double lambda) {
  return build_member(lambda, 1.0 + lambda, make_schwarz({-1.0}), Provenance::CatalogFLambda);
}

MemberSpec extremal_rotation(double lambda, double phi) {
  return build_member(lambda, std::polar(1.0 + lambda, phi), make_schwarz({-std::polar(1.0, 2.0 * phi)}),
                      Provenance::CatalogRotation);
}

MemberSpec extremal_hankel3(double lambda) {
  return build_member(lambda, 0.0, make_schwarz({0.0, 1.0}), Provenance::CatalogHankel3);
}

MemberSpec rotate(const MemberSpec& m, double phi) {
  std::vector<Complex> psi(m.schwarz.psi_coeffs().begin(), m.schwarz.psi_coeffs().end());
  for (size_t j = 0; j < psi.size(); ++j) psi[j] *= std::polar(1.0, static_cast<double>(j + 2) * phi);
  return build_member(m.lambda, m.a2 * std::polar(1.0, phi), make_schwarz(std::move(psi)), m.provenance,
                      m.f.order(), m.membership.grid);
}

bool a3_condition_holds(const MemberSpec& m) {
  const double l = m.lambda;
  return std::abs(m.coefficient(3)) <= 1.0 + l + l * l + kA3ConditionTolerance;
}

nlohmann::json to_json(const MemberSpec& m) {
  nlohmann::json psi = nlohmann::json::array();
  for (const Complex& c : m.schwarz.psi_coeffs()) psi.push_back({c.real(), c.imag()});
  return {{"lambda", m.lambda},
          {"a2", {m.a2.real(), m.a2.imag()}},
          {"psi_coeffs", std::move(psi)},
          {"provenance", std::string(to_string(m.provenance))}};
}

MemberSpec member_from_json(const nlohmann::json& j, int order) {
  const auto& a2 = j.at("a2");
  std::vector<Complex> psi;
  for (const auto& c : j.at("psi_coeffs")) psi.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  return build_member(j.at("lambda").get<double>(), {a2.at(0).get<double>(), a2.at(1).get<double>()},
                      make_schwarz(std::move(psi)),
                      provenance_from_string(j.at("provenance").get<std::string>()), order);
}

std::string content_hash(const MemberSpec& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(m).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ulam
