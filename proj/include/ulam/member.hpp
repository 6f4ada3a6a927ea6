#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ulam/schwarz.hpp"
#include "ulam/series.hpp"

namespace ulam {

enum class Provenance { Generated, CatalogFLambda, CatalogRotation, CatalogHankel3 };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

/// Roots of the denominator must satisfy |z| >= 1 - kRootTolerance.
inline constexpr double kRootTolerance = 1e-6;
/// Members whose sampled margin lambda - max|U_f - 1| is at or below this
/// are rejected as numerically ambiguous.
inline constexpr double kMembershipMarginTolerance = 1e-9;
/// Radii above this are evaluated through the rational form z/f = Q(z).
inline constexpr double kRationalFormRadius = 0.9;

struct MembershipGrid {
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  int angles = 2048;
};

struct MembershipReport {
  double lambda = 0.0;
  double max_dev = 0.0;
  double margin = 0.0;
  bool denom_ok = true;
  MembershipGrid grid;

  bool accepted(double tol = kMembershipMarginTolerance) const { return denom_ok && margin > tol; }
};

/// A member of U(lambda) built from z/f(z) = 1 - a2 z - lambda z omega_1(z).
struct MemberSpec {
  double lambda = 0.0;
  Complex a2;
  SchwarzFn schwarz;
  Provenance provenance = Provenance::Generated;
  /// Q(z) = z/f(z) as polynomial coefficients.
  std::vector<Complex> denominator;
  PowerSeries f{kDefaultOrder};
  /// a_1..a_5 read off f; index 0 holds a_1 = 1.
  std::array<Complex, 5> a{};
  MembershipReport membership;

  /// a_n for 1 <= n <= 5.
  Complex coefficient(int n) const;
};

/// Polynomial roots through the eigenvalues of the companion matrix.
/// Leading zero coefficients are ignored.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// f = z / (1 - a2 z - lambda z omega_1(z)). Throws DenominatorVanishes if Q
/// has a root inside the open unit disk and MembershipFailed if the sampled
/// margin is not positive.
MemberSpec build_member(double lambda, Complex a2, const SchwarzFn& w,
                        Provenance provenance = Provenance::Generated,
                        int order = kDefaultOrder,
                        const MembershipGrid& grid = {});

/// Samples |U_f(z) - 1| on the circles of `grid` through the truncated series.
MembershipReport check_membership(const PowerSeries& f, double lambda,
                                  const MembershipGrid& grid = {});

/// Same, but for radii above 0.9 U_f is evaluated from the rational form
/// f = z/Q, which collapses to U_f = Q - z Q'. denom_ok reflects the root check.
MembershipReport check_membership(const MemberSpec& m, const MembershipGrid& grid = {});

/// a3, a4, a5 from lambda, a2 and (c1, c2, c3).
std::array<Complex, 3> coefficients_from_schwarz(double lambda, Complex a2, const CoefTriple& t);

/// (1 - lambda^n)/(1 - lambda), replaced by n when |1 - lambda| < 1e-12.
double f_lambda_coefficient(int n, double lambda);

/// f_lambda(z) = z/((1 - z)(1 - lambda z)); omega_1(z) = -z.
MemberSpec extremal_f_lambda(double lambda);
/// z/(1 - (1+lambda) e^{i phi} z + lambda e^{2 i phi} z^2) = e^{-i phi} f_lambda(e^{i phi} z).
MemberSpec extremal_rotation(double lambda, double phi);
/// z/(1 - (lambda/2) z^3); omega_1(z) = z^2/2.
MemberSpec extremal_hankel3(double lambda);

/// e^{-i phi} f(e^{i phi} z); a_n picks up e^{i(n-1) phi}.
MemberSpec rotate(const MemberSpec& m, double phi);

inline constexpr double kA3ConditionTolerance = 1e-10;

/// |a3| <= 1 + lambda + lambda^2 (+1e-10).
bool a3_condition_holds(const MemberSpec& m);

nlohmann::json to_json(const MemberSpec& m);
/// Rebuilds (and re-verifies) a member from its serialized parameters.
MemberSpec member_from_json(const nlohmann::json& j, int order = kDefaultOrder);
/// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
std::string content_hash(const MemberSpec& m);

}  // namespace ulam
