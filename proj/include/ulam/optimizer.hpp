#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ulam {

/// The three majorants of |a3^2 - a5|/lambda, |a2 a4 - a5|/lambda and
/// |a5 - a2^4|/lambda in terms of x = |c1|, y = |c2|.
enum class Objective { G1, G2, G3 };

std::string to_string(Objective g);
Objective objective_from_string(const std::string& s);

/// A point of E = {0 <= x <= 1, 0 <= y <= (1 - x^2)/2}.
struct RegionPoint {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kRegionTolerance = 1e-12;

bool in_region(const RegionPoint& p, double tol = kRegionTolerance);

/// Upper edge of E at x.
inline double region_top(double x) { return 0.5 * (1.0 - x * x); }

/// Throws OutsideRegion when p is not in E.
double g_value(Objective g, const RegionPoint& p, double lambda);
double g1(const RegionPoint& p, double lambda);
double g2(const RegionPoint& p, double lambda);
double g3(const RegionPoint& p, double lambda);

/// Analytic partial derivatives of g (no region check).
double g_partial_x(Objective g, const RegionPoint& p, double lambda);
double g_partial_y(Objective g, const RegionPoint& p, double lambda);

/// phi_i(x) = g_i(x, (1 - x^2)/2) in closed form, and its derivative.
double phi_curve(Objective g, double x, double lambda);
double phi_derivative(Objective g, double x, double lambda);

/// Maximizer of a unimodal function on [a, b] by golden-section search,
/// stopping once the bracket is narrower than `tol`.
double golden_section_max(const std::function<double(double)>& f, double a, double b, double tol);

struct OptimizerOptions {
  int grid = 2001;
  int line_points = 2001;
};

struct MaxResult {
  Objective function = Objective::G1;
  double lambda = 0.0;
  RegionPoint argmax;
  double value = 0.0;
  std::string method;
  /// Bracket tolerance of the refinement.
  double tolerance = 0.0;
  /// Lipschitz gap of the 2D grid: best grid value + gap >= true maximum.
  double grid_gap_bound = 0.0;
  /// Other candidates that tie with the maximum to within `tolerance`.
  std::vector<RegionPoint> ties;
};

/// Global maximum of g over E: dense feasible grid, then golden-section
/// polishing of the three boundary pieces (x = 0, y = 0, upper parabola)
/// and of the best interior grid point. `tol` is clamped to at least 1e-9.
MaxResult maximize_over_E(Objective g, double lambda, double tol = 1e-9,
                          const OptimizerOptions& opts = {});

nlohmann::json to_json(const MaxResult& r);

struct MonotonicityClaim {
  std::string name;
  /// Whether the claim is asserted at this lambda (false: outside its regime).
  bool asserted = false;
  double min_sampled = 0.0;
  bool holds = false;
};

struct MonotonicityReport {
  double lambda = 0.0;
  std::vector<MonotonicityClaim> claims;
  /// True iff every asserted claim holds.
  bool all_hold() const;
};

/// Samples dg_i/dx on a 500 x 500 interior grid and phi_i' on [0, 1].
MonotonicityReport check_monotonicity_claims(double lambda, int grid = 500);

nlohmann::json to_json(const MonotonicityReport& r);

/// Locates the lambda at which the argmax of g1 over E leaves the corner
/// (1, 0) by bisection on [lo, hi].
double locate_g1_crossover(double lo = 0.5, double hi = 1.0, double tol = 1e-7);

}  // namespace ulam
