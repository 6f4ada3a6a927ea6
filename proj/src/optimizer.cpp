#include "ulam/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ulam/error.hpp"
#include "ulam/functionals.hpp"

namespace ulam {

namespace {

// g(x, y) = (1/3)(1 - x^2 - 4y^2/(1+x)) + A y + B x^2 + C x
struct Coeffs {
  double A, B, C;
};

Coeffs coeffs_for(Objective g, double l) {
  const double s = 1 + l + l * l;
  switch (g) {
    case Objective::G1: return {2 * (1 + l), l, s};
    case Objective::G2: return {1 + l, 0.0, s};
    case Objective::G3: return {2 * (1 + l), 2 * l, 3 * s};
  }
  return {0, 0, 0};
}

double g_raw(const Coeffs& k, double x, double y) {
  return (1.0 - x * x - 4.0 * y * y / (1.0 + x)) / 3.0 + k.A * y + k.B * x * x + k.C * x;
}

struct Candidate {
  RegionPoint p;
  double value;
};

bool better(const Candidate& a, const Candidate& b) {
  return std::tie(a.value, a.p.x, a.p.y) > std::tie(b.value, b.p.x, b.p.y);
}

// Best of a dense scan on [a, b], polished by golden section around the
// winning sample.
std::pair<double, double> refine_line(const std::function<double(double)>& h, double a, double b,
                                      int points, double tol) {
  double best_t = a, best_v = h(a);
  int best_k = 0;
  for (int k = 1; k < points; ++k) {
    const double t = a + (b - a) * k / (points - 1);
    const double v = h(t);
    if (v > best_v) best_t = t, best_v = v, best_k = k;
  }
  const double step = (b - a) / (points - 1);
  const double lo = std::max(a, a + (best_k - 1) * step);
  const double hi = std::min(b, a + (best_k + 1) * step);
  const double t = golden_section_max(h, lo, hi, tol);
  const double v = h(t);
  if (v > best_v) best_t = t, best_v = v;
  return {best_t, best_v};
}

}  // namespace

std::string to_string(Objective g) {
  switch (g) {
    case Objective::G1: return "g1";
    case Objective::G2: return "g2";
    case Objective::G3: return "g3";
  }
  return "g1";
}

Objective objective_from_string(const std::string& s) {
  if (s == "g1") return Objective::G1;
  if (s == "g2") return Objective::G2;
  if (s == "g3") return Objective::G3;
  throw std::invalid_argument("unknown objective '" + s + "' (expected g1, g2 or g3)");
}

bool in_region(const RegionPoint& p, double tol) {
  return p.x >= -tol && p.x <= 1.0 + tol && p.y >= -tol && p.y <= region_top(std::clamp(p.x, 0.0, 1.0)) + tol;
}

double g_value(Objective g, const RegionPoint& p, double lambda) {
  if (!in_region(p)) {
    throw Error(ErrorCode::OutsideRegion,
                "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") is not in E");
  }
  return g_raw(coeffs_for(g, lambda), p.x, p.y);
}

double g1(const RegionPoint& p, double lambda) { return g_value(Objective::G1, p, lambda); }
double g2(const RegionPoint& p, double lambda) { return g_value(Objective::G2, p, lambda); }
double g3(const RegionPoint& p, double lambda) { return g_value(Objective::G3, p, lambda); }

double g_partial_x(Objective g, const RegionPoint& p, double lambda) {
  const Coeffs k = coeffs_for(g, lambda);
  const double u = 1.0 + p.x;
  return -2.0 * p.x / 3.0 + 4.0 * p.y * p.y / (3.0 * u * u) + 2.0 * k.B * p.x + k.C;
}

double g_partial_y(Objective g, const RegionPoint& p, double lambda) {
  return -8.0 * p.y / (3.0 * (1.0 + p.x)) + coeffs_for(g, lambda).A;
}

double phi_curve(Objective g, double x, double l) {
  const double x2 = x * x, x3 = x2 * x;
  switch (g) {
    case Objective::G1: return 1 + l + (4.0 / 3.0 + l + l * l) * x - x2 - x3 / 3.0;
    case Objective::G2: return 0.5 * (1 + l) + (l * l + l + 4.0 / 3.0) * x - 0.5 * (1 + l) * x2 - x3 / 3.0;
    case Objective::G3: return 1 + l + (1.0 / 3.0 + 3 * (1 + l + l * l)) * x - (1 - l) * x2 - x3 / 3.0;
  }
  return 0.0;
}

double phi_derivative(Objective g, double x, double l) {
  switch (g) {
    case Objective::G1: return 4.0 / 3.0 + l + l * l - 2 * x - x * x;
    case Objective::G2: return l * l + l + 4.0 / 3.0 - (1 + l) * x - x * x;
    case Objective::G3: return 1.0 / 3.0 + 3 * (1 + l + l * l) - 2 * (1 - l) * x - x * x;
  }
  return 0.0;
}

double golden_section_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c, fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d, fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

MaxResult maximize_over_E(Objective g, double lambda, double tol, const OptimizerOptions& opts) {
  tol = std::max(tol, 1e-9);
  const int n = std::max(opts.grid, 3);
  const Coeffs k = coeffs_for(g, lambda);
  const double h = 1.0 / (n - 1);

  // Grid over E: column x_i, rows spread over [0, top(x_i)]. Parallel by
  // column blocks, merged in block order with the lexicographic tie-break.
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<Candidate> block_best(workers, Candidate{{0.0, 0.0}, -INFINITY});
  std::vector<std::pair<int, int>> block_index(workers, {0, 0});
  auto scan = [&](unsigned w) {
    for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) {
      const double x = i * h;
      const double top = region_top(x);
      for (int j = 0; j < n; ++j) {
        const Candidate c{{x, top * j * h}, g_raw(k, x, top * j * h)};
        if (better(c, block_best[w])) block_best[w] = c, block_index[w] = {i, j};
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  Candidate grid_best = block_best[0];
  std::pair<int, int> grid_idx = block_index[0];
  for (unsigned w = 1; w < workers; ++w) {
    if (better(block_best[w], grid_best)) grid_best = block_best[w], grid_idx = block_index[w];
  }

  MaxResult r;
  r.function = g;
  r.lambda = lambda;
  r.tolerance = tol;
  {
    const double lx = 1.0 + 2.0 * std::abs(k.B) + std::abs(k.C);
    const double ly = 4.0 / 3.0 + std::abs(k.A);
    r.grid_gap_bound = lx * h / 2 + ly * (h / 2 + 0.25 * h);
  }

  const double line_tol = std::min(tol, 1e-10);
  std::vector<Candidate> cands{grid_best};
  {
    auto [t, v] = refine_line([&](double y) { return g_raw(k, 0.0, y); }, 0.0, 0.5, opts.line_points, line_tol);
    cands.push_back({{0.0, t}, v});
  }
  {
    auto [t, v] = refine_line([&](double x) { return g_raw(k, x, 0.0); }, 0.0, 1.0, opts.line_points, line_tol);
    cands.push_back({{t, 0.0}, v});
  }
  {
    auto [t, v] = refine_line([&](double x) { return g_raw(k, x, region_top(x)); }, 0.0, 1.0,
                              opts.line_points, line_tol);
    cands.push_back({{t, region_top(t)}, v});
  }
  std::string method = "grid " + std::to_string(n) + "x" + std::to_string(n) +
                       " + golden-section on x=0, y=0, upper boundary";

  const auto [gi, gj] = grid_idx;
  if (gi > 0 && gi < n - 1 && gj > 0 && gj < n - 1) {
    // Interior champion: alternating golden-section sweeps in x and y.
    RegionPoint p = grid_best.p;
    for (int sweep = 0; sweep < 30; ++sweep) {
      const double xmax = std::sqrt(std::max(0.0, 1.0 - 2.0 * p.y));
      p.x = golden_section_max([&](double x) { return g_raw(k, x, p.y); }, std::max(0.0, p.x - h),
                               std::min(xmax, p.x + h), line_tol);
      p.y = golden_section_max([&](double y) { return g_raw(k, p.x, y); }, std::max(0.0, p.y - h),
                               std::min(region_top(p.x), p.y + h), line_tol);
    }
    cands.push_back({p, g_raw(k, p.x, p.y)});
    method += " + interior polish";
  }
  r.method = method;

  Candidate best = cands[0];
  for (const auto& c : cands) {
    if (c.value > best.value) best = c;
  }
  r.argmax = best.p;
  r.value = best.value;
  for (const auto& c : cands) {
    const double dist = std::hypot(c.p.x - best.p.x, c.p.y - best.p.y);
    if (dist > 1e-6 && best.value - c.value <= 1e-12 * std::max(1.0, std::abs(best.value))) {
      const bool seen = std::any_of(r.ties.begin(), r.ties.end(), [&](const RegionPoint& q) {
        return std::hypot(c.p.x - q.x, c.p.y - q.y) <= 1e-6;
      });
      if (!seen) r.ties.push_back(c.p);
    }
  }
  return r;
}

nlohmann::json to_json(const MaxResult& r) {
  nlohmann::json ties = nlohmann::json::array();
  for (const auto& p : r.ties) ties.push_back({p.x, p.y});
  return {{"function", to_string(r.function)},
          {"lambda", r.lambda},
          {"argmax", {r.argmax.x, r.argmax.y}},
          {"value", r.value},
          {"tolerance", r.tolerance},
          {"grid_gap_bound", r.grid_gap_bound},
          {"method", r.method},
          {"ties", std::move(ties)}};
}

bool MonotonicityReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return !c.asserted || c.holds; });
}

MonotonicityReport check_monotonicity_claims(double lambda, int grid) {
  MonotonicityReport rep;
  rep.lambda = lambda;

  for (Objective g : {Objective::G1, Objective::G2, Objective::G3}) {
    double lo = INFINITY;
    for (int i = 0; i < grid; ++i) {
      const double x = (i + 0.5) / grid;
      for (int j = 0; j < grid; ++j) {
        lo = std::min(lo, g_partial_x(g, {x, region_top(x) * (j + 0.5) / grid}, lambda));
      }
    }
    rep.claims.push_back({"d" + to_string(g) + "/dx > 0 on E", true, lo, lo > 0.0});
  }

  constexpr int kCurvePoints = 1001;
  auto curve_min = [&](Objective g) {
    double lo = INFINITY;
    for (int i = 0; i < kCurvePoints; ++i) lo = std::min(lo, phi_derivative(g, static_cast<double>(i) / (kCurvePoints - 1), lambda));
    return lo;
  };
  // phi_1' and phi_2' vanish at x = 1 exactly on their thresholds.
  constexpr double kFlat = 1e-12;
  const double m1 = curve_min(Objective::G1);
  rep.claims.push_back({"phi1' >= 0 on [0,1]", lambda >= kZalcman3Threshold, m1, m1 >= -kFlat});
  const double m2 = curve_min(Objective::G2);
  rep.claims.push_back({"phi2' >= 0 on [0,1]", lambda >= kGenZalcman24Threshold, m2, m2 >= -kFlat});
  const double m3 = curve_min(Objective::G3);
  rep.claims.push_back({"phi3' > 0 on [0,1]", true, m3, m3 > 0.0});
  return rep;
}

nlohmann::json to_json(const MonotonicityReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim", c.name}, {"asserted", c.asserted}, {"min_sampled", c.min_sampled}, {"holds", c.holds}});
  }
  return {{"lambda", r.lambda}, {"claims", std::move(claims)}, {"all_hold", r.all_hold()}};
}

double locate_g1_crossover(double lo, double hi, double tol) {
  auto off_corner = [](double l) { return maximize_over_E(Objective::G1, l).argmax.x < 1.0 - 1e-6; };
  if (!off_corner(lo) || off_corner(hi)) {
    throw std::invalid_argument("crossover is not bracketed by [lo, hi]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (off_corner(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ulam
