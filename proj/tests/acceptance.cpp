// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ulam/error.hpp"
#include "ulam/functionals.hpp"
#include "ulam/harness.hpp"
#include "ulam/optimizer.hpp"

using namespace ulam;

namespace {

const std::vector<double> kGrid = RunConfig::default_lambda_grid();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

// 1. Sharpness on the witnesses.
void sharpness(Outcome& o) {
  double worst = 0.0;
  for (double l : kGrid) {
    const auto f = extremal_f_lambda(l);
    auto a = [&](int n) { return f.coefficient(n); };
    const double expect[][2] = {
        {std::abs(a(2) * a(2) - a(3)), l},
        {std::abs(a(3) * a(3) - a(5)), l * (1 + l) * (1 + l)},
        {std::abs(a(2) * a(3) - a(4)), l * (1 + l)},
        {std::abs(a(2) * a(4) - a(5)), l * (1 + l + l * l)},
        {std::abs(a(4) - a(2) * a(2) * a(2)), 2 * l * (1 + l)},
        {std::abs(a(5) - std::pow(a(2), 4)), l * (3 + 5 * l + 3 * l * l)},
        {eval_functional(FunctionalKind::hankel(3, 1), extremal_hankel3(l)), l * l / 4},
    };
    for (const auto& e : expect) {
      const double d = std::abs(e[0] - e[1]);
      worst = std::max(worst, d);
      o.require(d <= 1e-10, "lambda=" + format_number(l));
    }
  }
  o.detail << "max |value - bound| = " << worst;
}

// 2. lambda = 1 specialization.
void lambda_one(Outcome& o) {
  const double h22 = *bound_for(FunctionalKind::hankel(2, 2), 1.0).value;
  const double h31 = *bound_for(FunctionalKind::hankel(3, 1), 1.0).value;
  o.require(h22 == 1.0, "H2(2) bound");
  o.require(h31 == 0.25, "H3(1) bound");
  o.detail << "H2(2) bound = " << h22 << ", H3(1) bound = " << h31;
}

// 3. Optimizer maxima against the closed-form bounds.
void optimizer_vs_bounds(Outcome& o) {
  double worst = 0.0;
  auto agree = [&](double got, double want, const std::string& what) {
    worst = std::max(worst, std::abs(got - want));
    o.require(std::abs(got - want) <= 1e-6, what);
  };
  for (double l : kGrid) {
    const std::string at = " at lambda=" + format_number(l);
    agree(l * maximize_over_E(Objective::G1, l).value, *bound_for(FunctionalKind::zalcman(3), l).value, "g1" + at);
    if (l >= kGenZalcman24Threshold) agree(l * maximize_over_E(Objective::G2, l).value, l * (1 + l + l * l), "g2" + at);
    agree(l * maximize_over_E(Objective::G3, l).value, l * (3 + 5 * l + 3 * l * l), "g3" + at);
  }
  const double spot = 0.5 * maximize_over_E(Objective::G1, 0.5).value;
  o.require(std::abs(spot - 1.17972) <= 1e-5, "spot value at lambda=0.5");
  o.detail << "max diff = " << worst << ", lambda*max g1 at 0.5 = " << format_number(spot);
}

// 4. Regime crossover for g1.
void crossover(Outcome& o) {
  const double c = locate_g1_crossover();
  const double d = std::abs(c - kZalcman3Threshold);
  o.require(d <= 0.002, "crossover");
  o.detail << "empirical " << format_number(c) << " vs " << format_number(kZalcman3Threshold) << " (diff " << d
           << "; distance to 0.2993 is " << format_number(std::abs(c - 0.2993)) << ")";
}

// 5. Membership verification.
void membership(Outcome& o) {
  double worst = 0.0, min_margin = INFINITY;
  for (double l : kGrid) {
    const double dev = check_membership(extremal_f_lambda(l), MembershipGrid{{0.99}, 2048}).max_dev;
    worst = std::max(worst, std::abs(dev - l * 0.99 * 0.99));
    o.require(std::abs(dev - l * 0.99 * 0.99) <= 1e-9, "f_lambda at lambda=" + format_number(l));
    std::vector<MemberSpec> catalog{extremal_f_lambda(l), extremal_hankel3(l)};
    for (double phi : {0.3, 1.0, 2.5, std::numbers::pi}) catalog.push_back(extremal_rotation(l, phi));
    for (const auto& m : catalog) {
      const auto rep = check_membership(m, MembershipGrid{{0.999}, 2048});
      min_margin = std::min(min_margin, rep.margin);
      o.require(rep.margin > 0.0 && rep.denom_ok, std::string(to_string(m.provenance)) + " margin");
    }
  }
  o.detail << "max |dev - lambda r^2| = " << worst << ", min catalog margin at 0.999 = " << min_margin;
}

// 6. Closed-form coefficients against series inversion.
void coefficient_crosscheck(Outcome& o) {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double l = 1.0 - u(rng);
    const Complex a2 = std::polar((1 + l) * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    const CoefTriple t = sample_triple(rng);
    const PowerSeries q(std::vector<Complex>{1.0, -a2, -l * t.c1, -l * t.c2, -l * t.c3});
    const PowerSeries f = mul_z(reciprocal(PowerSeries(q.coeffs(), 6)));
    const auto closed = coefficients_from_schwarz(l, a2, t);
    for (int n = 3; n <= 5; ++n) {
      const double d = std::abs(closed[static_cast<size_t>(n - 3)] - f[n]);
      worst = std::max(worst, d);
      o.require(d <= 1e-12, "draw " + std::to_string(i));
    }
  }
  o.detail << "1000 draws, max diff = " << worst;
}

std::vector<MemberSpec> accepted_members(double l, int count, std::uint64_t stream, int order = kDefaultOrder) {
  auto rng = make_stream(707, stream);
  std::vector<MemberSpec> out;
  for (int i = 0; i < count; ++i) {
    const Draw d = draw_candidate(rng, l, 0.1);
    try {
      out.push_back(build_member(l, d.a2, make_schwarz(d.psi), Provenance::Generated, order));
    } catch (const Error&) {
    }
  }
  return out;
}

// 7. Property suites.
void properties(Outcome& o) {
  double rot = 0.0, trunc = 0.0, a2_excess = 0.0;
  int certified = 0, members = 0;
  for (size_t li = 0; li < kGrid.size(); ++li) {
    const double l = kGrid[li];
    const auto ms = accepted_members(l, 300, li);
    const auto ms24 = accepted_members(l, 300, li, kDefaultOrder + 8);
    o.require(ms.size() == ms24.size(), "same acceptance at both orders");
    for (size_t i = 0; i < ms.size(); ++i) {
      const auto& m = ms[i];
      ++members;
      const auto r = rotate(m, 0.1 + static_cast<double>(i));
      for (const auto& k : supported_kinds()) rot = std::max(rot, std::abs(eval_functional(k, r) - eval_functional(k, m)));
      o.require(is_admissible_triple(m.schwarz.triple(), 1e-9), "admissibility");
      ++certified;
      a2_excess = std::max(a2_excess, std::abs(m.a2) - (1 + l));
      for (int n = 1; n <= 5 && i < ms24.size(); ++n) trunc = std::max(trunc, std::abs(m.coefficient(n) - ms24[i].coefficient(n)));
    }
    for (double phi : {0.0, 0.7, 2.0, 4.0}) {
      const double d = std::abs(std::abs(extremal_rotation(l, phi).a2) - (1 + l));
      o.require(d <= 1e-12, "rotation family |a2| = 1 + lambda");
    }
  }
  // Certification alone, independent of membership.
  auto rng = make_stream(708, 0);
  for (int i = 0; i < 20000; ++i) {
    try {
      const SchwarzFn w = make_schwarz(draw_candidate(rng, 0.5, 0.1).psi);
      o.require(is_admissible_triple(w.triple(), 1e-9), "admissibility of certified SchwarzFn");
      ++certified;
    } catch (const Error&) {
    }
  }
  o.require(rot <= 1e-10, "rotation invariance");
  o.require(a2_excess <= 1e-12, "|a2| <= 1 + lambda");
  o.require(trunc <= 1e-13, "truncation stability");
  o.detail << members << " members, " << certified << " certified; rotation " << rot << ", truncation " << trunc
           << ", max |a2|-(1+lambda) = " << a2_excess;
}

// 8. Randomized soundness with the default configuration.
void soundness(Outcome& o) {
  const RunConfig cfg;
  const auto body = cmd_random_search(cfg)["body"];
  const int total = body["total_violations"].get<int>();
  o.require(total == 0, "violations");
  double worst_ratio = INFINITY;
  int accepted = 0, checked = 0;
  for (const auto& pl : body["per_lambda"]) {
    accepted += pl["accepted"].get<int>();
    for (const auto& row : pl["functionals"]) {
      if (!row["sharp"].get<bool>() || row["bound"].is_null()) continue;
      const double bound = row["bound"].get<double>();
      const double near = row["near_extremal_max"].is_null() ? 0.0 : row["near_extremal_max"].get<double>();
      worst_ratio = std::min(worst_ratio, near / bound);
      ++checked;
      o.require(near >= 0.95 * bound, row["kind"].get<std::string>() + " at lambda=" + format_number(pl["lambda"]));
    }
  }
  o.detail << accepted << " accepted members, " << total << " violations, worst near-extremal max/bound = "
           << format_number(worst_ratio) << " over " << checked << " sharp bounds";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"sharpness reproduction", sharpness},
      {"lambda = 1 specialization", lambda_one},
      {"optimizer vs closed-form bounds", optimizer_vs_bounds},
      {"g1 regime threshold", crossover},
      {"membership verification", membership},
      {"coefficient cross-check", coefficient_crosscheck},
      {"property suites", properties},
      {"randomized soundness", soundness},
  };
  int failures = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.str().c_str(), secs);
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
