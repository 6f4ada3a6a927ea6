#include <cmath>
#include <random>

#include "doctest.h"
#include "ulam/error.hpp"
#include "ulam/functionals.hpp"
#include "ulam/optimizer.hpp"

using namespace ulam;

namespace {

const Objective kAll[] = {Objective::G1, Objective::G2, Objective::G3};

std::vector<double> grid_005() {
  std::vector<double> out;
  for (int i = 1; i <= 20; ++i) out.push_back(i / 20.0);
  return out;
}

}  // namespace

TEST_CASE("g examples") {
  for (double l : {0.1, 0.5, 1.0}) {
    for (auto g : kAll) CHECK(g_value(g, {0, 0}, l) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  CHECK(g1({1, 0}, 1.0) == doctest::Approx(4.0));
  CHECK(g1({0, 0.5}, 1.0) == doctest::Approx(2.0));
  CHECK(g2({1, 0}, 0.9) == doctest::Approx(2.71));
  CHECK(g2({0, 0.5}, 1.0) == doctest::Approx(1.0));
  CHECK(g3({1, 0}, 1.0) == doctest::Approx(11.0));
  CHECK(g3({0, 0.5}, 0.5) == doctest::Approx(1.5));
}

TEST_CASE("points outside E are rejected") {
  for (RegionPoint p : {RegionPoint{1.1, 0}, RegionPoint{-0.1, 0}, RegionPoint{0.5, 0.4}, RegionPoint{0, -0.01}}) {
    try {
      g_value(Objective::G1, p, 0.5);
      FAIL("expected OutsideRegion");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OutsideRegion);
    }
  }
  CHECK(in_region({0.5, region_top(0.5)}));
  CHECK_FALSE(in_region({0.5, region_top(0.5) + 1e-9}));
}

TEST_CASE("phi examples") {
  for (double l : {0.2, 0.7, 1.0}) {
    CHECK(phi_curve(Objective::G1, 1.0, l) == doctest::Approx((1 + l) * (1 + l)).epsilon(1e-14));
    CHECK(phi_curve(Objective::G2, 1.0, l) == doctest::Approx(1 + l + l * l).epsilon(1e-14));
    CHECK(phi_curve(Objective::G3, 1.0, l) == doctest::Approx(3 + 5 * l + 3 * l * l).epsilon(1e-14));
  }
  const double x0 = std::sqrt(0.25 + 0.5 + 7.0 / 3.0) - 1.0;
  CHECK(x0 == doctest::Approx(0.755942292142123).epsilon(1e-14));
  CHECK(phi_curve(Objective::G1, x0, 0.5) == doctest::Approx(2.3594369338477).epsilon(1e-13));
  CHECK(phi_derivative(Objective::G1, x0, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("property: upper-boundary identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 1; i <= 20; ++i) {
    const double l = i / 20.0;
    for (int s = 0; s < 1000; ++s) {
      const double x = u(rng);
      for (auto g : kAll) {
        CHECK(std::abs(g_value(g, {x, region_top(x)}, l) - phi_curve(g, x, l)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("analytic derivatives agree with central differences") {
  constexpr double h = 1e-6;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)); };
  for (int s = 0; s < 500; ++s) {
    const double l = 0.05 + 0.95 * u(rng);
    const double x = h + (1 - 2 * h) * u(rng);
    const double y = (region_top(x) - 2 * h) * u(rng) + h;
    for (auto g : kAll) {
      const double dx = (g_value(g, {x + h, y}, l) - g_value(g, {x - h, y}, l)) / (2 * h);
      const double dy = (g_value(g, {x, y + h}, l) - g_value(g, {x, y - h}, l)) / (2 * h);
      CHECK(close(g_partial_x(g, {x, y}, l), dx));
      CHECK(close(g_partial_y(g, {x, y}, l), dy));
      const double dphi = (phi_curve(g, x + h, l) - phi_curve(g, x - h, l)) / (2 * h);
      CHECK(close(phi_derivative(g, x, l), dphi));
    }
  }
}

TEST_CASE("golden_section_max") {
  const double t = golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(t - 0.3) <= 1e-9);
  const double e = golden_section_max([](double x) { return x; }, 0.0, 1.0, 1e-10);
  CHECK(e == doctest::Approx(1.0).epsilon(1e-9));
  // A quadratic peak is resolved only to about sqrt(machine epsilon).
  const double c = golden_section_max([](double x) { return std::cos(x); }, -1.0, 2.0, 1e-12);
  CHECK(std::abs(c) <= 5e-8);
}

TEST_CASE("maximize_over_E examples") {
  const auto a = maximize_over_E(Objective::G1, 1.0);
  CHECK(a.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::hypot(a.argmax.x - 1.0, a.argmax.y) <= 1e-6);
  CHECK(in_region(a.argmax));

  const auto b = maximize_over_E(Objective::G1, 0.5);
  CHECK(std::abs(b.value - 2.3594369338477) <= 1e-9);
  CHECK(std::abs(b.argmax.x - 0.755942292142123) <= 1e-5);
  CHECK(std::abs(b.argmax.y - region_top(b.argmax.x)) <= 1e-12);
  CHECK(b.grid_gap_bound > 0.0);

  const auto c = maximize_over_E(Objective::G2, 0.9);
  CHECK(c.value == doctest::Approx(2.71).epsilon(1e-12));
  CHECK(std::hypot(c.argmax.x - 1.0, c.argmax.y) <= 1e-4);

  const auto j = to_json(b);
  for (const char* key : {"function", "lambda", "argmax", "value", "tolerance"}) CHECK(j.contains(key));
  CHECK(j["function"] == "g1");
}

TEST_CASE("maximize_over_E is within tolerance of a refined local evaluation") {
  for (double l : {0.3, 0.8}) {
    for (auto g : kAll) {
      const auto r = maximize_over_E(g, l);
      CHECK(std::abs(r.value - g_value(g, r.argmax, l)) <= r.tolerance);
    }
  }
}

TEST_CASE("property: g1 regime agreement with the Zalcman(3) bound") {
  for (double l : grid_005()) {
    const auto r = maximize_over_E(Objective::G1, l);
    const double bound = *bound_for(FunctionalKind::zalcman(3), l).value;
    CHECK_MESSAGE(std::abs(l * r.value - bound) <= 1e-6, "lambda=" << l);
  }
}

TEST_CASE("property: g2 corner dominance") {
  for (double l : grid_005()) {
    if (l < kGenZalcman24Threshold) continue;
    const auto r = maximize_over_E(Objective::G2, l);
    CHECK(std::hypot(r.argmax.x - 1.0, r.argmax.y) <= 1e-4);
    CHECK(std::abs(l * r.value - l * (1 + l + l * l)) <= 1e-6);
  }
}

TEST_CASE("property: g3 reproduces the Krushkal(5,1) bound") {
  for (double l : grid_005()) {
    const auto r = maximize_over_E(Objective::G3, l);
    CHECK(std::abs(l * r.value - l * (3 + 5 * l + 3 * l * l)) <= 1e-6);
  }
}

TEST_CASE("monotonicity examples") {
  const auto one = check_monotonicity_claims(1.0);
  CHECK(one.all_hold());
  for (const auto& c : one.claims) {
    CHECK(c.asserted);
    CHECK(c.holds);
    if (c.name.find("phi") == std::string::npos) CHECK(c.min_sampled > 0.0);
  }

  const auto half = check_monotonicity_claims(0.5);
  CHECK(half.all_hold());
  CHECK(phi_derivative(Objective::G1, 0.0, 0.5) > 0.0);
  CHECK(phi_derivative(Objective::G1, 1.0, 0.5) < 0.0);
  for (const auto& c : half.claims) {
    if (c.name.rfind("phi1", 0) == 0) {
      CHECK_FALSE(c.asserted);
      CHECK(c.min_sampled < 0.0);
    }
  }

  const auto nine = check_monotonicity_claims(0.9);
  for (const auto& c : nine.claims) {
    if (c.name.rfind("phi2", 0) == 0) {
      CHECK(c.asserted);
      CHECK(c.min_sampled >= 0.81 - 2.0 / 3.0 - 1e-12);
    }
  }
}

TEST_CASE("property: asserted monotonicity claims hold across lambda") {
  for (double l : grid_005()) CHECK_MESSAGE(check_monotonicity_claims(l, 200).all_hold(), "lambda=" << l);
}

TEST_CASE("g1 regime crossover sits at the root of lambda^2 + lambda - 5/3") {
  const double c = locate_g1_crossover();
  CHECK(std::abs(c - kZalcman3Threshold) <= 0.002);
  CHECK(std::abs(c - 0.2993) > 0.5);
}
