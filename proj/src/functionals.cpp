#include "ulam/functionals.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <regex>

#include "ulam/error.hpp"

namespace ulam {

namespace {

Complex ipow(Complex z, int p) {
  Complex r = 1.0;
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

}  // namespace

int FunctionalKind::max_index() const {
  switch (family) {
    case Family::Zalcman: return std::max(first, 2 * first - 1);
    case Family::GenZalcman: return std::max({first, second, first + second - 1});
    case Family::Krushkal: return std::max(first, 2);
    case Family::Hankel: return second + 2 * first - 2;
  }
  return 0;
}

std::string FunctionalKind::name() const {
  switch (family) {
    case Family::Zalcman: return "Zalcman(" + std::to_string(first) + ")";
    case Family::GenZalcman:
      return "GenZalcman(" + std::to_string(first) + "," + std::to_string(second) + ")";
    case Family::Krushkal:
      return "Krushkal(" + std::to_string(first) + "," + std::to_string(second) + ")";
    case Family::Hankel: return "Hankel(" + std::to_string(first) + "," + std::to_string(second) + ")";
  }
  return "?";
}

FunctionalKind parse_kind(const std::string& name) {
  static const std::regex re(R"(\s*(Zalcman|GenZalcman|Krushkal|Hankel)\((\d+)(?:,\s*(\d+))?\)\s*)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) {
    throw Error(ErrorCode::UnsupportedKind, "cannot parse functional '" + name + "'");
  }
  const int a = std::stoi(m[2]);
  const bool has_b = m[3].matched;
  const int b = has_b ? std::stoi(m[3]) : 0;
  const std::string fam = m[1];
  if (fam == "Zalcman" && !has_b) return FunctionalKind::zalcman(a);
  if (fam == "GenZalcman" && has_b) return FunctionalKind::gen_zalcman(a, b);
  if (fam == "Krushkal" && has_b) return FunctionalKind::krushkal(a, b);
  if (fam == "Hankel" && has_b) return FunctionalKind::hankel(a, b);
  throw Error(ErrorCode::UnsupportedKind, "wrong arity in '" + name + "'");
}

const std::array<FunctionalKind, 8>& supported_kinds() {
  static const std::array<FunctionalKind, 8> kinds{
      FunctionalKind::zalcman(2),     FunctionalKind::zalcman(3),
      FunctionalKind::gen_zalcman(2, 3), FunctionalKind::gen_zalcman(2, 4),
      FunctionalKind::krushkal(4, 1), FunctionalKind::krushkal(5, 1),
      FunctionalKind::hankel(2, 2),   FunctionalKind::hankel(3, 1)};
  return kinds;
}

Complex functional_value(const FunctionalKind& kind, const std::function<Complex(int)>& a) {
  if (kind.first < 1 || (kind.family != FunctionalKind::Family::Zalcman && kind.second < 1) ||
      kind.max_index() > 5) {
    throw Error(ErrorCode::IndexOutOfRange, kind.name() + " needs coefficients beyond a_5");
  }
  switch (kind.family) {
    case FunctionalKind::Family::Zalcman: {
      const int n = kind.first;
      return a(n) * a(n) - a(2 * n - 1);
    }
    case FunctionalKind::Family::GenZalcman:
      return a(kind.first) * a(kind.second) - a(kind.first + kind.second - 1);
    case FunctionalKind::Family::Krushkal: {
      const int n = kind.first, p = kind.second;
      return ipow(a(n), p) - ipow(a(2), p * (n - 1));
    }
    case FunctionalKind::Family::Hankel: {
      const int q = kind.first, n = kind.second;
      Eigen::MatrixXcd h(q, q);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) h(i, j) = a(n + i + j);
      return h.determinant();
    }
  }
  return {};
}

double eval_functional(const FunctionalKind& kind, const MemberSpec& m) {
  return std::abs(functional_value(kind, [&](int n) { return m.coefficient(n); }));
}

std::string ValidIf::describe() const {
  std::string out;
  if (lambda_min) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "lambda>=%.15g", *lambda_min);
    out = buf;
  }
  if (requires_a3) out += out.empty() ? "requires-a3" : ";requires-a3";
  return out.empty() ? "unconditional" : out;
}

BoundRecord bound_for(const FunctionalKind& kind, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1]");
  }
  const double l = lambda;
  BoundRecord b{kind, l, std::nullopt, {}, false, std::nullopt, "closed-form"};
  const std::string f_lambda = "f_lambda";

  if (kind == FunctionalKind::zalcman(2)) {
    b.value = l;
    b.sharp = true;
    b.witness = f_lambda;
  } else if (kind == FunctionalKind::zalcman(3)) {
    b.valid_iff.requires_a3 = true;
    if (l >= kZalcman3Threshold) {
      b.value = l * (1 + l) * (1 + l);
      b.valid_iff.lambda_min = kZalcman3Threshold;
      b.sharp = true;
      b.witness = f_lambda;
    } else {
      const double s = l * l + l + 7.0 / 3.0;
      b.value = l * ((2.0 / 3.0) * std::pow(s, 1.5) - 1.0 - l * l);
      b.regime = "curve-max";
    }
  } else if (kind == FunctionalKind::gen_zalcman(2, 3)) {
    b.value = l * (1 + l);
    b.sharp = true;
    b.witness = f_lambda;
  } else if (kind == FunctionalKind::gen_zalcman(2, 4)) {
    b.valid_iff.requires_a3 = true;
    b.valid_iff.lambda_min = kGenZalcman24Threshold;
    if (l >= kGenZalcman24Threshold) {
      b.value = l * (1 + l + l * l);
      b.sharp = true;
      b.witness = f_lambda;
    } else {
      b.regime = "silent";
    }
  } else if (kind == FunctionalKind::krushkal(4, 1)) {
    b.value = 2 * l * (1 + l);
    b.sharp = true;
    b.witness = f_lambda;
  } else if (kind == FunctionalKind::krushkal(5, 1)) {
    b.value = l * (3 + 5 * l + 3 * l * l);
    b.valid_iff.requires_a3 = true;
    b.sharp = true;
    b.witness = f_lambda;
  } else if (kind == FunctionalKind::hankel(2, 2)) {
    b.value = l * (l + 1) / 2;
  } else if (kind == FunctionalKind::hankel(3, 1)) {
    b.value = l * l / 4;
    b.sharp = true;
    b.witness = "hankel3";
  } else {
    throw Error(ErrorCode::UnsupportedKind, kind.name() + " has no known bound");
  }
  return b;
}

nlohmann::json to_json(const BoundRecord& b) {
  nlohmann::json j{{"kind", b.kind.name()},
                   {"lambda", b.lambda},
                   {"value", nullptr},
                   {"valid_iff", b.valid_iff.describe()},
                   {"sharp", b.sharp},
                   {"witness", nullptr},
                   {"regime", b.regime}};
  if (b.value) j["value"] = *b.value;
  if (b.witness) j["witness"] = *b.witness;
  return j;
}

std::vector<BoundCheck> verify_member_against_bounds(const MemberSpec& m) {
  const bool a3_ok = a3_condition_holds(m);
  std::vector<BoundCheck> out;
  out.reserve(supported_kinds().size());
  for (const auto& kind : supported_kinds()) {
    BoundCheck c{kind, functional_value(kind, [&](int n) { return m.coefficient(n); }), 0.0, std::nullopt};
    c.value = std::abs(c.signed_value);
    const BoundRecord rec = bound_for(kind, m.lambda);
    c.bound = rec.value;
    c.not_applicable = !rec.value.has_value();
    c.conditional_skipped = rec.valid_iff.requires_a3 && !a3_ok && !c.not_applicable;
    c.ok = !c.bound || c.value <= *c.bound + kBoundTolerance;
    out.push_back(c);
  }
  return out;
}

}  // namespace ulam
