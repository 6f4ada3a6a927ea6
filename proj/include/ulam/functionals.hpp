#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ulam/member.hpp"

namespace ulam {

/// Positive root of lambda^2 + lambda - 5/3, i.e. (sqrt(23/3) - 1)/2. Above it
/// the Zalcman(3) maximum sits at |c1| = 1.
inline const double kZalcman3Threshold = (std::sqrt(23.0 / 3.0) - 1.0) / 2.0;
/// sqrt(2/3): lower end of the proven GenZalcman(2,4) regime.
inline const double kGenZalcman24Threshold = std::sqrt(2.0 / 3.0);

inline constexpr double kBoundTolerance = 1e-9;

struct FunctionalKind {
  enum class Family { Zalcman, GenZalcman, Krushkal, Hankel };

  Family family;
  /// Zalcman(n): (n, 0); GenZalcman(m, n): (m, n); Krushkal(n, p): (n, p);
  /// Hankel(q, n): (q, n).
  int first;
  int second;

  static constexpr FunctionalKind zalcman(int n) { return {Family::Zalcman, n, 0}; }
  static constexpr FunctionalKind gen_zalcman(int m, int n) { return {Family::GenZalcman, m, n}; }
  static constexpr FunctionalKind krushkal(int n, int p) { return {Family::Krushkal, n, p}; }
  static constexpr FunctionalKind hankel(int q, int n) { return {Family::Hankel, q, n}; }

  /// Largest coefficient index the functional reads.
  int max_index() const;
  std::string name() const;

  friend bool operator==(const FunctionalKind&, const FunctionalKind&) = default;
};

/// Parses names such as "Zalcman(3)" or "Hankel(3,1)".
FunctionalKind parse_kind(const std::string& name);

/// The eight instances for which bounds are known.
const std::array<FunctionalKind, 8>& supported_kinds();

/// Signed value from a coefficient accessor n -> a_n (a_1 = 1).
/// Throws IndexOutOfRange if the kind reads past a_5.
Complex functional_value(const FunctionalKind& kind, const std::function<Complex(int)>& a);

/// |functional| on a member.
double eval_functional(const FunctionalKind& kind, const MemberSpec& m);

struct ValidIf {
  bool requires_a3 = false;
  std::optional<double> lambda_min;

  std::string describe() const;
};

struct BoundRecord {
  FunctionalKind kind;
  double lambda = 0.0;
  /// Empty where nothing is proven (GenZalcman(2,4) below sqrt(2/3)).
  std::optional<double> value;
  ValidIf valid_iff;
  bool sharp = false;
  std::optional<std::string> witness;
  /// "closed-form", "curve-max" (Zalcman(3) below the threshold, maximum inside the upper curve) or "silent".
  std::string regime;
};

/// Throws UnsupportedKind for kinds outside supported_kinds().
BoundRecord bound_for(const FunctionalKind& kind, double lambda);

nlohmann::json to_json(const BoundRecord& b);

struct BoundCheck {
  FunctionalKind kind;
  Complex signed_value;
  double value = 0.0;
  std::optional<double> bound;
  /// value <= bound + 1e-9 (true when no bound applies).
  bool ok = true;
  bool conditional_skipped = false;
  bool not_applicable = false;

  /// A genuine counterexample to an asserted bound.
  bool violation() const { return !ok && !conditional_skipped && !not_applicable; }
};

std::vector<BoundCheck> verify_member_against_bounds(const MemberSpec& m);

}  // namespace ulam
