#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ulam/functionals.hpp"
#include "ulam/member.hpp"
#include "ulam/optimizer.hpp"

namespace ulam {

inline constexpr double kSharpnessTolerance = 1e-10;
inline constexpr double kOptimizerAgreement = 1e-6;
inline constexpr double kCornerTolerance = 1e-4;

struct RunConfig {
  std::vector<double> lambda_grid = default_lambda_grid();
  int samples_per_lambda = 10000;
  std::uint64_t seed = 20200817;
  int truncation_order = kDefaultOrder;
  MembershipGrid membership;
  OptimizerOptions optimizer;
  double near_extremal_fraction = 0.1;
  /// Report file for single commands, output directory for reproduce-all.
  std::string out;
  std::string format = "json";
  /// reproduce-all: CSV bound table to diff against.
  std::string golden_table;

  static std::vector<double> default_lambda_grid();
  /// Throws ConfigError.
  void validate() const;
};

/// "0.1,0.5,1" or "start:stop:step" (inclusive).
std::vector<double> parse_lambda_grid(std::string_view text);

/// Applies key = value lines ('#' comments, optional [section] headers and
/// quoted strings are accepted). Unknown keys are a ConfigError.
RunConfig apply_config_text(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

/// Independent stream for work unit `stream` under the master seed.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Parameters of one random candidate member.
struct Draw {
  Complex a2;
  std::vector<Complex> psi;
  bool near_extremal = false;
};

/// 1 - near_extremal_fraction of draws: |a2| uniform on [0, 1+lambda],
/// random psi of degree 0..4 scaled below the unit sup norm. The rest sit
/// next to the catalog witnesses: half near the rotation family
/// (|a2| = 1+lambda-eps), half near the Hankel witness (psi ~ e^{it} z).
Draw draw_candidate(std::mt19937_64& rng, double lambda, double near_extremal_fraction);

/// Throws SharpnessFailure when |value - bound| > 1e-10.
void check_sharpness(const FunctionalKind& kind, double lambda, double value, double bound);

/// Each command returns {"header": {...}, "body": {...}}; only the header
/// carries a timestamp.
nlohmann::json cmd_verify_sharpness(const RunConfig& cfg);
nlohmann::json cmd_random_search(const RunConfig& cfg);
nlohmann::json cmd_maximize(const RunConfig& cfg, Objective which);
nlohmann::json cmd_monotonicity(const RunConfig& cfg);

struct ReproduceResult {
  nlohmann::json report;
  std::string bound_table;
  /// Lines differing from the golden table (0 when none was given).
  int golden_diff = 0;
  bool ok = false;
};

/// Runs every command, writes report.json and bound_table.csv under cfg.out.
ReproduceResult cmd_reproduce_all(const RunConfig& cfg);

/// CSV (kind, lambda, bound, observed_max, sharp, witness, regime) from a
/// random-search report.
std::string bound_table_csv(const nlohmann::json& search_report);

/// Flat CSV rendering of a command report.
std::string report_to_csv(const nlohmann::json& report);

/// Number of lines that differ (including missing ones).
int diff_lines(std::string_view a, std::string_view b);

/// %.15g, the number format used throughout CSV output.
std::string format_number(double v);

}  // namespace ulam
