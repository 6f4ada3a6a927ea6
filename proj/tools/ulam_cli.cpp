// Command-line driver for the U(lambda) coefficient-bound laboratory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ulam/error.hpp"
#include "ulam/harness.hpp"

namespace {

struct Flags {
  std::string config;
  std::string lambda_grid;
  int samples = 0;
  std::uint64_t seed = 0;
  int order = 0;
  std::string out;
  std::string format;
  std::string golden;
  std::string which = "g1";
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key=value config file (flags win)");
  sub->add_option("--lambda-grid", f.lambda_grid, "comma list or start:stop:step");
  sub->add_option("--samples", f.samples, "random members per lambda");
  sub->add_option("--seed", f.seed, "master seed");
  sub->add_option("--order", f.order, "series truncation order");
  sub->add_option("--out", f.out, "report path (directory for reproduce-all)");
  sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

ulam::RunConfig resolve(const CLI::App* sub, const Flags& f) {
  ulam::RunConfig cfg;
  if (!f.config.empty()) cfg = ulam::load_config_file(f.config, cfg);
  if (sub->count("--lambda-grid")) cfg.lambda_grid = ulam::parse_lambda_grid(f.lambda_grid);
  if (sub->count("--samples")) cfg.samples_per_lambda = f.samples;
  if (sub->count("--seed")) cfg.seed = f.seed;
  if (sub->count("--order")) cfg.truncation_order = f.order;
  if (sub->count("--out")) cfg.out = f.out;
  if (sub->count("--format")) cfg.format = f.format;
  if (sub->get_option_no_throw("--golden") && sub->count("--golden")) cfg.golden_table = f.golden;
  cfg.validate();
  return cfg;
}

void emit(const ulam::RunConfig& cfg, const nlohmann::json& report) {
  const std::string text = cfg.format == "csv" ? ulam::report_to_csv(report) : report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw ulam::Error(ulam::ErrorCode::ConfigError, "cannot write " + cfg.out);
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient-functional verification for the class U(lambda)"};
  app.require_subcommand(1);
  Flags flags;

  auto* sharp = app.add_subcommand("verify-sharpness", "evaluate sharp bounds on their extremal functions");
  auto* search = app.add_subcommand("random-search", "randomized soundness sweep over generated members");
  auto* maximize = app.add_subcommand("maximize", "maximize g1, g2 or g3 over the region E");
  auto* mono = app.add_subcommand("monotonicity", "sample the monotonicity claims behind the bounds");
  auto* all = app.add_subcommand("reproduce-all", "run everything and write report.json + bound_table.csv");
  for (auto* sub : {sharp, search, maximize, mono, all}) add_common(sub, flags);
  maximize->add_option("--which", flags.which, "g1, g2 or g3")->check(CLI::IsMember({"g1", "g2", "g3"}));
  all->add_option("--golden", flags.golden, "golden bound table to diff against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sharp) {
      const auto cfg = resolve(sharp, flags);
      emit(cfg, ulam::cmd_verify_sharpness(cfg));
      return 0;
    }
    if (*search) {
      const auto cfg = resolve(search, flags);
      const auto report = ulam::cmd_random_search(cfg);
      emit(cfg, report);
      return report["body"]["total_violations"].get<int>() == 0 ? 0 : 1;
    }
    if (*maximize) {
      const auto cfg = resolve(maximize, flags);
      const auto report = ulam::cmd_maximize(cfg, ulam::objective_from_string(flags.which));
      emit(cfg, report);
      const auto& body = report["body"];
      const bool ok = body["all_agree"].get<bool>() &&
                      (!body.contains("crossover") || body["crossover"]["within_0_002"].get<bool>());
      return ok ? 0 : 1;
    }
    if (*mono) {
      const auto cfg = resolve(mono, flags);
      const auto report = ulam::cmd_monotonicity(cfg);
      emit(cfg, report);
      return report["body"]["all_hold"].get<bool>() ? 0 : 1;
    }
    if (*all) {
      const auto cfg = resolve(all, flags);
      const auto res = ulam::cmd_reproduce_all(cfg);
      if (res.golden_diff != 0) {
        std::cerr << "bound table differs from golden file in " << res.golden_diff << " line(s)\n";
      }
      return res.ok ? 0 : 1;
    }
  } catch (const ulam::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ulam::ErrorCode::ConfigError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
