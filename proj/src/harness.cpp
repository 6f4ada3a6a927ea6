#include "ulam/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <future>
#include <map>
#include <numbers>
#include <sstream>

#include "ulam/error.hpp"

namespace ulam {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "bad number for " + what + ": '" + s + "'");
  }
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "bad integer for " + what + ": '" + s + "'");
  }
}

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json wrap(const std::string& command, json body) {
  return {{"header", {{"tool", "ulam-cli"}, {"command", command}, {"generated_at", timestamp()}}},
          {"body", std::move(body)}};
}

json config_json(const RunConfig& cfg) {
  return {{"lambda_grid", cfg.lambda_grid},
          {"samples_per_lambda", cfg.samples_per_lambda},
          {"seed", cfg.seed},
          {"truncation_order", cfg.truncation_order},
          {"membership_radii", cfg.membership.radii},
          {"membership_angles", cfg.membership.angles},
          {"optimizer_grid", cfg.optimizer.grid},
          {"near_extremal_fraction", cfg.near_extremal_fraction}};
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::vector<Complex> random_poly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> p(static_cast<size_t>(degree) + 1);
  for (auto& c : p) c = {normal(rng), normal(rng)};
  return p;
}

// Per-functional aggregate for one lambda.
struct KindStats {
  double observed_max = -1.0;  // over members the bound is asserted for
  json observed_member;
  double observed_max_all = -1.0;  // regardless of the a3-condition
  double near_extremal_max = -1.0;
  int exceed_without_a3 = 0;
};

json member_ref(const MemberSpec& m, std::uint64_t stream, int index) {
  return {{"hash", content_hash(m)}, {"stream", stream}, {"index", index}, {"member", to_json(m)}};
}

json search_one_lambda(const RunConfig& cfg, size_t stream) {
  const double lambda = cfg.lambda_grid[stream];
  auto rng = make_stream(cfg.seed, stream);
  const auto& kinds = supported_kinds();
  std::vector<KindStats> stats(kinds.size());
  std::map<std::string, int> rejections;
  json violations = json::array();
  int accepted = 0, near_draws = 0, near_accepted = 0, a2_bound_violations = 0;
  double max_a2_excess = -INFINITY;

  for (int i = 0; i < cfg.samples_per_lambda; ++i) {
    const Draw d = draw_candidate(rng, lambda, cfg.near_extremal_fraction);
    near_draws += d.near_extremal;
    MemberSpec m;
    try {
      m = build_member(lambda, d.a2, make_schwarz(d.psi), Provenance::Generated, cfg.truncation_order,
                       cfg.membership);
    } catch (const Error& e) {
      ++rejections[std::string(to_string(e.code()))];
      continue;
    }
    ++accepted;
    near_accepted += d.near_extremal;
    const double excess = std::abs(m.a2) - (1.0 + lambda);
    max_a2_excess = std::max(max_a2_excess, excess);
    if (excess > 1e-10) ++a2_bound_violations;

    const bool a3_ok = a3_condition_holds(m);
    const auto checks = verify_member_against_bounds(m);
    for (size_t k = 0; k < checks.size(); ++k) {
      const BoundCheck& c = checks[k];
      KindStats& s = stats[k];
      s.observed_max_all = std::max(s.observed_max_all, c.value);
      if (c.conditional_skipped) {
        if (!c.ok) ++s.exceed_without_a3;
        continue;
      }
      if (c.value > s.observed_max) {
        s.observed_max = c.value;
        s.observed_member = member_ref(m, stream, i);
      }
      if (d.near_extremal) s.near_extremal_max = std::max(s.near_extremal_max, c.value);
      if (c.violation()) {
        violations.push_back({{"kind", c.kind.name()},
                              {"value", c.value},
                              {"bound", *c.bound},
                              {"a3_condition", a3_ok},
                              {"member", member_ref(m, stream, i)}});
      }
    }
  }

  json functionals = json::array();
  for (size_t k = 0; k < kinds.size(); ++k) {
    const BoundRecord b = bound_for(kinds[k], lambda);
    const KindStats& s = stats[k];
    json row{{"kind", kinds[k].name()},
             {"bound", optional_number(b.value)},
             {"valid_iff", b.valid_iff.describe()},
             {"regime", b.regime},
             {"sharp", b.sharp},
             {"witness", b.witness ? json(*b.witness) : json(nullptr)},
             {"observed_max", s.observed_max >= 0 ? json(s.observed_max) : json(nullptr)},
             {"observed_max_member", s.observed_member.is_null() ? json(nullptr) : s.observed_member},
             {"observed_max_unconditioned", s.observed_max_all >= 0 ? json(s.observed_max_all) : json(nullptr)},
             {"near_extremal_max", s.near_extremal_max >= 0 ? json(s.near_extremal_max) : json(nullptr)},
             {"gap", nullptr},
             {"exceed_without_a3", s.exceed_without_a3}};
    if (b.value && s.observed_max >= 0) row["gap"] = *b.value - s.observed_max;
    functionals.push_back(std::move(row));
  }

  return {{"lambda", lambda},
          {"stream", stream},
          {"samples", cfg.samples_per_lambda},
          {"accepted", accepted},
          {"near_extremal_draws", near_draws},
          {"near_extremal_accepted", near_accepted},
          {"rejections", rejections},
          {"max_a2_excess", accepted > 0 ? json(max_a2_excess) : json(nullptr)},
          {"a2_bound_violations", a2_bound_violations},
          {"functionals", std::move(functionals)},
          {"violations", std::move(violations)}};
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string rows_to_csv(const json& rows) {
  if (!rows.is_array() || rows.empty()) return "";
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows[0].items()) {
    if (!v.is_object() && !v.is_array()) cols.push_back(k);
  }
  std::string out;
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_cell(r.value(cols[i], json(nullptr)));
    out += "\n";
  }
  return out;
}

std::string regime_of(const MaxResult& r) {
  if (std::hypot(r.argmax.x - 1.0, r.argmax.y) <= kCornerTolerance) return "corner";
  if (std::abs(r.argmax.y - region_top(r.argmax.x)) <= 1e-9) return "upper-boundary";
  if (r.argmax.x <= 1e-9) return "x=0";
  if (r.argmax.y <= 1e-9) return "y=0";
  return "interior";
}

FunctionalKind kind_for(Objective g) {
  switch (g) {
    case Objective::G1: return FunctionalKind::zalcman(3);
    case Objective::G2: return FunctionalKind::gen_zalcman(2, 4);
    case Objective::G3: return FunctionalKind::krushkal(5, 1);
  }
  return FunctionalKind::zalcman(3);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error(ErrorCode::ConfigError, "cannot write " + p.string());
  os << text;
}

}  // namespace

std::vector<double> RunConfig::default_lambda_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 10; ++i) g.push_back(i / 10.0);
  return g;
}

void RunConfig::validate() const {
  if (lambda_grid.empty()) throw Error(ErrorCode::ConfigError, "lambda grid is empty");
  for (double l : lambda_grid) {
    if (!(l > 0.0 && l <= 1.0)) {
      throw Error(ErrorCode::ConfigError, "lambda " + format_number(l) + " outside (0, 1]");
    }
  }
  if (samples_per_lambda < 1) throw Error(ErrorCode::ConfigError, "samples must be >= 1");
  if (truncation_order < 8) throw Error(ErrorCode::ConfigError, "truncation order must be >= 8");
  if (membership.angles < 1 || membership.radii.empty()) {
    throw Error(ErrorCode::ConfigError, "membership grid is empty");
  }
  for (double r : membership.radii) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::ConfigError, "membership radius outside (0, 1)");
  }
  if (optimizer.grid < 3 || optimizer.line_points < 3) {
    throw Error(ErrorCode::ConfigError, "optimizer grids need at least 3 points");
  }
  if (!(near_extremal_fraction >= 0.0 && near_extremal_fraction <= 1.0)) {
    throw Error(ErrorCode::ConfigError, "near-extremal fraction outside [0, 1]");
  }
  if (format != "json" && format != "csv") {
    throw Error(ErrorCode::ConfigError, "format must be json or csv, got '" + format + "'");
  }
}

std::vector<double> parse_lambda_grid(std::string_view text) {
  const std::string s = trim(text);
  std::vector<double> out;
  if (std::count(s.begin(), s.end(), ':') == 2) {
    const auto p1 = s.find(':'), p2 = s.find(':', p1 + 1);
    const double start = parse_double(trim(s.substr(0, p1)), "lambda grid");
    const double stop = parse_double(trim(s.substr(p1 + 1, p2 - p1 - 1)), "lambda grid");
    const double step = parse_double(trim(s.substr(p2 + 1)), "lambda grid");
    if (!(step > 0.0)) throw Error(ErrorCode::ConfigError, "lambda grid step must be positive");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) out.push_back(parse_double(item, "lambda grid"));
    }
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "empty lambda grid '" + s + "'");
  return out;
}

RunConfig apply_config_text(std::string_view text, RunConfig cfg) {
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);

    if (key == "lambda_grid") cfg.lambda_grid = parse_lambda_grid(value);
    else if (key == "samples" || key == "samples_per_lambda") cfg.samples_per_lambda = static_cast<int>(parse_int(value, key));
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    else if (key == "order" || key == "truncation_order") cfg.truncation_order = static_cast<int>(parse_int(value, key));
    else if (key == "angles") cfg.membership.angles = static_cast<int>(parse_int(value, key));
    else if (key == "radii") {
      cfg.membership.radii.clear();
      for (double r : parse_lambda_grid(value)) cfg.membership.radii.push_back(r);
    }
    else if (key == "optimizer_grid") cfg.optimizer.grid = static_cast<int>(parse_int(value, key));
    else if (key == "line_points") cfg.optimizer.line_points = static_cast<int>(parse_int(value, key));
    else if (key == "near_extremal_fraction") cfg.near_extremal_fraction = parse_double(value, key);
    else if (key == "out") cfg.out = value;
    else if (key == "format") cfg.format = value;
    else if (key == "golden" || key == "golden_table") cfg.golden_table = value;
    else throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ConfigError, "cannot read config " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return apply_config_text(ss.str(), std::move(base));
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Draw draw_candidate(std::mt19937_64& rng, double lambda, double near_extremal_fraction) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> degree(0, kMaxPsiDegree);
  Draw d;

  if (unit(rng) < near_extremal_fraction) {
    d.near_extremal = true;
    const double eps = 0.1 * unit(rng);
    const double phi = phase(rng);
    const auto noise = scale_to_sup(random_poly(rng, degree(rng)));
    if (unit(rng) < 0.5) {
      // Rotation family: a2 = (1+lambda-eps) e^{i phi}, psi ~ -e^{2 i phi}.
      // delta < eps/lambda keeps the denominator root outside the disk.
      const double delta = unit(rng) * std::min(1.0, 0.9 * eps / lambda);
      const double eta = unit(rng) * delta;
      d.a2 = std::polar(1.0 + lambda - eps, phi);
      d.psi.assign(noise.size(), Complex{});
      for (size_t k = 0; k < noise.size(); ++k) d.psi[k] = eta * noise[k];
      d.psi[0] -= 1.0 - delta;
      for (auto& c : d.psi) c *= std::polar(1.0, 2.0 * phi);
    } else {
      // Hankel witness: a2 small, psi ~ e^{i phi} z.
      const double delta = 0.1 * unit(rng);
      const double eta = unit(rng) * delta;
      d.a2 = std::polar(eps, phase(rng));
      d.psi.assign(std::max<size_t>(noise.size(), 2), Complex{});
      for (size_t k = 0; k < noise.size(); ++k) d.psi[k] = eta * noise[k];
      d.psi[1] += (1.0 - delta) * std::polar(1.0, phi);
    }
    return d;
  }

  d.a2 = std::polar((1.0 + lambda) * unit(rng), phase(rng));
  d.psi = scale_to_sup(random_poly(rng, degree(rng)), std::cbrt(unit(rng)));
  return d;
}

void check_sharpness(const FunctionalKind& kind, double lambda, double value, double bound) {
  if (!(std::abs(value - bound) <= kSharpnessTolerance)) {
    throw Error(ErrorCode::SharpnessFailure, kind.name() + " at lambda=" + format_number(lambda) +
                                                 ": value " + format_number(value) + " vs bound " +
                                                 format_number(bound));
  }
}

json cmd_verify_sharpness(const RunConfig& cfg) {
  cfg.validate();
  json rows = json::array();
  for (double lambda : cfg.lambda_grid) {
    const MemberSpec f_lambda = extremal_f_lambda(lambda);
    const MemberSpec hankel3 = extremal_hankel3(lambda);
    for (const auto& kind : supported_kinds()) {
      const BoundRecord b = bound_for(kind, lambda);
      if (!b.sharp || !b.value) continue;
      const MemberSpec& witness = (*b.witness == "hankel3") ? hankel3 : f_lambda;
      const double value = eval_functional(kind, witness);
      rows.push_back({{"kind", kind.name()},
                      {"lambda", lambda},
                      {"witness", *b.witness},
                      {"value", value},
                      {"bound", *b.value},
                      {"abs_diff", std::abs(value - *b.value)}});
      check_sharpness(kind, lambda, value, *b.value);
    }
  }
  return wrap("verify-sharpness", {{"config", config_json(cfg)}, {"rows", std::move(rows)}, {"all_ok", true}});
}

json cmd_random_search(const RunConfig& cfg) {
  cfg.validate();
  std::vector<std::future<json>> units;
  for (size_t i = 0; i < cfg.lambda_grid.size(); ++i) {
    units.push_back(std::async(std::launch::async, search_one_lambda, std::cref(cfg), i));
  }
  json per_lambda = json::array();
  int total_violations = 0;
  for (auto& u : units) {
    json r = u.get();
    total_violations += static_cast<int>(r["violations"].size()) + r["a2_bound_violations"].get<int>();
    per_lambda.push_back(std::move(r));
  }
  return wrap("random-search", {{"config", config_json(cfg)},
                                {"per_lambda", std::move(per_lambda)},
                                {"total_violations", total_violations}});
}

json cmd_maximize(const RunConfig& cfg, Objective which) {
  cfg.validate();
  json rows = json::array();
  bool all_agree = true;
  for (double lambda : cfg.lambda_grid) {
    const MaxResult r = maximize_over_E(which, lambda, 1e-9, cfg.optimizer);
    const BoundRecord b = bound_for(kind_for(which), lambda);
    json row{{"lambda", lambda},
             {"value", r.value},
             {"lambda_times_value", lambda * r.value},
             {"argmax_x", r.argmax.x},
             {"argmax_y", r.argmax.y},
             {"location", regime_of(r)},
             {"bound", optional_number(b.value)},
             {"bound_regime", b.regime},
             {"abs_diff", nullptr},
             {"agrees", nullptr},
             {"flag", b.value ? "" : "theorem silent"},
             {"result", to_json(r)}};
    if (b.value) {
      const double diff = std::abs(lambda * r.value - *b.value);
      row["abs_diff"] = diff;
      row["agrees"] = diff <= kOptimizerAgreement;
      all_agree = all_agree && diff <= kOptimizerAgreement;
    }
    rows.push_back(std::move(row));
  }
  json body{{"config", config_json(cfg)}, {"function", to_string(which)}, {"rows", std::move(rows)},
            {"all_agree", all_agree}};
  if (which == Objective::G1) {
    const double empirical = locate_g1_crossover();
    body["crossover"] = {{"empirical", empirical},
                         {"threshold", kZalcman3Threshold},
                         {"alt_threshold", 0.5 * (std::sqrt(23.0) / 3.0 - 1.0)},
                         {"abs_diff", std::abs(empirical - kZalcman3Threshold)},
                         {"within_0_002", std::abs(empirical - kZalcman3Threshold) <= 0.002}};
  }
  return wrap("maximize", std::move(body));
}

json cmd_monotonicity(const RunConfig& cfg) {
  cfg.validate();
  json rows = json::array();
  bool all_hold = true;
  for (double lambda : cfg.lambda_grid) {
    const MonotonicityReport r = check_monotonicity_claims(lambda);
    all_hold = all_hold && r.all_hold();
    rows.push_back(to_json(r));
  }
  return wrap("monotonicity", {{"config", config_json(cfg)}, {"rows", std::move(rows)}, {"all_hold", all_hold}});
}

ReproduceResult cmd_reproduce_all(const RunConfig& cfg) {
  cfg.validate();
  ReproduceResult res;
  json sharp;
  bool sharp_ok = true;
  try {
    sharp = cmd_verify_sharpness(cfg)["body"];
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SharpnessFailure) throw;
    sharp = {{"all_ok", false}, {"error", e.what()}};
    sharp_ok = false;
  }
  const json search = cmd_random_search(cfg);
  json maxima = json::object();
  bool maxima_ok = true;
  for (Objective g : {Objective::G1, Objective::G2, Objective::G3}) {
    json m = cmd_maximize(cfg, g)["body"];
    maxima_ok = maxima_ok && m["all_agree"].get<bool>() &&
                (!m.contains("crossover") || m["crossover"]["within_0_002"].get<bool>());
    maxima[to_string(g)] = std::move(m);
  }
  const json mono = cmd_monotonicity(cfg)["body"];

  res.bound_table = bound_table_csv(search);
  if (!cfg.golden_table.empty()) {
    std::ifstream is(cfg.golden_table, std::ios::binary);
    if (!is) throw Error(ErrorCode::ConfigError, "cannot read golden table " + cfg.golden_table);
    std::stringstream ss;
    ss << is.rdbuf();
    res.golden_diff = diff_lines(res.bound_table, ss.str());
  }
  const bool search_ok = search["body"]["total_violations"].get<int>() == 0;
  res.ok = sharp_ok && search_ok && maxima_ok && mono["all_hold"].get<bool>() && res.golden_diff == 0;
  res.report = wrap("reproduce-all", {{"config", config_json(cfg)},
                                      {"sharpness", std::move(sharp)},
                                      {"random_search", search["body"]},
                                      {"maximize", std::move(maxima)},
                                      {"monotonicity", mono},
                                      {"golden_diff_lines", res.golden_diff},
                                      {"ok", res.ok}});

  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);
  write_file(dir / "report.json", res.report.dump(2) + "\n");
  write_file(dir / "bound_table.csv", res.bound_table);
  return res;
}

std::string bound_table_csv(const json& search_report) {
  const json& body = search_report.contains("body") ? search_report["body"] : search_report;
  std::string out = "kind,lambda,bound,observed_max,sharp,witness,regime\n";
  for (const auto& unit : body.at("per_lambda")) {
    const double lambda = unit.at("lambda").get<double>();
    for (const auto& f : unit.at("functionals")) {
      out += f.at("kind").get<std::string>() + "," + format_number(lambda) + "," + csv_cell(f.at("bound")) + "," +
             csv_cell(f.at("observed_max")) + "," + csv_cell(f.at("sharp")) + "," + csv_cell(f.at("witness")) +
             "," + f.at("regime").get<std::string>() + "\n";
    }
  }
  return out;
}

std::string report_to_csv(const json& report) {
  const json& body = report.contains("body") ? report["body"] : report;
  if (body.contains("per_lambda")) return bound_table_csv(body);
  if (body.contains("rows")) {
    const json& rows = body["rows"];
    if (!rows.empty() && rows[0].contains("claims")) {
      json flat = json::array();
      for (const auto& r : rows) {
        for (const auto& c : r["claims"]) {
          flat.push_back({{"lambda", r["lambda"]}, {"claim", c["claim"]}, {"asserted", c["asserted"]},
                          {"min_sampled", c["min_sampled"]}, {"holds", c["holds"]}});
        }
      }
      return rows_to_csv(flat);
    }
    return rows_to_csv(rows);
  }
  return "";
}

int diff_lines(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::vector<std::string_view> lines;
    while (!s.empty()) {
      const auto nl = s.find('\n');
      lines.push_back(s.substr(0, nl));
      if (nl == std::string_view::npos) break;
      s.remove_prefix(nl + 1);
    }
    return lines;
  };
  const auto la = split(a), lb = split(b);
  int diff = static_cast<int>(std::max(la.size(), lb.size()) - std::min(la.size(), lb.size()));
  for (size_t i = 0; i < std::min(la.size(), lb.size()); ++i) diff += la[i] != lb[i];
  return diff;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace ulam
