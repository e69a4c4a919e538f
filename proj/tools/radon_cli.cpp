#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "radon/suites/suites.hpp"

using radon::suites::Range;
using radon::suites::RunConfig;

namespace {

struct Raw {
  std::string q, n, k, pq, output, format, config;
  std::vector<std::string> only;
  int precision = 0, order = 0, cases = 0, radii = 0, threads = 0;
  std::uint64_t seed = 0;
  double rtol = 0, grid_h = 0;
};

int to_int(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(flag + ": '" + s + "' is not an integer");
  return v;
}

/// "2,3,5", "2..4" or a mix.
std::vector<int> parse_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = to_int(item.substr(0, dots), flag), hi = to_int(item.substr(dots + 2), flag);
      if (lo > hi) throw std::invalid_argument(flag + ": empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item, flag));
    }
  }
  if (out.empty()) throw std::invalid_argument(flag + ": empty list");
  return out;
}

/// "0..4" or "3".
Range parse_range(const std::string& s, const std::string& flag) {
  const auto v = parse_list(s, flag);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != v[i - 1] + 1) throw std::invalid_argument(flag + ": expected a contiguous range like 0..4");
  return {v.front(), v.back()};
}

// Config values may be written like the flags ("0..4", "2,3") or as JSON arrays/numbers.
std::string as_flag_text(const nlohmann::json& v, bool range) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int>());
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + std::to_string(e.get<int>());
    if (range && v.size() == 2) return std::to_string(v[0].get<int>()) + ".." + std::to_string(v[1].get<int>());
    return s;
  }
  throw std::invalid_argument("config: unsupported value " + v.dump());
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "q") cfg.q = parse_list(as_flag_text(v, false), "q");
    else if (key == "n") cfg.n = parse_list(as_flag_text(v, false), "n");
    else if (key == "k") cfg.k = parse_range(as_flag_text(v, true), "k");
    else if (key == "pq") cfg.pq = parse_range(as_flag_text(v, true), "pq");
    else if (key == "precision") cfg.precision = v.get<int>();
    else if (key == "order") cfg.order = v.get<int>();
    else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
    else if (key == "rtol") cfg.rtol = v.get<double>();
    else if (key == "cases") cfg.cases = v.get<int>();
    else if (key == "radii") cfg.radii = v.get<int>();
    else if (key == "grid-h" || key == "grid_h") cfg.grid_h = v.get<double>();
    else if (key == "only") cfg.only = v.get<std::vector<std::string>>();
    else if (key == "threads") cfg.threads = v.get<int>();
    else if (key == "output" || key == "o") cfg.output = v.get<std::string>();
    else if (key == "format") cfg.format = v.get<std::string>();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void add_flags(CLI::App* sub, Raw& raw) {
  sub->add_option("--q", raw.q, "Primes, e.g. 2,3,5");
  sub->add_option("--n", raw.n, "Dimensions, e.g. 2,3 or 2..4");
  sub->add_option("--k", raw.k, "Harmonic degree range, e.g. 0..4");
  sub->add_option("--pq", raw.pq, "Bidegree range for p and q, e.g. 0..2");
  sub->add_option("--precision", raw.precision, "p-adic digit precision N");
  sub->add_option("--order", raw.order, "Gauss-Jacobi order for Mellin quadratures");
  sub->add_option("--seed", raw.seed, "Random seed");
  sub->add_option("--rtol", raw.rtol, "Relative tolerance for Mellin agreement");
  sub->add_option("--cases", raw.cases, "Random cases per parameter point");
  sub->add_option("--radii", raw.radii, "Radii per round trip");
  sub->add_option("--grid-h", raw.grid_h, "Grid spacing for the support suite");
  sub->add_option("--only", raw.only, "Run only these identities, e.g. round_trip,mellin")->delimiter(',');
  sub->add_option("--threads", raw.threads, "Worker threads (0: all cores)");
  sub->add_option("-o,--output", raw.output, "Output file (stdout if omitted)");
  sub->add_option("--format", raw.format, "csv or json (default from the output extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", raw.config, "JSON config file; keys mirror the flags, flags win")
      ->check(CLI::ExistingFile);
}

RunConfig build_config(const std::string& suite, CLI::App* sub, const Raw& raw) {
  RunConfig cfg;
  cfg.suite = suite;
  if (suite == "complex") cfg.n = {2, 3};
  if (!raw.config.empty()) apply_config_file(raw.config, cfg);
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--q")) cfg.q = parse_list(raw.q, "q");
  if (given("--n")) cfg.n = parse_list(raw.n, "n");
  if (given("--k")) cfg.k = parse_range(raw.k, "k");
  if (given("--pq")) cfg.pq = parse_range(raw.pq, "pq");
  if (given("--precision")) cfg.precision = raw.precision;
  if (given("--order")) cfg.order = raw.order;
  if (given("--seed")) cfg.seed = raw.seed;
  if (given("--rtol")) cfg.rtol = raw.rtol;
  if (given("--cases")) cfg.cases = raw.cases;
  if (given("--radii")) cfg.radii = raw.radii;
  if (given("--grid-h")) cfg.grid_h = raw.grid_h;
  if (given("--only")) cfg.only = raw.only;
  if (given("--threads")) cfg.threads = raw.threads;
  if (given("--output")) cfg.output = raw.output;
  const bool format_set = given("--format");
  if (format_set) cfg.format = raw.format;
  else if (cfg.output.size() > 4 && cfg.output.substr(cfg.output.size() - 4) == ".csv") cfg.format = "csv";
  if (suite == "mellin-table") cfg.format = "csv";
  cfg.validate();
  return cfg;
}

template <class Write>
void emit(const RunConfig& cfg, Write&& write) {
  if (cfg.output.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon transform inversion: verification suites and tables"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> subs{
      {"padic", "Exact p-adic identities (round trip, Fourier, Cernov, structural)"},
      {"real", "Real zonal kernels, Mellin agreement, reciprocity and round trips"},
      {"complex", "Complex zonal kernels, Mellin agreement, reciprocity and round trips"},
      {"support", "Polar duality and the zero-component demonstration"},
      {"mellin-table", "CSV of quadrature vs closed-form Mellin transforms"}};
  Raw raw;
  std::vector<CLI::App*> handles;
  for (const auto& [name, help] : subs) {
    auto* sub = app.add_subcommand(name, help);
    add_flags(sub, raw);
    handles.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  std::size_t which = 0;
  while (!handles[which]->parsed()) ++which;
  const std::string suite = subs[which].first;

  RunConfig cfg;
  try {
    cfg = build_config(suite, handles[which], raw);
  } catch (const std::exception& e) {
    std::cerr << "radon " << suite << ": invalid configuration: " << e.what() << '\n';
    return 2;
  }
  try {
    if (suite == "mellin-table") {
      emit(cfg, [&](std::ostream& os) { radon::suites::emit_mellin_table(cfg, os); });
      return 0;
    }
    const auto report = radon::suites::run_suite(cfg);
    emit(cfg, [&](std::ostream& os) { report.write(os, cfg.format); });
    std::size_t failed = 0;
    for (const auto& r : report.rows) failed += !r.pass;
    if (const auto* bad = report.first_failure()) {
      std::cerr << "radon " << suite << ": " << failed << " of " << report.rows.size()
                << " identities failed; first: " << bad->identity << ' ' << bad->params.dump();
      if (!bad->detail.empty()) std::cerr << " (" << bad->detail << ')';
      std::cerr << '\n';
      return 1;
    }
    std::cerr << "radon " << suite << ": all " << report.rows.size() << " identities hold\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "radon " << suite << ": " << e.what() << '\n';
    return 3;
  }
}
