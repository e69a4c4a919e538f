#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "radon/suites/suites.hpp"

namespace radon::suites {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string params_text(const nlohmann::json& params) {
  std::string out;
  for (const auto& [k, v] : params.items()) {
    if (!out.empty()) out += ';';
    out += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

}  // namespace

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const std::vector<std::string>& suite_identities(const std::string& suite) {
  static const std::map<std::string, std::vector<std::string>> names{
      {"padic",
       {"round_trip_A_beta_M", "fourier_F_Fprime", "fourier_Fprime_F", "chernov", "chernov_vs_A_beta", "cavalieri",
        "kochubei", "keybeta", "M_star_sigma", "A_star_sigma", "Fprime_alpha_M", "equivariance"}},
      {"real", {"zonal_slice", "mellin", "reciprocity", "round_trip", "mellin_spot"}},
      {"complex", {"zonal_slice", "mellin", "reciprocity", "round_trip", "mellin_spot"}},
      {"support", {"dual_example", "dual_unbounded", "dual_involution", "zero_component"}},
      {"mellin-table", {}}};
  static const std::vector<std::string> none;
  const auto it = names.find(suite);
  return it == names.end() ? none : it->second;
}

void RunConfig::validate() const {
  static const std::vector<std::string> suites{"padic", "real", "complex", "support", "mellin-table"};
  require(std::find(suites.begin(), suites.end(), suite) != suites.end(), "unknown suite '" + suite + "'");
  if (suite == "padic") {
    require(!q.empty(), "q: at least one prime is required");
    for (int p : q) require(is_prime(p) && p <= 31, "q: unsupported value " + std::to_string(p) + " (primes up to 31)");
    for (int d : n) require(d >= 2 && d <= 3, "n: unsupported value " + std::to_string(d) + " for padic (2..3)");
  } else if (suite == "complex") {
    for (int d : n) require(d >= 2 && d <= 4, "n: unsupported value " + std::to_string(d) + " for complex (2..4)");
  } else {
    for (int d : n) require(d >= 2 && d <= 6, "n: unsupported value " + std::to_string(d) + " (2..6)");
  }
  require(!n.empty(), "n: at least one dimension is required");
  require(k.lo >= 0 && k.lo <= k.hi && k.hi <= 12, "k: range must lie in 0..12");
  require(pq.lo >= 0 && pq.lo <= pq.hi && pq.hi <= 6, "pq: range must lie in 0..6");
  require(precision >= 1 && precision <= 30, "precision: must lie in 1..30");
  require(order >= 8 && order <= 2000, "order: must lie in 8..2000");
  require(rtol > 0 && rtol < 1, "rtol: must lie in (0, 1)");
  require(round_trip_tol > 0 && round_trip_tol < 1, "round-trip tolerance must lie in (0, 1)");
  require(cases >= 1 && cases <= 1000, "cases: must lie in 1..1000");
  require(radii >= 1 && radii <= 1000, "radii: must lie in 1..1000");
  require(grid_h > 0 && grid_h <= 0.25, "grid-h: must lie in (0, 0.25]");
  require(format == "json" || format == "csv", "format: must be csv or json");
  const auto& known = suite_identities(suite);
  for (const auto& id : only)
    require(std::find(known.begin(), known.end(), id) != known.end(),
            "only: suite " + suite + " has no identity '" + id + "'");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"suite", suite},
          {"q", q},
          {"n", n},
          {"k", {k.lo, k.hi}},
          {"pq", {pq.lo, pq.hi}},
          {"precision", precision},
          {"order", order},
          {"seed", seed},
          {"rtol", rtol},
          {"round_trip_tol", round_trip_tol},
          {"cases", cases},
          {"radii", radii},
          {"grid_h", grid_h}};
  if (!only.empty()) j["only"] = only;
  return j;
}

bool Report::all_pass() const { return first_failure() == nullptr; }

const Row* Report::first_failure() const {
  for (const auto& r : rows)
    if (!r.pass) return &r;
  return nullptr;
}

void Report::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.params < b.params;
  });
}

void Report::write(std::ostream& os, const std::string& format) const {
  if (format == "csv") {
    os << "suite,identity,params,pass,error,lhs,rhs,detail\n";
    for (const auto& r : rows)
      os << suite << ',' << r.identity << ',' << csv_field(params_text(r.params)) << ',' << (r.pass ? "pass" : "fail")
         << ',' << (r.error ? fmt(*r.error) : "") << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
         << csv_field(r.detail) << '\n';
    return;
  }
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config.to_json();
  j["pass"] = all_pass();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json e{{"identity", r.identity}, {"params", r.params}, {"pass", r.pass}};
    e["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
    if (!r.lhs.empty()) e["lhs"] = r.lhs;
    if (!r.rhs.empty()) e["rhs"] = r.rhs;
    if (!r.detail.empty()) e["detail"] = r.detail;
    if (!r.data.is_null()) e["data"] = r.data;
    j["rows"].push_back(std::move(e));
  }
  os << j.dump(2) << '\n';
}

Report run_suite(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.suite == "padic") return run_padic_suite(cfg);
  if (cfg.suite == "real") return run_real_suite(cfg);
  if (cfg.suite == "complex") return run_complex_suite(cfg);
  if (cfg.suite == "support") return run_support_suite(cfg);
  throw std::invalid_argument("suite '" + cfg.suite + "' does not produce a report");
}

}  // namespace radon::suites
