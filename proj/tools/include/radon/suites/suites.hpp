#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radon/specfun/specfun.hpp"

namespace radon::suites {

struct Range {
  int lo = 0;
  int hi = 0;
};

/// Everything a suite run depends on. Same config and seed, same report bytes.
struct RunConfig {
  std::string suite;
  std::vector<int> q{2, 3, 5};
  std::vector<int> n{2, 3};
  Range k{0, 4};
  Range pq{0, 2};
  int precision = 12;
  int order = specfun::kDefaultQuadratureOrder;
  std::uint64_t seed = 1;
  /// Relative tolerance of the Mellin agreement rows.
  double rtol = 1e-8;
  /// Tolerance of reciprocity and round trips (relative to sup|u|).
  double round_trip_tol = 1e-6;
  /// Random functions per (q, n) in the p-adic suite.
  int cases = 5;
  /// Radii per round trip.
  int radii = 5;
  /// Grid spacing of the support suite.
  double grid_h = 1.0 / 200;
  /// Run only these identities (all when empty).
  std::vector<std::string> only;
  std::string output;
  std::string format = "json";
  int threads = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Row {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  /// Measured error for numerical identities; empty for exact ones.
  std::optional<double> error;
  std::string lhs;
  std::string rhs;
  std::string detail;
  /// Structured output attached to the row (JSON reports only).
  nlohmann::json data;
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<Row> rows;

  bool all_pass() const;
  const Row* first_failure() const;
  /// Rows ordered by (identity, params).
  void sort_rows();
  void write(std::ostream& os, const std::string& format) const;
};

/// Identity names a suite can report.
const std::vector<std::string>& suite_identities(const std::string& suite);

Report run_padic_suite(const RunConfig& cfg);
Report run_real_suite(const RunConfig& cfg);
Report run_complex_suite(const RunConfig& cfg);
Report run_support_suite(const RunConfig& cfg);
/// Dispatches on cfg.suite.
Report run_suite(const RunConfig& cfg);

/// Quadrature vs formula rows for the real (n, k) and complex (n, p, q) grids.
void emit_mellin_table(const RunConfig& cfg, std::ostream& os);

/// "%.17g".
std::string fmt(double x);

}  // namespace radon::suites
