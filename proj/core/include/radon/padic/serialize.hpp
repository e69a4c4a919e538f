#pragma once

#include <string>

#include <json.hpp>

#include "radon/padic/cell_function.hpp"

namespace radon::padic {

/// {q, n, value_ring, cells:[{center:["v:d0d1…", …], level, coeff}]}.
template <class V>
nlohmann::json to_json(const CellFunction<V>& f) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [c, v] : f.terms()) {
    nlohmann::json center = nlohmann::json::array();
    // Canonical centers have nonnegative units, so the digit expansion terminates.
    for (int i = 0; i < c.dim(); ++i) center.push_back(c.center()[i].to_string(1 << 12));
    cells.push_back({{"center", center}, {"level", c.level()}, {"coeff", value_to_string(v)}});
  }
  return {{"q", f.prime()}, {"n", f.dim()}, {"value_ring", ValueRing<V>::name}, {"cells", cells}};
}

template <class V>
CellFunction<V> cell_function_from_json(const nlohmann::json& j, bool require_cc = false) {
  const int q = j.at("q").get<int>();
  const int n = j.at("n").get<int>();
  if (!is_supported_prime(q)) throw std::invalid_argument("unsupported q = " + std::to_string(q));
  if (j.at("value_ring").get<std::string>() != ValueRing<V>::name)
    throw std::invalid_argument("value ring mismatch: expected " + std::string(ValueRing<V>::name));
  std::vector<typename CellFunction<V>::Term> terms;
  for (const auto& cj : j.at("cells")) {
    const auto& center = cj.at("center");
    if (static_cast<int>(center.size()) != n) throw std::invalid_argument("center dimension mismatch");
    PAdicVector x(q, n);
    for (int i = 0; i < n; ++i) x[i] = PAdicScalar::parse(q, center[static_cast<std::size_t>(i)].get<std::string>());
    terms.push_back({Cell(x, cj.at("level").get<int>()), ValueRing<V>::parse(cj.at("coeff").get<std::string>())});
  }
  return CellFunction<V>::make(q, n, std::move(terms), require_cc);
}

}  // namespace radon::padic
