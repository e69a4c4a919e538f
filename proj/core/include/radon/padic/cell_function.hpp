#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "radon/errors.hpp"
#include "radon/padic/cell.hpp"
#include "radon/value/traits.hpp"

namespace radon::padic {

/// Finite linear combination of indicators of pairwise disjoint cells.
///
/// Terms are kept sorted by (level, center) and never carry a zero
/// coefficient. Point evaluation probes one cell per distinct level.
template <class V>
class CellFunction {
 public:
  using Term = std::pair<Cell, V>;

  CellFunction() = default;
  CellFunction(int q, int n) : q_(q), n_(n) {}

  /// Validated construction. Throws InvalidCellFunction if two cells
  /// intersect, or if require_cc and some cell contains 0.
  static CellFunction make(int q, int n, std::vector<Term> terms, bool require_cc = false) {
    CellFunction f(q, n);
    for (auto& t : terms) {
      check_shape(q, n, t.first);
      if (require_cc && t.first.contains_zero())
        throw InvalidCellFunction("cell " + t.first.center().to_string() + "+p^" +
                                  std::to_string(t.first.level()) + " contains 0");
      if (!is_zero_value(t.second)) f.terms_.push_back(std::move(t));
    }
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    f.index_levels();
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      const Cell& c = f.terms_[i].first;
      if (i + 1 < f.terms_.size() && f.terms_[i + 1].first == c)
        throw InvalidCellFunction("duplicate cell " + c.center().to_string());
      for (int l : f.levels_) {
        if (l >= c.level()) break;
        if (f.find(c.ancestor(l)) != nullptr)
          throw InvalidCellFunction("overlapping cells at " + c.center().to_string());
      }
    }
    return f;
  }

  /// Sum of arbitrary (possibly overlapping) weighted cells.
  static CellFunction sum(int q, int n, const std::vector<Term>& terms) {
    std::map<Cell, V> acc;
    for (const auto& t : terms) {
      check_shape(q, n, t.first);
      acc[t.first] += t.second;
    }
    if (acc.empty()) return CellFunction(q, n);
    // Every strict ancestor (down to the coarsest level present) of a stored cell.
    const int lo = acc.begin()->first.level();
    std::set<Cell> has_desc;
    for (const auto& [c, v] : acc)
      for (int l = lo; l < c.level(); ++l) has_desc.insert(c.ancestor(l));
    // Ascending order: splitting a cell only inserts entries after it.
    for (auto it = acc.begin(); it != acc.end();) {
      if (!has_desc.count(it->first)) {
        ++it;
        continue;
      }
      for (const auto& ch : it->first.children()) acc[ch] += it->second;
      it = acc.erase(it);
    }
    CellFunction f(q, n);
    for (auto& [c, v] : acc)
      if (!is_zero_value(v)) f.terms_.push_back({c, v});
    f.index_levels();
    return f;
  }

  static CellFunction indicator(const Cell& c, const V& coeff = V(1)) {
    return make(c.prime(), c.dim(), {{c, coeff}});
  }

  int prime() const noexcept { return q_; }
  int dim() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<int>& levels() const noexcept { return levels_; }
  int max_level() const { return levels_.empty() ? 0 : levels_.back(); }
  int min_level() const { return levels_.empty() ? 0 : levels_.front(); }

  /// True if some cell contains 0 (a Schwartz–Bruhat function, not in C_c).
  bool contains_zero() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.contains_zero(); });
  }

  V operator()(const PAdicVector& x) const {
    for (int l : levels_) {
      if (const V* v = find(Cell(x, l))) return *v;
    }
    return V();
  }

  /// The value on `node` if the function is constant there.
  std::optional<V> constant_on(const Cell& node) const {
    for (int l : levels_) {
      if (l > node.level()) break;
      if (const V* v = find(node.ancestor(l))) return *v;
    }
    // No cell holds the node: it is constant iff the cells inside it agree and tile it.
    Rational covered = 0;
    const V* first = nullptr;
    for (const auto& [c, v] : terms_) {
      if (c.level() <= node.level() || !node.contains(c)) continue;
      if (first != nullptr && !(v == *first)) return std::nullopt;
      first = &v;
      covered += c.measure();
    }
    if (first == nullptr) return V();
    if (covered == node.measure()) return *first;
    return std::nullopt;
  }

  V integrate() const {
    V s{};
    for (const auto& [c, v] : terms_) s += v * c.measure();
    return s;
  }

  /// Same function with every cell split to `level` (>= max_level()).
  CellFunction refine(int level) const {
    if (level < max_level()) throw std::invalid_argument("refine level below the finest cell");
    CellFunction f(q_, n_);
    for (const auto& [c, v] : terms_)
      for (auto& d : c.descendants(level)) f.terms_.push_back({std::move(d), v});
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    f.index_levels();
    return f;
  }

  /// Canonical form: complete sibling groups with equal coefficients merged.
  CellFunction coarsened() const {
    std::map<Cell, V> acc(terms_.begin(), terms_.end());
    const std::size_t full = static_cast<std::size_t>(ipow(q_, n_));
    for (int l = max_level(); !acc.empty() && l >= acc.begin()->first.level(); --l) {
      std::map<Cell, std::vector<Cell>> groups;
      for (const auto& [c, v] : acc)
        if (c.level() == l) groups[c.ancestor(l - 1)].push_back(c);
      for (const auto& [parent, kids] : groups) {
        if (kids.size() != full || acc.count(parent)) continue;
        const V v0 = acc[kids.front()];
        if (!std::all_of(kids.begin(), kids.end(), [&](const Cell& k) { return acc[k] == v0; })) continue;
        for (const auto& k : kids) acc.erase(k);
        acc[parent] = v0;
      }
    }
    CellFunction f(q_, n_);
    f.terms_.assign(acc.begin(), acc.end());
    f.index_levels();
    return f;
  }

  friend CellFunction operator+(const CellFunction& a, const CellFunction& b) {
    std::vector<Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return sum(a.q_ ? a.q_ : b.q_, a.n_ ? a.n_ : b.n_, t);
  }
  friend CellFunction operator-(const CellFunction& a, const CellFunction& b) { return a + b * V(-1); }
  friend CellFunction operator*(CellFunction a, const V& s) {
    if (is_zero_value(s)) return CellFunction(a.q_, a.n_);
    for (auto& t : a.terms_) t.second = t.second * s;
    return a;
  }
  friend CellFunction operator*(const V& s, const CellFunction& a) { return a * s; }

  /// Equality as functions (independent of the cell decomposition).
  friend bool operator==(const CellFunction& a, const CellFunction& b) {
    const auto d = (a - b);
    return d.is_zero();
  }

 private:
  static long ipow(int q, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  }

  static void check_shape(int q, int n, const Cell& c) {
    if (c.prime() != q || c.dim() != n) throw InvalidCellFunction("cell does not match (q, n) of the function");
  }

  void index_levels() {
    levels_.clear();
    for (const auto& t : terms_)
      if (levels_.empty() || levels_.back() != t.first.level()) levels_.push_back(t.first.level());
  }

  const V* find(const Cell& c) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                               [](const Term& t, const Cell& key) { return t.first < key; });
    if (it != terms_.end() && it->first == c) return &it->second;
    return nullptr;
  }

  int q_ = 0;
  int n_ = 0;
  std::vector<Term> terms_;
  std::vector<int> levels_;
};

using RationalCellFunction = CellFunction<Rational>;

}  // namespace radon::padic
