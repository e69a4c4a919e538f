#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radon/padic/cell_function.hpp"

namespace radon::padic {

/// φ(ξ′) = φ(ξ) whenever v(ξ′ − ξ) ≥ v(ξ) + level.
struct InvarianceCertificate {
  int level = 1;
};

/// make_cell_function: validated cell function; with require_cc no cell may contain 0.
template <class V>
CellFunction<V> make_cell_function(int q, int n, const std::vector<Cell>& cells, const std::vector<V>& coeffs,
                                   bool require_cc) {
  if (cells.size() != coeffs.size()) throw std::invalid_argument("cells and coefficients differ in length");
  std::vector<typename CellFunction<V>::Term> t;
  t.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) t.push_back({cells[i], coeffs[i]});
  return CellFunction<V>::make(q, n, std::move(t), require_cc);
}

/// Smallest r such that the function is constant on every ball ξ + π^{v(ξ)+r}O^n.
/// r = 0 only for the zero function (the ball around ξ at level v(ξ) reaches πξ).
template <class V>
InvarianceCertificate invariance_level(const CellFunction<V>& f) {
  if (f.is_zero()) return {0};
  if (f.contains_zero()) throw InvalidCellFunction("invariance_level needs a C_c function");
  int worst = 1;
  for (const auto& [c, v] : f.terms()) worst = std::max(worst, c.level() - c.shell());
  for (int r = 1; r < worst; ++r) {
    bool ok = true;
    for (const auto& [c, v] : f.terms()) {
      const int u = c.shell();
      if (c.level() <= u + r) continue;
      if (!f.constant_on(c.ancestor(u + r))) {
        ok = false;
        break;
      }
    }
    if (ok) return {r};
  }
  return {worst};
}

/// Element of C_− (upper shell bound), C_+ (lower shell bound) or C_c (both),
/// given by an exact evaluator on F^n∖{0}.
///
/// The optional oracle may report that the function is constant on a cell
/// coarser than the certificate guarantees; it must return nullopt when unsure.
template <class V>
class LazyShellFunction {
 public:
  using Evaluator = std::function<V(const PAdicVector&)>;
  using Oracle = std::function<std::optional<V>(const Cell&)>;

  LazyShellFunction() = default;
  LazyShellFunction(int q, int n, Evaluator eval, InvarianceCertificate cert, std::optional<int> upper,
                    std::optional<int> lower = std::nullopt, Oracle oracle = {})
      : q_(q), n_(n), eval_(std::move(eval)), cert_(cert), upper_(upper), lower_(lower), oracle_(std::move(oracle)) {}

  /// A C_c cell function viewed lazily.
  static LazyShellFunction from_cells(const CellFunction<V>& f) {
    if (f.contains_zero()) throw InvalidCellFunction("lazy shell functions live on F^n minus 0");
    int lo = 0, hi = 0;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      const int u = f.terms()[i].first.shell();
      lo = i ? std::min(lo, u) : u;
      hi = i ? std::max(hi, u) : u;
    }
    if (f.is_zero()) lo = hi = 0;
    const InvarianceCertificate cert{std::max(1, invariance_level(f).level)};
    return LazyShellFunction(
        f.prime(), f.dim(), [f](const PAdicVector& x) { return f(x); }, cert, hi, lo,
        [f](const Cell& c) { return f.constant_on(c); });
  }

  int prime() const noexcept { return q_; }
  int dim() const noexcept { return n_; }
  const InvarianceCertificate& certificate() const noexcept { return cert_; }
  int invariance() const noexcept { return cert_.level; }
  const std::optional<int>& upper() const noexcept { return upper_; }
  const std::optional<int>& lower() const noexcept { return lower_; }

  V operator()(const PAdicVector& x) const {
    const int u = x.valuation();
    if ((upper_ && u > *upper_) || (lower_ && u < *lower_)) return V();
    return eval_(x);
  }

  /// The value on `node` if it is certainly constant there.
  std::optional<V> constant_on(const Cell& node) const {
    if (node.contains_zero()) {
      if (upper_ && node.level() > *upper_) return V();
    } else {
      const int u = node.shell();
      if ((upper_ && u > *upper_) || (lower_ && u < *lower_)) return V();
      if (node.level() >= u + cert_.level) return eval_(node.center());
    }
    if (oracle_) return oracle_(node);
    return std::nullopt;
  }

  /// Same function with a weaker (larger) certificate; used to check that
  /// results do not depend on the certified level.
  LazyShellFunction with_certificate(int level) const {
    if (level < cert_.level) throw std::invalid_argument("certificate can only be weakened");
    LazyShellFunction g = *this;
    g.cert_.level = level;
    return g;
  }

 private:
  int q_ = 0;
  int n_ = 0;
  Evaluator eval_;
  InvarianceCertificate cert_;
  std::optional<int> upper_;
  std::optional<int> lower_;
  Oracle oracle_;
};

/// Element of A_− ∩ A_+: a cell function on F^× supported on finitely many
/// shells, acting through d^×t = dt/|t|.
template <class V>
class MultKernel {
 public:
  MultKernel() = default;
  explicit MultKernel(CellFunction<V> f) : f_(std::move(f)) {
    if (f_.dim() != 1) throw InvalidCellFunction("multiplicative kernels are one-dimensional");
    if (f_.contains_zero()) throw InvalidCellFunction("multiplicative kernel cell contains 0");
    for (std::size_t i = 0; i < f_.terms().size(); ++i) {
      const int a = f_.terms()[i].first.shell();
      a_min_ = i ? std::min(a_min_, a) : a;
      a_max_ = i ? std::max(a_max_, a) : a;
    }
  }

  const CellFunction<V>& function() const noexcept { return f_; }
  int prime() const noexcept { return f_.prime(); }
  bool is_zero() const noexcept { return f_.is_zero(); }
  int a_min() const noexcept { return a_min_; }
  int a_max() const noexcept { return a_max_; }

  /// Cells split until each has relative level (level − shell) at least `rel`.
  std::vector<typename CellFunction<V>::Term> cells_at_relative_level(int rel) const {
    std::vector<typename CellFunction<V>::Term> out;
    for (const auto& [c, v] : f_.terms()) {
      const int target = std::max(c.level(), c.shell() + rel);
      for (auto& d : c.descendants(target)) out.push_back({std::move(d), v});
    }
    return out;
  }

 private:
  CellFunction<V> f_;
  int a_min_ = 0;
  int a_max_ = 0;
};

/// σ(α)(t) = α(t^{−1})|t|^{−n}. A cell c + π^mO with v(c) = a maps onto
/// c^{−1} + π^{m−2a}O (inverse needed only to relative precision m − a), with factor q^{−an}.
template <class V>
MultKernel<V> sigma(const MultKernel<V>& alpha, int n) {
  const int q = alpha.prime();
  std::vector<typename CellFunction<V>::Term> t;
  for (const auto& [c, v] : alpha.function().terms()) {
    const int a = c.shell();
    PAdicVector inv(q, 1);
    inv[0] = c.center()[0].inverse(c.level() - a);
    t.push_back({Cell(inv, c.level() - 2 * a), v * q_pow(q, -a * n)});
  }
  return MultKernel<V>(CellFunction<V>::make(q, 1, std::move(t)));
}

/// (α∗φ)(ξ) = ∫ α(t) φ(t^{−1}ξ) d^×t for a C_c cell function φ, as a cell function.
///
/// A kernel cell c′ + π^{l}O at shell a, of relative level l − a ≥ m − v(d), maps
/// the φ-cell d + π^mO^n onto c′d + π^{m+a}O^n exactly.
template <class V>
CellFunction<V> mult_convolve(const MultKernel<V>& alpha, const CellFunction<V>& phi) {
  const int q = phi.prime();
  const int n = phi.dim();
  if (alpha.is_zero() || phi.is_zero()) return CellFunction<V>(q, n);
  if (phi.contains_zero()) throw InvalidCellFunction("mult_convolve needs φ in C_c");
  int rel = 1;
  for (const auto& [d, w] : phi.terms()) rel = std::max(rel, d.level() - d.shell());
  std::vector<typename CellFunction<V>::Term> out;
  for (const auto& [k, a_val] : alpha.cells_at_relative_level(rel)) {
    const int a = k.shell();
    const V weight = a_val * q_pow(q, a - k.level());
    for (const auto& [d, w] : phi.terms()) out.push_back({Cell(k.center()[0] * d.center(), d.level() + a), weight * w});
  }
  return CellFunction<V>::sum(q, n, out);
}

/// Lazy α∗φ. Support bounds shift by the kernel's shell range:
/// A_{≤a} ∗ C_{≤R} ⊂ C_{≤R+a} and A_{≥a} ∗ C_{≥R} ⊂ C_{≥R+a}.
template <class V>
LazyShellFunction<V> mult_convolve(const MultKernel<V>& alpha, const LazyShellFunction<V>& phi) {
  const int q = phi.prime();
  const int n = phi.dim();
  const int r = phi.invariance();
  if (alpha.is_zero())
    return LazyShellFunction<V>(q, n, [](const PAdicVector&) { return V(); }, phi.certificate(), 0, 0);
  struct Piece {
    int level;
    int shell;
    PAdicScalar inv;  // t^{-1} to relative precision `level - shell`
    V weight;
  };
  auto pieces = std::make_shared<std::vector<Piece>>();
  for (const auto& [k, a_val] : alpha.cells_at_relative_level(r)) {
    const int a = k.shell();
    pieces->push_back({k.level(), a, k.center()[0].inverse(k.level() - a), a_val * q_pow(q, a - k.level())});
  }
  auto eval = [pieces, phi](const PAdicVector& xi) {
    V s{};
    for (const auto& p : *pieces) s += p.weight * phi(p.inv * xi);
    return s;
  };
  auto oracle = [pieces, phi](const Cell& node) -> std::optional<V> {
    if (node.contains_zero()) return std::nullopt;
    const int u = node.shell();
    V s{};
    for (const auto& p : *pieces) {
      const int rel = p.level - p.shell;
      const Cell image(p.inv * node.center(), std::min(node.level(), u + rel) - p.shell);
      auto v = phi.constant_on(image);
      if (!v) return std::nullopt;
      s += p.weight * *v;
    }
    return s;
  };
  std::optional<int> upper, lower;
  if (phi.upper()) upper = *phi.upper() + alpha.a_max();
  if (phi.lower()) lower = *phi.lower() + alpha.a_min();
  return LazyShellFunction<V>(q, n, eval, phi.certificate(), upper, lower, oracle);
}

}  // namespace radon::padic
