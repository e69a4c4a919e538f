#include <climits>
#include <memory>
#include <stdexcept>

#include "radon/padic/radon.hpp"

namespace radon::padic {

namespace {

constexpr int kInf = INT_MAX / 4;

void require_power_dim(int n) {
  if (n < 2) throw std::invalid_argument("|s|^{-n} pairings need n >= 2");
}

// P(0, k) = −(1 − q^{−1}) Σ_{j<k} q^{j(n−1)}.
Rational power_pair_inner(int q, int n, int k) {
  require_power_dim(n);
  return -(1 - q_pow(q, -1)) * q_pow(q, (k - 1) * (n - 1)) / (1 - q_pow(q, -(n - 1)));
}

PAdicVector scalar_vec(const PAdicScalar& s) {
  PAdicVector v(s.prime(), 1);
  v[0] = s;
  return v;
}

int min_shell(const RFunction& f) {
  int lo = kInf;
  for (const auto& [c, v] : f.terms()) lo = std::min(lo, c.shell());
  return lo;
}

template <class V>
void require_cc(const CellFunction<V>& f) {
  if (f.contains_zero()) throw InvalidCellFunction("function must lie in C_c (no cell may contain 0)");
}

// I(Λ) = ∫_Λ D(ξ·x) φ(ξ) dξ with Λ = ball(0, −v(x) − r + i) ∩ {ξ·x ∈ π^iO}.
//
// Λ is walked as a tree of cells. A cell where φ is constant pushes forward along
// ξ ↦ ξ·x to q^{−ln+l+v(x)} times the indicator of its image ball; intersecting
// with the slab π^iO either keeps that ball or replaces it by π^iO.
template <class V, class D>
V stabilized_integral(const LazyShellFunction<V>& phi, const PAdicVector& x, const D& dist, int enlarge) {
  if (x.is_zero()) throw std::invalid_argument("A_D evaluated at x = 0");
  if (!phi.upper()) throw std::invalid_argument("A_D needs φ in C_− (an upper shell bound)");
  const int q = phi.prime();
  const int n = phi.dim();
  const int w = x.valuation();
  const int r = phi.invariance();
  const int i = dist.support_exponent(r);
  const int R = *phi.upper();
  const auto slab = dist.pair_ball(PAdicScalar(q, 0), i);
  V total{};
  std::vector<Cell> stack{Cell::ball(q, n, -w - r + i - enlarge)};
  while (!stack.empty()) {
    const Cell node = std::move(stack.back());
    stack.pop_back();
    const int l = node.level();
    if (node.contains_zero()) {
      if (l > R) continue;
    } else {
      const int u = node.shell();
      if (u > R || (phi.lower() && u < *phi.lower())) continue;
    }
    const PAdicScalar b = node.center().dot(x);
    const int k = l + w;
    if (b.valuation_or(kInf) < std::min(i, k)) continue;
    if (auto val = phi.constant_on(node)) {
      if (is_zero_value(*val)) continue;
      const Rational jac = q_pow(q, k - l * n);
      if (k >= i)
        total += *val * dist.pair_ball(b, k) * jac;
      else
        total += *val * slab * jac;
      continue;
    }
    auto kids = node.children();
    for (auto& c : kids) stack.push_back(std::move(c));
  }
  return total;
}

}  // namespace

Rational power_pair_ball(int q, int n, const PAdicScalar& y, int k) {
  require_power_dim(n);
  const int v = y.valuation_or(kInf);
  if (v < k) return q_pow(q, v * n - k);
  return power_pair_inner(q, n, k);
}

Rational RegularizedPower::pair_ball(const PAdicScalar& b, int k) const {
  return power_pair_ball(q, n, b - PAdicScalar(q, shift), k);
}

Rational RegularizedPower::pair(const RFunction& f) const {
  if (f.dim() != 1) throw std::invalid_argument("regularized powers pair with functions on F");
  Rational s = 0;
  for (const auto& [c, v] : f.terms()) s += v * pair_ball(c.center()[0], c.level());
  return s;
}

Rational pair_regularized(const RegularizedPower& d, const RFunction& f, const Rational& value_at_shift) {
  if (f.dim() != 1) throw std::invalid_argument("regularized powers pair with functions on F");
  if (f(scalar_vec(PAdicScalar(d.q, d.shift))) != value_at_shift)
    throw std::invalid_argument("value_at_shift differs from f(shift)");
  return d.pair(f);
}

Rational BetaDistribution::constant() const { return (1 - q_pow(q, n - 1)) / (1 - q_pow(q, -n)); }

Rational BetaDistribution::pair_ball(const PAdicScalar& b, int k) const {
  return constant() * (power_pair_ball(q, n, b - PAdicScalar(q, 1), k) - power_pair_ball(q, n, b, k));
}

Rational BetaDistribution::pair(const RFunction& f) const {
  if (f.dim() != 1) throw std::invalid_argument("β pairs with functions on F");
  Rational s = 0;
  for (const auto& [c, v] : f.terms()) s += v * pair_ball(c.center()[0], c.level());
  return s;
}

Cyclotomic Character::operator()(const PAdicScalar& x) const {
  const auto [k, a] = x.principal_part();
  if (k == 0) return Cyclotomic(1);
  if (k > conductor_cap) throw InsufficientConductor(q, k, conductor_cap);
  return Cyclotomic::root(q, k, static_cast<std::int64_t>(a));
}

Cyclotomic Character::pair_ball(const PAdicScalar& b, int k) const {
  if (k < 0) return Cyclotomic();
  return (*this)(b) * q_pow(q, -k);
}

Cyclotomic Character::pair(const CFunction& f) const {
  Cyclotomic s;
  for (const auto& [c, v] : f.terms()) s += v * pair_ball(c.center()[0], c.level());
  return s;
}

// ---------------------------------------------------------------------------

RFunction radon_slice(const RFunction& f, const PAdicVector& xi) {
  if (xi.is_zero()) throw std::invalid_argument("Radon transform at ξ = 0");
  const int q = f.prime();
  const int n = f.dim();
  const int u = xi.valuation();
  std::vector<RFunction::Term> t;
  for (const auto& [c, v] : f.terms())
    t.push_back({Cell(scalar_vec(xi.dot(c.center())), c.level() + u), v * q_pow(q, -c.level() * (n - 1) + u)});
  return RFunction::sum(q, 1, t);
}

Rational radon_M(const RFunction& f, const PAdicVector& xi) {
  if (xi.is_zero()) throw std::invalid_argument("Radon transform at ξ = 0");
  const int q = f.prime();
  const int n = f.dim();
  const int u = xi.valuation();
  const PAdicScalar one(q, 1);
  Rational s = 0;
  for (const auto& [c, v] : f.terms()) {
    const int m = c.level();
    if ((one - xi.dot(c.center())).valuation_or(kInf) >= m + u) s += v * q_pow(q, -m * (n - 1) + u);
  }
  return s;
}

Rational radon_M_fiber(const RFunction& f, const PAdicVector& xi) {
  if (xi.is_zero()) throw std::invalid_argument("Radon transform at ξ = 0");
  const int q = f.prime();
  const int n = f.dim();
  const int u = xi.valuation();
  int j = 0;
  while (xi[j].valuation_or(kInf) != u) ++j;
  // On {ξ·x = 1}, x_j = (1 − Σ_{i≠j} ξ_i x_i)/ξ_j and dμ_ξ = |ξ_j|^{−1} dx′.
  // Over a cell of x′ of level m, x_j mod π^m does not move, since v(ξ_i) ≥ v(ξ_j).
  Rational s = 0;
  for (const auto& [c, v] : f.terms()) {
    const int m = c.level();
    PAdicScalar num(q, 1);
    for (int i = 0; i < n; ++i)
      if (i != j) num -= xi[i] * c.center()[i];
    PAdicScalar xj(q, 0);
    if (!num.is_zero()) xj = num * xi[j].inverse(std::max(1, m - num.valuation() + u + 1));
    if ((xj - c.center()[j]).valuation_or(kInf) >= m) s += v * q_pow(q, -m * (n - 1) + u);
  }
  return s;
}

LazyShellFunction<Rational> radon_M_as_function(const RFunction& f) {
  require_cc(f);
  const int q = f.prime();
  const int n = f.dim();
  if (f.is_zero()) return LazyShellFunction<Rational>(q, n, [](const PAdicVector&) { return Rational(0); }, {1}, 0);
  auto fp = std::make_shared<const RFunction>(f);
  const InvarianceCertificate cert{std::max(1, invariance_level(f).level)};
  auto oracle = [fp, q, n](const Cell& node) -> std::optional<Rational> {
    if (node.contains_zero()) return std::nullopt;
    const int u = node.shell();
    const int l = node.level();
    const PAdicScalar one(q, 1);
    Rational s = 0;
    for (const auto& [c, v] : fp->terms()) {
      const int m = c.level();
      const int target = m + u;
      const int reach = l + c.shell();
      const int vy = (one - node.center().dot(c.center())).valuation_or(kInf);
      bool hit;
      if (reach >= target)
        hit = vy >= target;
      else if (vy < reach)
        hit = false;
      else
        return std::nullopt;
      if (hit) s += v * q_pow(q, -m * (n - 1) + u);
    }
    return s;
  };
  return LazyShellFunction<Rational>(
      q, n, [fp](const PAdicVector& xi) { return radon_M(*fp, xi); }, cert, -min_shell(f), std::nullopt, oracle);
}

Rational apply_A_beta(const LazyShellFunction<Rational>& phi, const PAdicVector& x, StabilizedOptions opt) {
  return stabilized_integral(phi, x, BetaDistribution{phi.prime(), phi.dim()}, opt.enlarge);
}

LazyShellFunction<Rational> apply_A_beta_as_function(const LazyShellFunction<Rational>& phi) {
  if (!phi.upper()) throw std::invalid_argument("A_β needs φ in C_−");
  // φ ∈ C_{≤U} ⟹ A_βφ ∈ C_{≥−U−a}, a = r − i.
  const int a = phi.invariance() - BetaDistribution{phi.prime(), phi.dim()}.support_exponent(phi.invariance());
  return LazyShellFunction<Rational>(
      phi.prime(), phi.dim(), [phi](const PAdicVector& x) { return apply_A_beta(phi, x); }, phi.certificate(),
      std::nullopt, -*phi.upper() - a);
}

// ---------------------------------------------------------------------------

CFunction to_cyclotomic(const RFunction& f) {
  std::vector<CFunction::Term> t;
  for (const auto& [c, v] : f.terms()) t.push_back({c, Cyclotomic(v)});
  return CFunction::make(f.prime(), f.dim(), std::move(t));
}

Cyclotomic fourier_Fprime(const CFunction& f, const PAdicVector& xi, const Character& psi) {
  require_cc(f);
  const int q = f.prime();
  const int n = f.dim();
  const int u = xi.valuation();
  Cyclotomic s;
  for (const auto& [c, v] : f.terms()) {
    const int m = c.level();
    const Rational mes = q_pow(q, -m * n);
    Cyclotomic wave = m + u >= 0 ? psi(-xi.dot(c.center())) * mes : Cyclotomic();
    s += v * (wave - Cyclotomic(mes));
  }
  return s;
}

Cyclotomic fourier_Fprime(const RFunction& f, const PAdicVector& xi, const Character& psi) {
  return fourier_Fprime(to_cyclotomic(f), xi, psi);
}

Cyclotomic fourier_Fprime(const LazyShellFunction<Cyclotomic>& f, const PAdicVector& xi, const Character& psi) {
  if (!f.lower()) throw std::invalid_argument("F′ needs f in C_+ (a lower shell bound)");
  if (xi.is_zero()) throw std::invalid_argument("F′ evaluated at ξ = 0");
  const int q = f.prime();
  const int n = f.dim();
  const int vx = xi.valuation();
  // ψ(−ξ·x) = 1 once v(x) ≥ −v(ξ): only the annulus L ≤ v(x) < −v(ξ) contributes.
  Cyclotomic total;
  std::vector<Cell> stack{Cell::ball(q, n, *f.lower())};
  while (!stack.empty()) {
    const Cell node = std::move(stack.back());
    stack.pop_back();
    const int l = node.level();
    if (node.contains_zero()) {
      if (l >= -vx) continue;
    } else {
      const int u = node.shell();
      if (u >= -vx || u < *f.lower() || (f.upper() && u > *f.upper())) continue;
      if (auto val = f.constant_on(node)) {
        if (is_zero_value(*val)) continue;
        const Rational mes = q_pow(q, -l * n);
        Cyclotomic wave = l + vx >= 0 ? psi(-xi.dot(node.center())) * mes : Cyclotomic();
        total += *val * (wave - Cyclotomic(mes));
        continue;
      }
    }
    auto kids = node.children();
    for (auto& c : kids) stack.push_back(std::move(c));
  }
  return total;
}

LazyShellFunction<Cyclotomic> fourier_Fprime_as_function(const RFunction& f, const Character& psi) {
  require_cc(f);
  const int q = f.prime();
  const int n = f.dim();
  if (f.is_zero()) return LazyShellFunction<Cyclotomic>(q, n, [](const PAdicVector&) { return Cyclotomic(); }, {1}, 0);
  auto fp = std::make_shared<const CFunction>(to_cyclotomic(f));
  const InvarianceCertificate cert{std::max(1, invariance_level(f).level)};
  auto oracle = [fp, psi, q, n](const Cell& node) -> std::optional<Cyclotomic> {
    if (node.contains_zero()) return std::nullopt;
    const int u = node.shell();
    const int l = node.level();
    Cyclotomic s;
    for (const auto& [c, v] : fp->terms()) {
      const int m = c.level();
      const Rational mes = q_pow(q, -m * n);
      if (m + u < 0) {
        s -= v * mes;
        continue;
      }
      if (l + c.shell() < 0) return std::nullopt;
      s += v * (psi(-node.center().dot(c.center())) * mes - Cyclotomic(mes));
    }
    return s;
  };
  return LazyShellFunction<Cyclotomic>(
      q, n, [fp, psi](const PAdicVector& xi) { return fourier_Fprime(*fp, xi, psi); }, cert, -min_shell(f) - 1,
      std::nullopt, oracle);
}

Cyclotomic fourier_F(const LazyShellFunction<Cyclotomic>& phi, const PAdicVector& x, const Character& psi,
                     StabilizedOptions opt) {
  return stabilized_integral(phi, x, psi, opt.enlarge);
}

Cyclotomic fourier_F(const CFunction& phi, const PAdicVector& x, const Character& psi) {
  require_cc(phi);
  if (x.is_zero()) throw std::invalid_argument("F evaluated at x = 0");
  const int q = phi.prime();
  const int n = phi.dim();
  const int w = x.valuation();
  Cyclotomic s;
  for (const auto& [c, v] : phi.terms()) {
    const int m = c.level();
    if (w + m >= 0) s += v * psi(c.center().dot(x)) * q_pow(q, -m * n);
  }
  return s;
}

LazyShellFunction<Cyclotomic> fourier_F_as_function(const CFunction& phi, const Character& psi) {
  require_cc(phi);
  const int q = phi.prime();
  const int n = phi.dim();
  if (phi.is_zero())
    return LazyShellFunction<Cyclotomic>(q, n, [](const PAdicVector&) { return Cyclotomic(); }, {1}, 0, 0);
  auto fp = std::make_shared<const CFunction>(phi);
  const InvarianceCertificate cert{std::max(1, invariance_level(phi).level)};
  auto oracle = [fp, psi, q, n](const Cell& node) -> std::optional<Cyclotomic> {
    const int l = node.level();
    const bool zero = node.contains_zero();
    const int u = zero ? l : node.shell();
    Cyclotomic s;
    for (const auto& [c, v] : fp->terms()) {
      const int m = c.level();
      if (u < -m) {
        if (zero) return std::nullopt;  // v(x) sweeps past −m inside the node
        continue;
      }
      if (l + c.shell() < 0) return std::nullopt;
      s += v * psi(c.center().dot(node.center())) * q_pow(q, -m * n);
    }
    return s;
  };
  return LazyShellFunction<Cyclotomic>(
      q, n, [fp, psi](const PAdicVector& x) { return fourier_F(*fp, x, psi); }, cert, std::nullopt,
      -phi.max_level(), oracle);
}

// ---------------------------------------------------------------------------

Rational chernov_constant(int q, int n) {
  return (1 - q_pow(q, n - 1)) / ((1 - q_pow(q, -1)) * (1 - q_pow(q, -n)));
}

Rational sphere_power_average(int q, int n, const PAdicVector& y, int m) {
  require_power_dim(n);
  if (y.is_zero()) return power_pair_inner(q, n, m) * (1 - q_pow(q, -n));
  // Pushforward of the unit sphere under η ↦ η·y, e = v(y):
  // density q^e (1_{π^eO} − q^{1−n} 1_{π^{e+1}O}).
  const int e = y.valuation();
  auto ball_integral = [&](int k) {  // ∫_{π^kO} P(s, m) ds
    Rational s = q_pow(q, -std::max(k, m)) * power_pair_inner(q, n, m);
    for (int j = k; j < m; ++j) s += (1 - q_pow(q, -1)) * q_pow(q, -j) * q_pow(q, j * n - m);
    return s;
  };
  return q_pow(q, e) * (ball_integral(e) - q_pow(q, 1 - n) * ball_integral(e + 1));
}

Rational chernov_invert(const RFunction& f, const PAdicVector& x) {
  if (x.is_zero()) throw std::invalid_argument("Černov inversion at x = 0");
  const int q = f.prime();
  const int n = f.dim();
  Rational s = 0;
  for (const auto& [c, v] : f.terms()) {
    const int m = c.level();
    s += v * q_pow(q, -m * (n - 1)) * sphere_power_average(q, n, c.center() - x, m);
  }
  return chernov_constant(q, n) * s;
}

Rational cavalieri_integral(const RFunction& f, const PAdicVector& xi) { return radon_slice(f, xi).integrate(); }

Rational kochubei_integral(const PAdicVector& x) {
  if (x.is_zero()) throw std::invalid_argument("Kochubei integral at x = 0");
  const int q = x.prime();
  const int n = x.dim();
  const int e = x.valuation();
  // ⟨|s|^{−n}, q^e (1_{π^eO} − q^{1−n} 1_{π^{e+1}O})⟩.
  return q_pow(q, e) * (power_pair_inner(q, n, e) - q_pow(q, 1 - n) * power_pair_inner(q, n, e + 1));
}

// ---------------------------------------------------------------------------

MultKernel<Cyclotomic> psi_alpha_kernel(int q, int lo, int hi, const Character& psi) {
  std::vector<CFunction::Term> t;
  for (int a = lo; a <= std::min(hi, -1); ++a) {
    const Int count = int_pow(q, -a);
    for (Int j = 1; j < count; ++j) {
      if (j % q == 0) continue;
      const PAdicScalar c = PAdicScalar::from_parts(q, a, j);
      t.push_back({Cell(scalar_vec(c), 0), psi(-c) - Cyclotomic(1)});
    }
  }
  return MultKernel<Cyclotomic>(CFunction::make(q, 1, std::move(t)));
}

Cyclotomic keybeta_pairing(const RFunction& h, int n, const Character& psi) {
  if (h.dim() != 1) throw std::invalid_argument("keybeta pairs with functions on F");
  const int q = h.prime();
  if (h.is_zero() || h.max_level() < 1) return Cyclotomic();
  // ∫ψ(s/t) h(s) ds = Σ h_i ψ(c_i/t) q^{−m_i} 1[m_i ≥ v(t)] vanishes for v(t) > max m_i,
  // and σ(α)(t) = (ψ(−1/t) − 1)|t|^{−n} vanishes for v(t) ≤ 0.
  const auto sa = sigma(psi_alpha_kernel(q, -h.max_level(), -1, psi), n);
  Cyclotomic total;
  for (const auto& [cell, coeff] : sa.function().terms()) {
    const int a = cell.shell();
    int rel = cell.level() - a;
    for (const auto& [c, v] : h.terms())
      if (!c.contains_zero() || !c.center().is_zero()) {
        if (!c.center().is_zero()) rel = std::max(rel, a - c.shell());
      }
    for (const auto& sub : cell.descendants(a + rel)) {
      const PAdicScalar tinv = sub.center()[0].inverse(rel);
      Cyclotomic g;
      for (const auto& [c, v] : h.terms()) {
        const int m = c.level();
        if (m < a) continue;
        g += v * psi(c.center()[0] * tinv) * q_pow(q, -m);
      }
      total += coeff * g * q_pow(q, a - sub.level());
    }
  }
  return total;
}

Cyclotomic psi_alpha_convolve_M(const RFunction& f, const PAdicVector& xi, const Character& psi) {
  require_cc(f);
  if (f.is_zero()) return Cyclotomic();
  const int q = f.prime();
  const auto mf = radon_M_as_function(f);
  const auto mfc = LazyShellFunction<Cyclotomic>(
      q, f.dim(), [mf](const PAdicVector& x) { return Cyclotomic(mf(x)); }, mf.certificate(), mf.upper());
  // Mf(t^{−1}ξ) ≠ 0 needs v(ξ) − v(t) ≤ −min shell; α(t) ≠ 0 needs v(t) ≤ −1.
  const int lo = xi.valuation() + min_shell(f);
  if (lo > -1) return Cyclotomic();
  return mult_convolve(psi_alpha_kernel(q, lo, -1, psi), mfc)(xi);
}

// ---------------------------------------------------------------------------

PAdicVector LinearMap::apply(const PAdicVector& x) const {
  PAdicVector y(q, n);
  for (int i = 0; i < n; ++i) {
    PAdicScalar s(q, 0);
    for (int j = 0; j < n; ++j) s += PAdicScalar(q, u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * x[j];
    y[i] = s.shifted(d[static_cast<std::size_t>(i)]);
  }
  return y;
}

PAdicVector LinearMap::apply_transpose(const PAdicVector& xi) const {
  PAdicVector y(q, n);
  for (int j = 0; j < n; ++j) {
    PAdicScalar s(q, 0);
    for (int i = 0; i < n; ++i)
      s += PAdicScalar(q, u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
           xi[i].shifted(d[static_cast<std::size_t>(i)]);
    y[j] = s;
  }
  return y;
}

Rational LinearMap::abs_det() const {
  int s = 0;
  for (int i = 0; i < n; ++i) s += d[static_cast<std::size_t>(i)];
  return q_pow(q, -s);
}

RFunction transform(const RFunction& f, const LinearMap& g) {
  int dmax = g.d[0];
  for (int i = 1; i < g.n; ++i) dmax = std::max(dmax, g.d[static_cast<std::size_t>(i)]);
  std::vector<RFunction::Term> t;
  for (const auto& [c, v] : f.terms()) {
    // g(c + π^mO^n) = g(c) + Π_i π^{m+d_i}O, split to the common level m + max d_i.
    const int m = c.level();
    const int level = m + dmax;
    std::vector<PAdicVector> pts{g.apply(c.center())};
    for (int i = 0; i < g.n; ++i) {
      const int gap = level - m - g.d[static_cast<std::size_t>(i)];
      const Int count = int_pow(g.q, gap);
      std::vector<PAdicVector> next;
      for (const auto& p : pts)
        for (Int j = 0; j < count; ++j) {
          PAdicVector x = p;
          x[i] = x[i] + PAdicScalar::from_parts(g.q, m + g.d[static_cast<std::size_t>(i)], j);
          next.push_back(x);
        }
      pts = std::move(next);
    }
    for (const auto& p : pts) t.push_back({Cell(p, level), v});
  }
  return RFunction::sum(f.prime(), f.dim(), t);
}

}  // namespace radon::padic
