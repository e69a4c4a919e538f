#pragma once

#include <array>
#include <optional>
#include <vector>

#include "radon/padic/funcspace.hpp"
#include "radon/value/cyclotomic.hpp"

namespace radon::padic {

using RFunction = CellFunction<Rational>;
using CFunction = CellFunction<Cyclotomic>;

/// P(y, k) = ⟨|s|^{−n}, 1_{y+π^kO}⟩ = ∫ |s|^{−n}(1_B(s) − 1_B(0)) ds.
Rational power_pair_ball(int q, int n, const PAdicScalar& y, int k);

/// The distribution |s − shift|^{−n} on F, shift ∈ {0, 1}.
struct RegularizedPower {
  int q = 2;
  int n = 2;
  int shift = 0;

  Rational pair_ball(const PAdicScalar& b, int k) const;
  Rational pair(const RFunction& f) const;
};

/// ⟨|s − c|^{−n}, f⟩ = ∫ |s − c|^{−n}(f(s) − f(c)) ds for a Schwartz–Bruhat f on F.
/// `value_at_shift` must equal f(c); it is checked, not trusted.
Rational pair_regularized(const RegularizedPower& d, const RFunction& f, const Rational& value_at_shift);

/// β = c (|s−1|^{−n} − |s|^{−n}) with c = (1 − q^{n−1})/(1 − q^{−n}).
struct BetaDistribution {
  int q = 2;
  int n = 2;

  Rational constant() const;
  Rational pair_ball(const PAdicScalar& b, int k) const;
  Rational pair(const RFunction& f) const;
  /// Exponent i with supp β_U ⊂ π^iO. For |s| > 1 the U-average of |s−1|^{−n}
  /// equals |s|^{−n}, so the two power terms cancel outside O and i = 0 for every U.
  int support_exponent(int /*r*/) const { return 0; }
};

/// Additive character ψ, trivial on O and not on π^{−1}O:
/// ψ(x) = ζ_{q^k}^a where a/q^k is the principal part of x.
struct Character {
  int q = 2;
  int conductor_cap = 12;

  Cyclotomic operator()(const PAdicScalar& x) const;
  /// ∫_{b+π^kO} ψ(s) ds = ψ(b) q^{−k} if k ≥ 0, else 0.
  Cyclotomic pair_ball(const PAdicScalar& b, int k) const;
  Cyclotomic pair(const CFunction& f) const;
  /// For U = 1 + π^rO, ψ_U(s) = ψ(s)·1[v(s) ≥ −r], so i = −r.
  int support_exponent(int r) const { return -r; }
};

// ---------------------------------------------------------------------------
// Radon transform.

/// s ↦ Rf(ξ, s) as a one-dimensional cell function (f Schwartz–Bruhat, ξ ≠ 0).
/// For f = 1_{c+π^mO^n}: Rf(ξ, s) = q^{−m(n−1)+v(ξ)}·1[v(s − ξ·c) ≥ m + v(ξ)].
RFunction radon_slice(const RFunction& f, const PAdicVector& xi);

/// Mf(ξ) = Rf(ξ, 1).
Rational radon_M(const RFunction& f, const PAdicVector& xi);

/// Reference evaluation of Mf(ξ) by solving ξ·x = 1 for a coordinate of maximal
/// norm and enumerating the remaining coordinates cell by cell.
Rational radon_M_fiber(const RFunction& f, const PAdicVector& xi);

/// Mf ∈ C_{≤−R} for f ∈ C_c supported in v ≥ R, with f's invariance level.
LazyShellFunction<Rational> radon_M_as_function(const RFunction& f);

// ---------------------------------------------------------------------------
// A_D and Fourier.

struct StabilizedOptions {
  /// Extra levels added to the lattice Λ (I(Λ′) = I(Λ) for Λ′ ⊃ Λ).
  int enlarge = 0;
};

/// (A_β φ)(x) = I(Λ) with Λ = {ξ : v(ξ) ≥ −v(x) − r + i, ξ·x ∈ π^iO}.
Rational apply_A_beta(const LazyShellFunction<Rational>& phi, const PAdicVector& x, StabilizedOptions opt = {});
LazyShellFunction<Rational> apply_A_beta_as_function(const LazyShellFunction<Rational>& phi);

/// F′f(ξ) = ∫ f(x)(ψ(−ξ·x) − 1) dx for f ∈ C_c.
Cyclotomic fourier_Fprime(const RFunction& f, const PAdicVector& xi, const Character& psi);
Cyclotomic fourier_Fprime(const CFunction& f, const PAdicVector& xi, const Character& psi);
/// F′ of a lazy element of C_+ (lower shell bound required), by cell descent.
Cyclotomic fourier_Fprime(const LazyShellFunction<Cyclotomic>& f, const PAdicVector& xi, const Character& psi);
LazyShellFunction<Cyclotomic> fourier_Fprime_as_function(const RFunction& f, const Character& psi);

/// F = A_ψ on C_−.
Cyclotomic fourier_F(const LazyShellFunction<Cyclotomic>& phi, const PAdicVector& x, const Character& psi,
                     StabilizedOptions opt = {});
/// F on C_c in closed form: Σ coeff q^{−mn} ψ(c·x) 1[v(x) ≥ −m].
Cyclotomic fourier_F(const CFunction& phi, const PAdicVector& x, const Character& psi);
/// F(φ) ∈ C_+ for φ ∈ C_c.
LazyShellFunction<Cyclotomic> fourier_F_as_function(const CFunction& phi, const Character& psi);

/// Rational cell function viewed in the cyclotomic ring.
CFunction to_cyclotomic(const RFunction& f);

// ---------------------------------------------------------------------------
// Černov, Cavalieri, Kochubei.

/// f(x) = c′ ∫_{‖η‖=1} ⟨|s|^{−n}, Rf(η, s + η·x)⟩ dη, c′ = (1−q^{n−1})/((1−q^{−1})(1−q^{−n})).
Rational chernov_invert(const RFunction& f, const PAdicVector& x);
Rational chernov_constant(int q, int n);
/// ∫_{‖η‖=1} P(η·y, m) dη, through the pushforward of the sphere under η ↦ η·y.
Rational sphere_power_average(int q, int n, const PAdicVector& y, int m);

/// ∫_F Rf(ξ, s) ds.
Rational cavalieri_integral(const RFunction& f, const PAdicVector& xi);

/// Regularized ∫_{‖η‖=1} |η·x|^{−n} dη.
Rational kochubei_integral(const PAdicVector& x);

// ---------------------------------------------------------------------------
// Multiplicative kernels tied to ψ.

/// α(t) = ψ(−t) − 1 restricted to shells lo ≤ v(t) ≤ hi (zero on v(t) ≥ 0).
MultKernel<Cyclotomic> psi_alpha_kernel(int q, int lo, int hi, const Character& psi);

/// ⟨σ(α) ∗ ψ, h⟩ with α(t) = ψ(−t) − 1 truncated to the shells the pairing sees.
Cyclotomic keybeta_pairing(const RFunction& h, int n, const Character& psi);

/// (α ∗ Mf)(ξ) with α(t) = ψ(−t) − 1 truncated to the shells where Mf(t^{−1}ξ) can be nonzero.
Cyclotomic psi_alpha_convolve_M(const RFunction& f, const PAdicVector& xi, const Character& psi);

// ---------------------------------------------------------------------------
// Linear change of variables g = diag(q^{d_i}) · U with U ∈ GL_n(Z), det U = ±1.

struct LinearMap {
  int q = 2;
  int n = 2;
  std::array<int, kMaxDim> d{};
  std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> u{};

  PAdicVector apply(const PAdicVector& x) const;
  PAdicVector apply_transpose(const PAdicVector& xi) const;
  /// |det g| = q^{−Σ d_i}.
  Rational abs_det() const;
};

/// (g·f)(x) = f(g^{−1}x), as a cell function.
RFunction transform(const RFunction& f, const LinearMap& g);

}  // namespace radon::padic
