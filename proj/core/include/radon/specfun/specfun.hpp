#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "radon/errors.hpp"

namespace radon::specfun {

using cplx = std::complex<double>;

/// log Γ(z), principal branch (continuous on C minus the non-positive reals,
/// real on the positive axis). Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);
/// Γ(z) on the complex plane.
cplx cgamma(cplx z);
/// 1/Γ(z); zero (not an error) at the poles of Γ.
cplx rgamma(cplx z);

/// Gegenbauer C_k^λ(t) by the three-term recurrence. λ = 0 gives the
/// normalized limit (2/k)·T_k(t) for k ≥ 1, C_0 = 1.
double gegenbauer(int k, double lambda, double t);
/// Chebyshev T_k(t).
double chebyshev_t(int k, double t);
/// Jacobi P_m^{(a,b)}(t).
double jacobi(int m, double a, double b, double t);
/// Extended-precision versions of the recurrences.
long double gegenbauer(int k, long double lambda, long double t);
long double chebyshev_t(int k, long double t);
long double jacobi(int m, long double a, long double b, long double t);
/// Legendre P_k(t) (oracle use).
double legendre(int k, double t);

/// Surface area of the unit sphere S^d ⊂ R^{d+1}.
double sphere_area(int d);

/// Gauss rule for ∫_{−1}^{1} (1−t)^a (1+t)^b f(t) dt.
template <class T>
struct BasicQuadratureRule {
  std::vector<T> nodes;
  std::vector<T> weights;
  double a = 0;
  double b = 0;
  int order = 0;

  /// Σ w_i f(t_i).
  template <class F>
  auto apply(F&& f) const -> decltype(f(T(0))) {
    decltype(f(T(0))) s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }

  /// ∫_lo^hi (hi−x)^a (x−lo)^b f(x) dx.
  template <class F>
  auto apply_on(T lo, T hi, F&& f) const -> decltype(f(T(0))) {
    const T half = (hi - lo) / 2;
    const T scale = std::pow(half, T(a + b + 1));
    decltype(f(T(0))) s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(lo + half * (nodes[i] + 1));
    return s * scale;
  }
};

using QuadratureRule = BasicQuadratureRule<double>;
using QuadratureRuleExt = BasicQuadratureRule<long double>;

/// Golub–Welsch rule, exact for polynomials of degree ≤ 2·order − 1 under
/// (1−t)^a(1+t)^b. Rules are cached and shared; the function is thread-safe.
std::shared_ptr<const QuadratureRule> gauss_jacobi(int order, double a, double b);
/// The same rule in extended precision.
std::shared_ptr<const QuadratureRuleExt> gauss_jacobi_ext(int order, double a, double b);

/// ∫₀¹ t^{b−1}(1−t²)^λ dt, continued meromorphically in b (series on [0, 1/2],
/// Gauss–Jacobi on [1/2, 1]). PoleError at b = −2j when the j-th binomial
/// coefficient of (1−t²)^λ is nonzero.
cplx power_beta_integral(cplx b, double lambda, int order = 200);

/// ∫_{−1}^{1} (1−t)^a (1+t)^b dt.
double jacobi_weight_mass(double a, double b);

/// Composite rule for ∫_lo^hi (hi−t)^a f(t) dt: the interval is cut at `breaks`
/// and every piece is graded geometrically toward both of its ends, `levels`
/// halvings deep, with `nodes` Gauss points per panel. The panel touching hi
/// carries (hi−t)^a in its weight; elsewhere the factor is folded into w.
/// Calls visit(t, w) once per node.
template <class Visit>
void graded_nodes(long double lo, long double hi, std::vector<long double> breaks, double a, Visit&& visit,
                  int levels = 10, int nodes = 20) {
  if (!(hi > lo)) return;
  std::vector<long double> cuts{lo, hi};
  for (auto b : breaks)
    if (b > lo && b < hi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<long double> pts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const long double x0 = cuts[i], x1 = cuts[i + 1], len = x1 - x0;
    pts.push_back(x0);
    long double f = 0.5L;
    for (int j = 0; j < levels; ++j, f /= 2) {
      pts.push_back(x0 + len * f);
      pts.push_back(x1 - len * f);
    }
  }
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto plain = gauss_jacobi_ext(nodes, 0, 0);
  const auto endw = gauss_jacobi_ext(nodes, a, 0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const long double p0 = pts[i], p1 = pts[i + 1], half = (p1 - p0) / 2;
    const bool last = i + 2 == pts.size();
    const auto& rule = last ? *endw : *plain;
    const long double scale = last ? std::pow(half, static_cast<long double>(a) + 1) : half;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const long double t = p0 + half * (rule.nodes[j] + 1);
      const long double w = scale * rule.weights[j];
      visit(t, last || a == 0 ? w : w * std::pow(hi - t, static_cast<long double>(a)));
    }
  }
}

/// Default Gauss order for Archimedean quadratures.
inline constexpr int kDefaultQuadratureOrder = 200;

}  // namespace radon::specfun
