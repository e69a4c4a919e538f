#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "radon/real/radial.hpp"
#include "radon/specfun/specfun.hpp"

namespace radon::real {

using cplx = std::complex<double>;

/// Gauss points per panel of the graded composite rules: α-side convolutions
/// (kAlphaNodes) and β-side pairings (kPanelNodes).
inline constexpr int kAlphaNodes = 12;
inline constexpr int kPanelNodes = 14;

/// Zonal kernel a_k(t) for the sphere S^{n−1}: C_k^{(n−2)/2}(t)/C_k^{(n−2)/2}(1),
/// and the Chebyshev T_k(t) for n = 2.
double a_k_eval(int n, int k, double t);

/// a_k(t) by averaging Y(ω) = Re(ω₁ + iω₂)^k over the slice {ω·e₁ = t}
/// (two points for n = 2, a circle with `points` nodes for n = 3).
double a_k_direct(int n, int k, double t, int points = 64);

/// Density of α_k against dt: mes(S^{n−2}) t^{−n} a_k(t)(1−t²)^{(n−3)/2} on (0, 1).
double alpha_density(int n, int k, double t);

/// (α_k ∗ u)(r) = ∫₀¹ u(r/t) dα_k(t).
double alpha_convolve(int n, int k, const RadialFunction& u, double r,
                      int nodes = kAlphaNodes);
/// Taylor jet of α_k ∗ u at r: derivatives fall on u, d^j/dr^j u(r/t) = u^{(j)}(r/t) t^{−j}.
RealJet alpha_convolve_jet(int n, int k, const RadialFunction& u, long double r, int jet_order,
                           int nodes = kAlphaNodes);
/// α_k ∗ u as a radial function (support (0, u.hi)).
RadialFunction alpha_image(int n, int k, const RadialFunction& u, int nodes = kAlphaNodes);

/// ∫ t^s dα_k(t) by Gauss–Jacobi; needs Re(s) > n − 1.
cplx mellin_alpha_quad(int n, int k, cplx s, int order = specfun::kDefaultQuadratureOrder);
/// 2^{n+k−1} π^{(n−1)/2} Γ(s−n+1)/Γ(s+k) · Γ((s+k+1)/2)/Γ((s−n−k)/2+1). PoleError at poles.
cplx mellin_alpha_formula(int n, int k, cplx s);

/// β_k = C t^{k−1}(−d/dt)^N (t^{1−k}(1−t²)_+^λ) dt.
struct BetaKernelReal {
  int n = 2;
  int k = 0;

  double constant() const;
  int derivative_order() const { return n + k - 1; }
  double lambda() const { return (n + 2 * k - 3) / 2.0; }
};

using JetFunction = std::function<RealJet(long double t, int order)>;

/// ⟨β_k, h⟩ = C ∫ t^{1−k}(1−t²)^λ D^N[t^{k−1} h](t) dt over [t_lo, 1]; h must vanish on (0, t_lo).
/// `breaks` are points of (t_lo, 1) where h varies sharply.
double beta_pair(int n, int k, const JetFunction& h, long double t_lo, int nodes = kPanelNodes,
                 const std::vector<long double>& breaks = {});

/// ⟨β_k, t^s⟩, continued analytically in s: the t-integral near 0 is summed as a
/// convergent series term by term. PoleError where the continuation has a pole.
cplx beta_mellin(int n, int k, cplx s, int order = specfun::kDefaultQuadratureOrder);

/// (β_k ∗ g)(r) = ⟨β_k(t), g(r/t)⟩ for g with bounded support.
double beta_convolve(int n, int k, const RadialFunction& g, double r, int nodes = kPanelNodes);

/// Radial part of Inv: g(r) = r^{−n} φ(1/r).
RadialFunction inv_radial(int n, const RadialFunction& phi);

/// M^{−1}φ = β_k ∗ Inv(φ), radial part at r.
double minv_apply(int n, int k, const RadialFunction& phi, double r, int nodes = kPanelNodes);

/// Degree-k harmonic Y(x) = Re(x₁ + ix₂)^k restricted to the unit sphere.
double harmonic_y(int k, const std::vector<double>& omega);

/// Rf(ω, t) for f = u ⊗ Y (Y = harmonic_y) by quadrature over the hyperplane ω·x = t.
double radon_direct(int n, const RadialFunction& u, int k, const std::vector<double>& omega, double t,
                    int order = specfun::kDefaultQuadratureOrder);

struct ReportRow {
  std::string module;
  int n = 0;
  int k = 0;  // k, or p for the complex report
  int q = -1; // complex report only
  double point = 0;
  double value_quad = 0;
  double value_formula = 0;
  double abs_err = 0;
  double rel_err = 0;
};

/// Quadrature vs formula Mellin rows for the given grid.
std::vector<ReportRow> mellin_report(const std::vector<int>& ns, int kmax, const std::vector<double>& s_offsets,
                                     int order = specfun::kDefaultQuadratureOrder);

/// CSV with header module,n,k,s,value_quad,value_formula,abs_err,rel_err (complex rows add q).
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool complex_columns = false);

}  // namespace radon::real
