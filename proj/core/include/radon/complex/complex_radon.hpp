#pragma once

#include <complex>
#include <vector>

#include "radon/real/radial.hpp"
#include "radon/real/real_radon.hpp"
#include "radon/specfun/specfun.hpp"

namespace radon::complex_radon {

using cplx = std::complex<double>;
using real::JetFunction;
using real::kAlphaNodes;
using real::kPanelNodes;
using real::RadialFunction;
using real::ReportRow;
using specfun::RealJet;

/// a_{p,q}(t) = t^{|p−q|} P_m^{(n−2,|p−q|)}(2t²−1) / P_m^{(n−2,|p−q|)}(1), m = min(p, q).
double a_pq_eval(int n, int p, int q, double t);

/// n = 2 oracle: average of Y(ω)/Y(x) for Y = z₁^p z̄₂^q over the slice
/// {ω ∈ S³ : ⟨ω, x⟩ = t} (a circle), with x = (cos θ₀, sin θ₀).
double a_pq_direct(int p, int q, double t, int points = 0, double theta0 = 0.7);

/// mes(S^{2n−3}) t^{1−2n} a_{p,q}(t)(1−t²)^{n−2} on (0, 1).
double alpha_pq_density(int n, int p, int q, double t);

double alpha_pq_convolve(int n, int p, int q, const RadialFunction& u, double r, int nodes = kAlphaNodes);
RealJet alpha_pq_convolve_jet(int n, int p, int q, const RadialFunction& u, long double r, int jet_order,
                              int nodes = kAlphaNodes);
RadialFunction alpha_pq_image(int n, int p, int q, const RadialFunction& u, int nodes = kAlphaNodes);

/// ∫ t^s dα_{p,q} by Gauss–Jacobi; needs Re(s) > 2n − 2.
cplx mellin_alpha_pq_quad(int n, int p, int q, cplx s, int order = specfun::kDefaultQuadratureOrder);
/// π^{n−1} Γ((s+d)/2−n+1) Γ((s−d)/2−n+1) / (Γ((s+p+q)/2) Γ((s−p−q)/2−n+1)), d = |p−q|.
cplx mellin_alpha_pq_formula(int n, int p, int q, cplx s);

struct BetaKernelComplex {
  int n = 2;
  int p = 0;
  int q = 0;

  int m() const { return p < q ? p : q; }
  /// Number of operator factors n + m − 1.
  int factors() const { return n + m() - 1; }
  bool delta() const { return m() == 0; }
  /// 1/(2^{n+m−2} π^{n−1} Γ(m)) for m ≥ 1; (2π)^{1−n} on the delta branch.
  double constant() const;
};

/// m ≥ 1: K ∫ t^{−p−q−2n+1}(1−t²)^{m−1} [∏_j (t d/dt + p+q−2j)] h dt over [t_lo, 1].
/// m = 0: (2π)^{1−n} [∏_j (t d/dt + p+q−2j)] h at t = 1.
double beta_pq_pair(int n, int p, int q, const JetFunction& h, long double t_lo = 0, int nodes = kPanelNodes,
                    const std::vector<long double>& breaks = {});

/// ⟨β_{p,q}, t^s⟩, continued in s.
cplx beta_pq_mellin(int n, int p, int q, cplx s, int order = specfun::kDefaultQuadratureOrder);

double beta_pq_convolve(int n, int p, int q, const RadialFunction& g, double r, int nodes = kPanelNodes);

/// Radial part of Inv: r^{−2n} φ(1/r). The harmonic factor picks up a conjugation.
RadialFunction inv_radial_complex(int n, const RadialFunction& phi);

double minv_pq_apply(int n, int p, int q, const RadialFunction& phi, double r, int nodes = kPanelNodes);

/// Rows (n, p, q, s) with s = 2n + offset.
std::vector<ReportRow> mellin_pq_report(const std::vector<int>& ns, int pmax, const std::vector<double>& s_offsets,
                                        int order = specfun::kDefaultQuadratureOrder);

}  // namespace radon::complex_radon
