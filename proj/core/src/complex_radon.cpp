#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radon/complex/complex_radon.hpp"

namespace radon::complex_radon {

using specfun::cgamma;
using specfun::rgamma;
using specfun::sphere_area;

namespace {

using L = long double;
constexpr double kPi = std::numbers::pi;
constexpr int kGrading = 10;

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
}

L a_pq_ext(int n, int p, int q, L t) {
  const int m = std::min(p, q), d = std::abs(p - q);
  const L a = n - 2, b = d;
  return std::pow(t, d) * specfun::jacobi(m, a, b, 2 * t * t - 1) / specfun::jacobi(m, a, b, L(1));
}

// ∏_j (t d/dt + p+q−2j) applied to a jet of h at t; returns the value.
L apply_factors(const BetaKernelComplex& beta, RealJet h) {
  const int f = beta.factors();
  if (h.order() < f) throw JetOrderError(f, h.order());
  h = h.truncated(f);
  for (int j = 1; j <= f; ++j) {
    const int o = h.order() - 1;
    h = RealJet::variable(h.base(), o) * h.derivative() + h.truncated(o) * L(beta.p + beta.q - 2 * j);
  }
  return h.value();
}

}  // namespace

double a_pq_eval(int n, int p, int q, double t) {
  require_n(n);
  return static_cast<double>(a_pq_ext(n, p, q, t));
}

double a_pq_direct(int p, int q, double t, int points, double theta0) {
  if (points <= 0) points = 2 * (p + q) + 8;
  const double rho = std::sqrt(std::max(0.0, 1 - t * t));
  const cplx x1 = std::cos(theta0), x2 = std::sin(theta0);
  const cplx y1 = -std::sin(theta0), y2 = std::cos(theta0);
  auto Y = [&](cplx z1, cplx z2) { return std::pow(z1, p) * std::pow(std::conj(z2), q); };
  // ω = t x + ρ e^{iφ} x⊥ runs over the unit vectors with ⟨ω, x⟩ = t.
  cplx s = 0;
  for (int i = 0; i < points; ++i) {
    const cplx e = std::polar(rho, 2 * kPi * i / points);
    s += Y(t * x1 + e * y1, t * x2 + e * y2);
  }
  return (s / double(points) / Y(x1, x2)).real();
}

double alpha_pq_density(int n, int p, int q, double t) {
  if (t <= 0 || t >= 1) return 0;
  return sphere_area(2 * n - 3) * std::pow(t, 1 - 2 * n) * a_pq_eval(n, p, q, t) * std::pow(1 - t * t, n - 2);
}

RealJet alpha_pq_convolve_jet(int n, int p, int q, const RadialFunction& u, long double r, int jet_order,
                              int nodes) {
  require_n(n);
  if (std::isinf(u.hi)) throw std::invalid_argument("α_{p,q} ∗ u needs u with bounded support");
  RealJet::Coeffs acc(static_cast<std::size_t>(jet_order) + 1, 0.0L);
  const L t_lo = r / u.hi;
  const L t_hi = u.lo > 0 ? std::min(L(1), r / u.lo) : L(1);
  if (t_lo >= t_hi) return RealJet(r, acc);
  std::vector<L> cuts;
  for (double b : u.breaks) cuts.push_back(r / b);
  const L mes = sphere_area(2 * n - 3);
  const double a = t_hi == 1 ? n - 2 : 0;
  specfun::graded_nodes(t_lo, t_hi, cuts, a, [&](L t, L w) {
    L tail = 1;
    for (int i = 0; i < n - 2; ++i) tail *= a == 0 ? 1 - t * t : 1 + t;
    const auto uj = u.jet_at(r / t, jet_order);
    L tp = w * mes * a_pq_ext(n, p, q, t) * tail;
    for (int i = 0; i < 2 * n - 1; ++i) tp /= t;
    for (int d = 0; d <= jet_order; ++d) {
      acc[static_cast<std::size_t>(d)] += uj[d] * tp;
      tp /= t;
    }
  }, kGrading, nodes);
  return RealJet(r, acc);
}

double alpha_pq_convolve(int n, int p, int q, const RadialFunction& u, double r, int nodes) {
  return static_cast<double>(alpha_pq_convolve_jet(n, p, q, u, r, 0, nodes).value());
}

RadialFunction alpha_pq_image(int n, int p, int q, const RadialFunction& u, int nodes) {
  RadialFunction g;
  g.jet = [n, p, q, u, nodes](long double r, int jet_order) {
    return alpha_pq_convolve_jet(n, p, q, u, r, jet_order, nodes);
  };
  g.lo = 0;
  g.hi = u.hi;
  g.breaks = u.breaks;
  return g;
}

cplx mellin_alpha_pq_quad(int n, int p, int q, cplx s, int order) {
  require_n(n);
  const double b = s.real() - 2 * n + 1;
  if (b <= -1) throw std::invalid_argument("Mellin quadrature of α_{p,q} needs Re(s) > 2n − 2");
  const double mes = sphere_area(2 * n - 3);
  if (s.imag() == 0)
    return specfun::gauss_jacobi(order, n - 2, b)->apply_on(0.0, 1.0, [&](double t) {
      return mes * a_pq_eval(n, p, q, t) * std::pow(1 + t, n - 2);
    });
  std::complex<L> acc = 0;
  specfun::graded_nodes(L(0), L(1), {}, n - 2, [&](L t, L w) {
    acc += w * mes * a_pq_ext(n, p, q, t) * std::pow(1 + t, n - 2) * std::pow(t, L(b)) *
           std::exp(std::complex<L>(0, s.imag() * std::log(t)));
  }, 60, 20);
  return cplx(acc);
}

cplx mellin_alpha_pq_formula(int n, int p, int q, cplx s) {
  require_n(n);
  const double d = std::abs(p - q), pq = p + q;
  const int m = std::min(p, q);
  const cplx x = (s - d) / 2.0 + 1.0 - double(n);
  // Γ(x)/Γ(x − m) = (x−1)(x−2)···(x−m): (s−p−q)/2 − n + 1 = x − m, so the
  // shared poles of these two factors cancel.
  cplx ratio = 1;
  for (int i = 1; i <= m; ++i) ratio *= x - double(i);
  return std::pow(kPi, n - 1) * cgamma((s + d) / 2.0 + 1.0 - double(n)) * ratio * rgamma((s + pq) / 2.0);
}

double BetaKernelComplex::constant() const {
  if (delta()) return std::pow(2 * kPi, 1 - n);
  return 1 / (std::pow(2.0, n + m() - 2) * std::pow(kPi, n - 1) * std::tgamma(m()));
}

double beta_pq_pair(int n, int p, int q, const JetFunction& h, long double t_lo, int nodes,
                    const std::vector<long double>& breaks) {
  require_n(n);
  const BetaKernelComplex beta{n, p, q};
  const int f = beta.factors();
  // δ(1−t): the operator acts on h and is read off at t = 1.
  if (beta.delta()) return static_cast<double>(beta.constant() * apply_factors(beta, h(1.0L, f)));
  if (t_lo >= 1) return 0;
  t_lo = std::max(t_lo, L(0));
  const int m = beta.m();
  L s = 0;
  specfun::graded_nodes(t_lo, L(1), breaks, m - 1, [&](L t, L w) {
    s += w * std::pow(t, -p - q - 2 * n + 1) * std::pow(1 + t, m - 1) * apply_factors(beta, h(t, f));
  }, t_lo > 0 ? kGrading : 40, nodes);
  return static_cast<double>(beta.constant() * s);
}

cplx beta_pq_mellin(int n, int p, int q, cplx s, int order) {
  require_n(n);
  const BetaKernelComplex beta{n, p, q};
  cplx poly = 1;
  for (int j = 1; j <= beta.factors(); ++j) poly *= s + double(p + q - 2 * j);
  if (beta.delta()) return beta.constant() * poly;
  return beta.constant() * poly * specfun::power_beta_integral(s - double(p + q + 2 * n - 2), beta.m() - 1, order);
}

double beta_pq_convolve(int n, int p, int q, const RadialFunction& g, double r, int nodes) {
  if (std::isinf(g.hi)) throw std::invalid_argument("β_{p,q} ∗ g needs g with bounded support");
  const L rl = r;
  auto h = [&](L t, int jet_order) {
    return (RealJet::variable(t, jet_order).reciprocal() * rl).compose_outer(g.jet_at(rl / t, jet_order));
  };
  std::vector<L> cuts;
  for (double b : g.breaks) cuts.push_back(rl / b);
  if (g.lo > 0) cuts.push_back(rl / g.lo);
  return beta_pq_pair(n, p, q, h, rl / g.hi, nodes, cuts);
}

RadialFunction inv_radial_complex(int n, const RadialFunction& phi) { return real::inv_radial_dim(2 * n, phi); }

double minv_pq_apply(int n, int p, int q, const RadialFunction& phi, double r, int nodes) {
  return beta_pq_convolve(n, p, q, inv_radial_complex(n, phi), r, nodes);
}

std::vector<ReportRow> mellin_pq_report(const std::vector<int>& ns, int pmax, const std::vector<double>& s_offsets,
                                        int order) {
  std::vector<ReportRow> rows;
  for (int n : ns)
    for (int p = 0; p <= pmax; ++p)
      for (int q = 0; q <= pmax; ++q)
        for (double off : s_offsets) {
          const double s = 2 * n + off;
          ReportRow row{"complex-radon", n, p, q, s};
          row.value_quad = mellin_alpha_pq_quad(n, p, q, s, order).real();
          row.value_formula = mellin_alpha_pq_formula(n, p, q, s).real();
          row.abs_err = std::abs(row.value_quad - row.value_formula);
          row.rel_err = std::abs(row.value_formula) > 0 ? row.abs_err / std::abs(row.value_formula) : row.abs_err;
          rows.push_back(row);
        }
  return rows;
}

}  // namespace radon::complex_radon
