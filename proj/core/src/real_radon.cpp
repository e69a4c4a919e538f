#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "radon/real/real_radon.hpp"

namespace radon::real {

using specfun::cgamma;
using specfun::gauss_jacobi;
using specfun::rgamma;
using specfun::sphere_area;

namespace {

constexpr double kPi = std::numbers::pi;

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
}

using L = long double;
// Halvings toward each quadrature cut.
constexpr int kGrading = 10;

// t^{twice_e/2} by squaring (and one sqrt), without powl.
L half_power(L t, int twice_e) {
  L r = twice_e % 2 ? std::sqrt(t) : L(1);
  int m = twice_e / 2;
  const bool neg = twice_e < 0;
  if (neg) {
    m = -m;
    if (twice_e % 2) r = 1 / r;
  }
  L b = neg ? 1 / t : t;
  for (; m > 0; m >>= 1, b *= b)
    if (m & 1) r *= b;
  return r;
}

// Taylor coefficients of t ↦ t^a at t.
RealJet power_jet(L t, int a, int order) { return pow(RealJet::variable(t, order), a); }

L a_k_ext(int n, int k, L t) {
  if (n == 2) return specfun::chebyshev_t(k, t);
  const L lam = (n - 2) / L(2);
  return specfun::gegenbauer(k, lam, t) / specfun::gegenbauer(k, lam, L(1));
}

}  // namespace

double a_k_eval(int n, int k, double t) {
  require_n(n);
  if (n == 2) return specfun::chebyshev_t(k, t);
  const double lam = (n - 2) / 2.0;
  return specfun::gegenbauer(k, lam, t) / specfun::gegenbauer(k, lam, 1.0);
}

double a_k_direct(int n, int k, double t, int points) {
  const double rho = std::sqrt(std::max(0.0, 1 - t * t));
  if (n == 2) {
    // Slice {ω ∈ S¹ : ω₁ = t} = {(t, ±ρ)}.
    return 0.5 * (std::pow(cplx(t, rho), k).real() + std::pow(cplx(t, -rho), k).real());
  }
  if (n == 3) {
    // Slice {ω ∈ S² : ω₁ = t} = {(t, ρ cos φ, ρ sin φ)}.
    double s = 0;
    for (int i = 0; i < points; ++i) {
      const double phi = 2 * kPi * i / points;
      s += std::pow(cplx(t, rho * std::cos(phi)), k).real();
    }
    return s / points;
  }
  throw std::invalid_argument("a_k_direct supports n = 2, 3");
}

double alpha_density(int n, int k, double t) {
  if (t <= 0 || t >= 1) return 0;
  return sphere_area(n - 2) * std::pow(t, -n) * a_k_eval(n, k, t) * std::pow(1 - t * t, (n - 3) / 2.0);
}

RealJet alpha_convolve_jet(int n, int k, const RadialFunction& u, long double r, int jet_order, int nodes) {
  require_n(n);
  if (std::isinf(u.hi)) throw std::invalid_argument("α_k ∗ u needs u with bounded support");
  RealJet::Coeffs acc(static_cast<std::size_t>(jet_order) + 1, 0.0L);
  const L t_lo = r / u.hi;
  const L t_hi = u.lo > 0 ? std::min(L(1), r / u.lo) : L(1);
  if (t_lo >= t_hi) return RealJet(r, acc);
  std::vector<L> cuts;
  for (double b : u.breaks) cuts.push_back(r / b);
  const L mes = sphere_area(n - 2);
  // (1−t)^{(n−3)/2} goes into the weight when the window reaches t = 1.
  const double a = t_hi == 1 ? (n - 3) / 2.0 : 0.0;
  specfun::graded_nodes(t_lo, t_hi, cuts, a, [&](L t, L w) {
    const L tail = a == 0 ? half_power(1 - t * t, n - 3) : half_power(1 + t, n - 3);
    const auto uj = u.jet_at(r / t, jet_order);
    L tp = w * mes * half_power(t, -2 * n) * a_k_ext(n, k, t) * tail;
    for (int d = 0; d <= jet_order; ++d) {
      acc[static_cast<std::size_t>(d)] += uj[d] * tp;
      tp /= t;
    }
  }, kGrading, nodes);
  return RealJet(r, acc);
}

double alpha_convolve(int n, int k, const RadialFunction& u, double r, int nodes) {
  return static_cast<double>(alpha_convolve_jet(n, k, u, r, 0, nodes).value());
}

RadialFunction alpha_image(int n, int k, const RadialFunction& u, int nodes) {
  RadialFunction g;
  g.jet = [n, k, u, nodes](long double r, int jet_order) { return alpha_convolve_jet(n, k, u, r, jet_order, nodes); };
  g.lo = 0;
  g.hi = u.hi;
  g.breaks = u.breaks;
  return g;
}

cplx mellin_alpha_quad(int n, int k, cplx s, int order) {
  require_n(n);
  const double b = s.real() - n;
  if (b <= -1) throw std::invalid_argument("Mellin quadrature of α_k needs Re(s) > n − 1");
  // ∫₀¹ (1−t)^a t^b · mes a_k(t)(1+t)^a t^{i Im s} dt with a = (n−3)/2.
  const double a = (n - 3) / 2.0;
  const double mes = sphere_area(n - 2);
  const double im = s.imag();
  if (im == 0)
    return gauss_jacobi(order, a, b)->apply_on(0.0, 1.0, [&](double t) { return mes * a_k_eval(n, k, t) * std::pow(1 + t, a); });
  // t^{i Im s} oscillates without bound at 0: grade toward it.
  std::complex<L> acc = 0;
  specfun::graded_nodes(L(0), L(1), {}, a, [&](L t, L w) {
    acc += w * mes * a_k_ext(n, k, t) * std::pow(1 + t, L(a)) * std::pow(t, L(b)) * std::exp(std::complex<L>(0, im * std::log(t)));
  }, 60, 20);
  return cplx(acc);
}

cplx mellin_alpha_formula(int n, int k, cplx s) {
  require_n(n);
  const cplx c = std::pow(2.0, n + k - 1) * std::pow(kPi, (n - 1) / 2.0);
  return c * cgamma(s - double(n) + 1.0) * cgamma((s + double(k) + 1.0) / 2.0) * rgamma(s + double(k)) *
         rgamma((s - double(n) - double(k)) / 2.0 + 1.0);
}

double BetaKernelReal::constant() const {
  return 1 / (std::pow(2.0, n + k - 2) * std::pow(kPi, (n - 1) / 2.0) * std::tgamma((n + 2 * k - 1) / 2.0));
}

double beta_pair(int n, int k, const JetFunction& h, long double t_lo, int nodes, const std::vector<long double>& breaks) {
  require_n(n);
  const BetaKernelReal beta{n, k};
  const int N = beta.derivative_order();
  const double lam = beta.lambda();
  if (t_lo >= 1) return 0;
  t_lo = std::max(t_lo, L(0));
  L s = 0;
  // (1−t²)^λ = (1−t)^λ(1+t)^λ; the first factor is the rule's weight.
  specfun::graded_nodes(t_lo, L(1), breaks, lam, [&](L t, L w) {
    const auto hj = h(t, N);
    if (hj.order() < N) throw JetOrderError(N, hj.order());
    const L d = (power_jet(t, k - 1, N) * hj).derivative_value(N);
    s += w * std::pow(t, L(1 - k)) * std::pow(1 + t, L(lam)) * d;
  }, t_lo > 0 ? kGrading : 40, nodes);
  return static_cast<double>(beta.constant() * s);
}

cplx beta_mellin(int n, int k, cplx s, int order) {
  require_n(n);
  const BetaKernelReal beta{n, k};
  const int N = beta.derivative_order();
  // D^N t^{k−1+s} = ff · t^{s+k−1−N}; ff from the jet at t = 1.
  const cplx ff = pow(specfun::ComplexJet::variable(1.0, N), cplx(k - 1) + s).derivative_value(N);
  return beta.constant() * ff * specfun::power_beta_integral(s - double(N) + 1.0, beta.lambda(), order);
}

double beta_convolve(int n, int k, const RadialFunction& g, double r, int nodes) {
  if (std::isinf(g.hi)) throw std::invalid_argument("β_k ∗ g needs g with bounded support");
  const L rl = r;
  auto h = [&](L t, int jet_order) {
    return (RealJet::variable(t, jet_order).reciprocal() * rl).compose_outer(g.jet_at(rl / t, jet_order));
  };
  std::vector<L> cuts;
  for (double b : g.breaks) cuts.push_back(rl / b);
  if (g.lo > 0) cuts.push_back(rl / g.lo);
  return beta_pair(n, k, h, rl / g.hi, nodes, cuts);
}

RadialFunction inv_radial(int n, const RadialFunction& phi) { return inv_radial_dim(n, phi); }

double minv_apply(int n, int k, const RadialFunction& phi, double r, int nodes) {
  return beta_convolve(n, k, inv_radial(n, phi), r, nodes);
}

double harmonic_y(int k, const std::vector<double>& omega) {
  double norm = 0;
  for (double v : omega) norm += v * v;
  norm = std::sqrt(norm);
  return std::pow(cplx(omega[0], omega[1]) / norm, k).real();
}

double radon_direct(int n, const RadialFunction& u, int k, const std::vector<double>& omega, double t, int order) {
  if (static_cast<int>(omega.size()) != n) throw std::invalid_argument("ω has the wrong dimension");
  if (std::isinf(u.hi)) throw std::invalid_argument("radon_direct needs u with bounded support");
  if (std::abs(t) >= u.hi) return 0;
  const double r_lo = std::sqrt(std::max(0.0, u.lo * u.lo - t * t));
  const double r_hi = std::sqrt(u.hi * u.hi - t * t);
  const auto rule = gauss_jacobi(order, 0, 0);
  auto f = [&](const std::vector<double>& x) {
    double norm = 0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) return 0.0;
    return u(norm) * harmonic_y(k, x);
  };
  if (n == 2) {
    const double w0 = omega[0], w1 = omega[1];
    double s = 0;
    for (double sign : {1.0, -1.0})
      s += rule->apply_on(r_lo, r_hi, [&](double y) {
        return f({t * w0 - sign * y * w1, t * w1 + sign * y * w0});
      });
    return s;
  }
  if (n == 3) {
    // Orthonormal frame e1, e2 of ω^⊥.
    std::array<double, 3> w{omega[0], omega[1], omega[2]};
    std::array<double, 3> a{1, 0, 0};
    if (std::abs(w[0]) > 0.9) a = {0, 1, 0};
    const double d = a[0] * w[0] + a[1] * w[1] + a[2] * w[2];
    std::array<double, 3> e1{a[0] - d * w[0], a[1] - d * w[1], a[2] - d * w[2]};
    const double l = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (double& v : e1) v /= l;
    const std::array<double, 3> e2{w[1] * e1[2] - w[2] * e1[1], w[2] * e1[0] - w[0] * e1[2],
                                   w[0] * e1[1] - w[1] * e1[0]};
    const int m = 2 * k + 8;
    return rule->apply_on(r_lo, r_hi, [&](double rho) {
      double s = 0;
      for (int i = 0; i < m; ++i) {
        const double phi = 2 * kPi * i / m;
        const double c = rho * std::cos(phi), sn = rho * std::sin(phi);
        s += f({t * w[0] + c * e1[0] + sn * e2[0], t * w[1] + c * e1[1] + sn * e2[1],
                t * w[2] + c * e1[2] + sn * e2[2]});
      }
      return rho * 2 * kPi * s / m;
    });
  }
  throw std::invalid_argument("radon_direct supports n = 2, 3");
}

std::vector<ReportRow> mellin_report(const std::vector<int>& ns, int kmax, const std::vector<double>& s_offsets,
                                     int order) {
  std::vector<ReportRow> rows;
  for (int n : ns)
    for (int k = 0; k <= kmax; ++k)
      for (double off : s_offsets) {
        const double s = n + off;
        ReportRow row{"real-radon", n, k, -1, s};
        row.value_quad = mellin_alpha_quad(n, k, s, order).real();
        row.value_formula = mellin_alpha_formula(n, k, s).real();
        row.abs_err = std::abs(row.value_quad - row.value_formula);
        // Zeros of the formula are compared absolutely.
        row.rel_err = std::abs(row.value_formula) > 0 ? row.abs_err / std::abs(row.value_formula) : row.abs_err;
        rows.push_back(row);
      }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool complex_columns) {
  os << (complex_columns ? "module,n,p,q,s,value_quad,value_formula,abs_err,rel_err\n"
                         : "module,n,k,s,value_quad,value_formula,abs_err,rel_err\n");
  os << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.module << ',' << r.n << ',' << r.k << ',';
    if (complex_columns) os << r.q << ',';
    os << r.point << ',' << r.value_quad << ',' << r.value_formula << ',' << r.abs_err << ',' << r.rel_err << '\n';
  }
}

}  // namespace radon::real
