#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "radon/real/radial.hpp"

namespace radon::real {

namespace {
constexpr int kMaxOrder = 32;
}  // namespace

RealJet RadialTestFn::jet(long double r, int order) const {
  if (family != "bump") throw std::invalid_argument("unknown radial test family " + family);
  if (!(s0 > 0 && S > s0)) throw std::invalid_argument("bump support must satisfy 0 < s0 < S");
  if (order < 0 || order >= kMaxOrder) throw std::invalid_argument("bump jets are limited to order < 32");
  if (r <= s0 || r >= S) return RealJet::constant(r, order, 0.0L);
  using L = long double;
  // Built in place (this sits inside every quadrature node): v is affine in r,
  // so w = 1 − v² has three coefficients and 1/w obeys a three-term recurrence.
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  const L v0 = (2 * r - (L(s0) + L(S))) / (L(S) - L(s0)), v1 = 2 / (L(S) - L(s0));
  const L w0 = 1 - v0 * v0, w1 = -2 * v0 * v1, w2 = -v1 * v1;
  std::array<L, kMaxOrder> f, e, p;
  std::fill_n(p.begin(), n, L(0));
  for (std::size_t k = 0; k < n; ++k) {
    L acc = k == 0 ? L(-1) : 0;
    if (k >= 1) acc -= w1 * f[k - 1];
    if (k >= 2) acc -= w2 * f[k - 2];
    f[k] = acc / w0;  // f = −1/w
  }
  e[0] = std::exp(f[0]);
  for (std::size_t k = 1; k < n; ++k) {
    L acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += L(j) * f[j] * e[k - j];
    e[k] = acc / L(k);
  }
  // P(v0 + v1 h) by Horner in h.
  if (!poly.empty()) p[0] = poly.back();
  for (int j = static_cast<int>(poly.size()) - 2; j >= 0; --j) {
    for (std::size_t k = n; k-- > 0;) p[k] = p[k] * v0 + (k ? p[k - 1] * v1 : L(0));
    p[0] += poly[static_cast<std::size_t>(j)];
  }
  std::vector<L> out(n, 0.0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += p[i] * e[j];
  return RealJet(r, std::move(out));
}

double RadialTestFn::operator()(double r) const { return static_cast<double>(jet(r, 0).value()); }

RadialFunction RadialTestFn::function() const {
  const RadialTestFn self = *this;
  return RadialFunction{[self](long double r, int order) { return self.jet(r, order); }, s0, S, {s0, S}};
}

RadialFunction radial_power(double a, double c) {
  RadialFunction g;
  g.jet = [a, c](long double r, int order) { return pow(RealJet::variable(r, order), a) * static_cast<long double>(c); };
  return g;
}

RadialFunction inv_radial_dim(int d, const RadialFunction& phi) {
  RadialFunction g;
  g.jet = [d, phi](long double r, int order) {
    const auto x = RealJet::variable(r, order);
    return x.reciprocal().compose_outer(phi.jet_at(1 / r, order)) * pow(x, -d);
  };
  g.lo = std::isinf(phi.hi) ? 0.0 : 1 / phi.hi;
  g.hi = phi.lo > 0 ? 1 / phi.lo : std::numeric_limits<double>::infinity();
  for (double b : phi.breaks) g.breaks.push_back(1 / b);
  return g;
}

}  // namespace radon::real
