#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "radon/padic/radon.hpp"

namespace radon::padic {

inline PAdicScalar random_scalar(std::mt19937_64& rng, int q, int vlo, int digits) {
  Int bound = 1;
  for (int i = 0; i < digits; ++i) bound *= q;
  return PAdicScalar::from_parts(q, vlo, static_cast<Int>(rng() % static_cast<std::uint64_t>(bound)));
}

/// Nonzero point with every coordinate in π^{vlo}O and valuation at most vhi.
inline PAdicVector random_point(std::mt19937_64& rng, int q, int n, int vlo, int vhi, int digits = 6) {
  for (;;) {
    PAdicVector x(q, n);
    for (int i = 0; i < n; ++i) x[i] = random_scalar(rng, q, vlo, digits);
    if (!x.is_zero() && x.valuation() <= vhi) return x;
  }
}

/// Random element of C_c: up to max_cells pairwise disjoint cells in shells
/// [vlo, vhi], each at relative level ≤ rmax, coefficients in {±1, ±2, ±3}.
inline RFunction random_cc(std::mt19937_64& rng, int q, int n, int vlo = -2, int vhi = 2, int rmax = 2,
                           int max_cells = 8) {
  std::vector<RFunction::Term> t;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_cells));
  for (int i = 0, tries = 0; i < count && tries < 8 * max_cells; ++tries) {
    const auto x = random_point(rng, q, n, vlo, vhi);
    const int rel = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rmax));
    const Cell c(x, x.valuation() + rel);
    bool clash = false;
    for (const auto& [d, v] : t) clash = clash || d.intersects(c);
    if (clash) continue;
    long coeff = static_cast<long>(rng() % 7) - 3;
    if (coeff == 0) coeff = 1;
    t.push_back({c, Rational(coeff)});
    ++i;
  }
  return RFunction::make(q, n, t, true);
}

/// Random Schwartz–Bruhat function: C_c cells plus a ball around 0.
inline RFunction random_schwartz(std::mt19937_64& rng, int q, int n) {
  auto f = random_cc(rng, q, n);
  const int level = static_cast<int>(rng() % 3) - 1;
  std::vector<RFunction::Term> t(f.terms().begin(), f.terms().end());
  t.push_back({Cell::ball(q, n, level), Rational(static_cast<long>(rng() % 3) + 1)});
  return RFunction::sum(q, n, t);
}

/// Random 1-D Schwartz–Bruhat test function.
inline RFunction random_test_function(std::mt19937_64& rng, int q) {
  std::vector<RFunction::Term> t;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    PAdicVector c(q, 1);
    c[0] = random_scalar(rng, q, -1, 3);
    t.push_back({Cell(c, static_cast<int>(rng() % 4) - 1), Rational(static_cast<long>(rng() % 5) + 1)});
  }
  return RFunction::sum(q, 1, t);
}

/// A representative of every cell, plus `extra` random points off the support.
inline std::vector<PAdicVector> sample_points(std::mt19937_64& rng, const RFunction& f, int extra) {
  std::vector<PAdicVector> pts;
  for (const auto& [c, v] : f.terms()) pts.push_back(c.center());
  const int q = f.prime();
  const int n = f.dim();
  while (extra > 0) {
    auto x = random_point(rng, q, n, -3, 3);
    if (f(x) != 0) continue;
    pts.push_back(x);
    --extra;
  }
  return pts;
}

/// Multiplicative kernel on a couple of cells of F^× near the unit shell.
inline MultKernel<Rational> random_kernel(std::mt19937_64& rng, int q) {
  std::vector<RFunction::Term> t;
  for (int i = 0; i < 2; ++i) {
    const auto c = random_point(rng, q, 1, -1, 1, 3);
    t.push_back({Cell(c, c.valuation() + 1 + static_cast<int>(rng() % 2)), Rational(static_cast<long>(rng() % 3) + 1)});
  }
  return MultKernel<Rational>(RFunction::sum(q, 1, t));
}

/// g = diag(q^{d_i})·U with d_i ∈ {−1, 0, 1} and U integral with det U prime to q.
inline LinearMap random_map(std::mt19937_64& rng, int q, int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("random_map supports n ≤ 3");
  for (;;) {
    LinearMap g{q, n, {}, {}};
    for (int i = 0; i < n; ++i) {
      g.d[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 3) - 1;
      for (int j = 0; j < n; ++j)
        g.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rng() % 7) - 3;
    }
    std::int64_t det;
    const auto& u = g.u;
    if (n == 1)
      det = u[0][0];
    else if (n == 2)
      det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    else
      det = u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) - u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0]) +
            u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0]);
    if (det % q != 0) return g;
  }
}

}  // namespace radon::padic
