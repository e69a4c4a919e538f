#include <random>

#include <gtest/gtest.h>

#include "radon/padic/funcspace.hpp"

using namespace radon;
using namespace radon::padic;

namespace {

using F = CellFunction<Rational>;
using K = MultKernel<Rational>;

F shell_indicator(int q, int n, int shell, int level) {
  std::vector<F::Term> t;
  for (const auto& c : Cell::ball(q, n, shell).descendants(level))
    if (!c.contains_zero() && c.shell() == shell) t.push_back({c, Rational(1)});
  return F::make(q, n, t, true);
}

PAdicVector random_point(std::mt19937_64& rng, int q, int n, int vlo, int vhi) {
  for (;;) {
    PAdicVector x(q, n);
    for (int i = 0; i < n; ++i)
      x[i] = PAdicScalar::from_parts(q, vlo, static_cast<std::int64_t>(rng() % 100000));
    if (!x.is_zero() && x.valuation() <= vhi) return x;
  }
}

F random_cc(std::mt19937_64& rng, int q, int n) {
  std::vector<F::Term> t;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    const auto x = random_point(rng, q, n, -2, 2);
    const int u = x.valuation();
    t.push_back({Cell(x, u + 1 + static_cast<int>(rng() % 2)), Rational(static_cast<long>(rng() % 5) - 2)});
  }
  return F::sum(q, n, t);
}

K units_kernel(int q, int shift) {
  std::vector<F::Term> t;
  for (int u = 1; u < q; ++u) {
    PAdicVector c(q, 1);
    c[0] = PAdicScalar::from_parts(q, shift, u);
    t.push_back({Cell(c, shift + 1), Rational(1)});
  }
  return K(F::make(q, 1, t));
}

K random_kernel(std::mt19937_64& rng, int q) {
  std::vector<F::Term> t;
  for (int i = 0; i < 3; ++i) {
    PAdicVector c = random_point(rng, q, 1, -1, 1);
    t.push_back({Cell(c, c.valuation() + 1 + static_cast<int>(rng() % 2)), Rational(static_cast<long>(rng() % 3) + 1)});
  }
  return K(F::sum(q, 1, t));
}

}  // namespace

TEST(MakeCellFunction, Examples) {
  std::vector<Cell> cells;
  for (const auto& c : Cell::ball(2, 2, 0).descendants(2))
    if (!c.contains_zero() && c.shell() == 0) cells.push_back(c);
  EXPECT_EQ(cells.size(), 12u);
  const auto f = make_cell_function<Rational>(2, 2, cells, std::vector<Rational>(12, Rational(1)), true);
  EXPECT_EQ(f.integrate(), Rational(3, 4));
  EXPECT_THROW(make_cell_function<Rational>(2, 2, {Cell::ball(2, 2, 1)}, {Rational(1)}, true), InvalidCellFunction);
  EXPECT_TRUE(make_cell_function<Rational>(2, 2, {}, {}, true).is_zero());
}

TEST(InvarianceLevel, Examples) {
  EXPECT_EQ(invariance_level(shell_indicator(2, 2, 0, 2)).level, 1);
  EXPECT_EQ(invariance_level(shell_indicator(3, 2, 0, 1)).level, 1);
  // Constant on O^2 minus 4O^2: the shells 0 and 1 of Q_2^2.
  const F g = shell_indicator(2, 2, 0, 1) + shell_indicator(2, 2, 1, 2);
  EXPECT_EQ(invariance_level(g).level, 1);
  const F one = F::indicator(Cell(PAdicVector(3, {1, 2}), 3));
  EXPECT_EQ(invariance_level(one).level, 3);
  EXPECT_EQ(invariance_level(F(3, 2)).level, 0);
}

// Oracle: K_r-closeness checked on explicit perturbations of cell representatives.
TEST(InvarianceLevel, SLGLConsistencyProperty) {
  std::mt19937_64 rng(21);
  for (int q : {2, 3}) {
    for (int it = 0; it < 30; ++it) {
      const F f = random_cc(rng, q, 2);
      if (f.is_zero()) continue;
      const int r = invariance_level(f).level;
      for (int s = 0; s < 40; ++s) {
        const auto xi = random_point(rng, q, 2, -3, 3);
        auto eta = random_point(rng, q, 2, 0, 50);
        eta = eta.shifted(xi.valuation() + r - std::min(0, eta.valuation()));
        EXPECT_EQ(f(xi + eta), f(xi));
      }
      // Minimality: r - 1 fails somewhere.
      if (r > 1) {
        bool broken = false;
        for (const auto& [c, v] : f.terms()) {
          const int u = c.shell();
          if (c.level() > u + r - 1 && !f.constant_on(c.ancestor(u + r - 1))) broken = true;
        }
        EXPECT_TRUE(broken);
      }
    }
  }
}

TEST(MultConvolve, UnitsKernelScalesRadial) {
  for (int q : {2, 3}) {
    const F phi = shell_indicator(q, 2, 0, 1) * Rational(2) + shell_indicator(q, 2, -1, 0) * Rational(5);
    const F out = mult_convolve(units_kernel(q, 0), phi);
    EXPECT_TRUE(out == phi * Rational(q - 1, q));
    // Shift kernel: (α∗φ)(ξ) = (1 − 1/q) φ(π^{-1}ξ).
    const F shifted = mult_convolve(units_kernel(q, 1), phi);
    const F expect = (shell_indicator(q, 2, 1, 2) * Rational(2) + shell_indicator(q, 2, 0, 1) * Rational(5)) *
                     Rational(q - 1, q);
    EXPECT_TRUE(shifted == expect);
    EXPECT_TRUE(mult_convolve(K(F(q, 1)), phi).is_zero());
  }
}

TEST(MultConvolve, LazyMatchesCellsAndShiftsSupport) {
  std::mt19937_64 rng(4);
  for (int q : {2, 3, 5}) {
    for (int it = 0; it < 10; ++it) {
      const F phi = random_cc(rng, q, 2);
      if (phi.is_zero()) continue;
      const K alpha = random_kernel(rng, q);
      const F exact = mult_convolve(alpha, phi);
      const auto lazy_phi = LazyShellFunction<Rational>::from_cells(phi);
      const auto lazy = mult_convolve(alpha, lazy_phi);
      for (const auto& [c, v] : exact.terms()) {
        EXPECT_EQ(lazy(c.center()), v);
        ASSERT_TRUE(lazy.upper() && lazy.lower());
        EXPECT_LE(c.shell(), *lazy.upper());
        EXPECT_GE(c.shell(), *lazy.lower());
        EXPECT_EQ(*lazy.upper(), *lazy_phi.upper() + alpha.a_max());
      }
      for (int s = 0; s < 20; ++s) {
        const auto xi = random_point(rng, q, 2, -4, 4);
        EXPECT_EQ(lazy(xi), exact(xi));
        const Cell node(xi, xi.valuation() + static_cast<int>(rng() % 3));
        if (auto v = lazy.constant_on(node)) {
          for (const auto& d : node.descendants(node.level() + 1)) EXPECT_EQ(exact(d.center()), *v);
        }
      }
    }
  }
}

TEST(MultConvolve, AssociativityProperty) {
  std::mt19937_64 rng(8);
  for (int q : {2, 3}) {
    for (int it = 0; it < 10; ++it) {
      const F phi = random_cc(rng, q, 2);
      const K a1 = random_kernel(rng, q), a2 = random_kernel(rng, q);
      // α1∗α2 as a kernel: the n = 1 case of the same convolution.
      const K a12(mult_convolve(a1, a2.function()));
      EXPECT_TRUE(mult_convolve(a12, phi) == mult_convolve(a1, mult_convolve(a2, phi)));
    }
  }
}

TEST(Sigma, Examples) {
  for (int q : {2, 3}) {
    for (int n : {1, 2, 3}) {
      const K u = units_kernel(q, 0);
      EXPECT_TRUE(sigma(u, n).function() == u.function());
      const K s = sigma(units_kernel(q, 1), n);
      EXPECT_TRUE(s.function() == units_kernel(q, -1).function() * q_pow(q, -n));
      EXPECT_EQ(s.a_min(), -1);
    }
  }
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    const K a = random_kernel(rng, 5);
    EXPECT_TRUE(sigma(sigma(a, 3), 3).function() == a.function());
    EXPECT_EQ(sigma(a, 2).a_max(), -a.a_min());
  }
}
