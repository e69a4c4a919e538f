#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "padic_random.hpp"
#include "radon/padic/radon.hpp"

using namespace radon;
using namespace radon::padic;
using namespace radon::testing;

namespace {

RFunction sphere(int q, int n) {
  std::vector<RFunction::Term> t;
  for (const auto& c : Cell::ball(q, n, 0).descendants(1))
    if (!c.contains_zero()) t.push_back({c, Rational(1)});
  return RFunction::make(q, n, t, true);
}

RFunction line(int q, const Cell& c, const Rational& v = 1) { return RFunction::indicator(c, v); }

Cell cell1(int q, std::int64_t center, int level) { return Cell(PAdicVector(q, {center}), level); }

}  // namespace

TEST(RadonM, SphereExamples) {
  const auto f = sphere(3, 2);
  EXPECT_EQ(radon_M(f, PAdicVector(3, {1, 0})), 1);
  EXPECT_EQ(radon_M(f, PAdicVector(3, {2, 5})), 1);
  EXPECT_EQ(radon_M(f, PAdicVector(3, {1, 0}).shifted(-1)), Rational(2, 9));
  EXPECT_EQ(radon_M(f, PAdicVector(3, {1, 1}).shifted(-1)), Rational(2, 9));
  EXPECT_EQ(radon_M(f, PAdicVector(3, {1, 0}).shifted(1)), 0);
  EXPECT_THROW(radon_M(f, PAdicVector(3, 2)), std::invalid_argument);
}

// Oracle: q^{−1}(1 − q^{−(n−1)}) for v(ξ) = −1, by counting the cosets of the fiber.
TEST(RadonM, SphereCosetOracle) {
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      const auto f = sphere(q, n);
      PAdicVector xi(q, n);
      xi[n - 1] = PAdicScalar::from_parts(q, -1, 1);
      EXPECT_EQ(radon_M(f, xi), q_pow(q, -1) * (1 - q_pow(q, -(n - 1))));
    }
  }
}

TEST(RadonM, AgreesWithFiberEnumeration) {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (int it = 0; it < 10; ++it) {
        const auto f = random_schwartz(rng, q, n);
        for (int s = 0; s < 10; ++s) {
          const auto xi = random_point(rng, q, n, -3, 3);
          EXPECT_EQ(radon_M(f, xi), radon_M_fiber(f, xi));
        }
      }
    }
  }
}

TEST(RadonM, AsFunctionSupportAndOracle) {
  std::mt19937_64 rng(12);
  for (int q : {2, 3}) {
    for (int it = 0; it < 10; ++it) {
      const auto f = random_cc(rng, q, 2);
      const auto mf = radon_M_as_function(f);
      int lo = 100;
      for (const auto& [c, v] : f.terms()) lo = std::min(lo, c.shell());
      ASSERT_TRUE(mf.upper());
      EXPECT_EQ(*mf.upper(), -lo);
      for (int s = 0; s < 20; ++s) {
        const auto xi = random_point(rng, q, 2, -4, 4);
        EXPECT_EQ(mf(xi), radon_M(f, xi));
        if (xi.valuation() > -lo) EXPECT_EQ(radon_M(f, xi), 0);
        // K_r-close points and oracle-constant cells.
        auto eta = random_point(rng, q, 2, 0, 50).shifted(xi.valuation() + mf.invariance());
        EXPECT_EQ(radon_M(f, xi + eta), radon_M(f, xi));
        const Cell node(xi, xi.valuation() + static_cast<int>(rng() % 3) - 1);
        if (auto v = mf.constant_on(node); v && !node.contains_zero())
          for (const auto& d : node.descendants(node.level() + 1)) EXPECT_EQ(radon_M(f, d.center()), *v);
      }
    }
  }
}

TEST(RegularizedPower, Examples) {
  const RegularizedPower p{2, 2, 0};
  EXPECT_EQ(pair_regularized(p, line(2, cell1(2, 0, 0)), 1), Rational(-1, 2));
  EXPECT_EQ(pair_regularized(p, line(2, cell1(2, 0, 1)), 1), -1);
  EXPECT_THROW(pair_regularized(p, line(2, cell1(2, 0, 1)), 0), std::invalid_argument);
  // f equal to f(c) near c: only the ring where it differs counts.
  const RegularizedPower p1{3, 2, 1};
  const auto f = line(3, cell1(3, 1, -2));
  EXPECT_EQ(pair_regularized(p1, f, 1), pair_regularized(RegularizedPower{3, 2, 0}, f, 1));
}

// Oracle: ∫|s|^{−n}(f(s) − f(0)) summed shell by shell over a window.
TEST(RegularizedPower, ShellSumOracle) {
  std::mt19937_64 rng(13);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (int it = 0; it < 10; ++it) {
        const auto f = random_test_function(rng, q);
        int fine = f.max_level();
        for (int shift : {0, 1}) {
          const PAdicScalar c(q, shift);
          PAdicVector cv(q, 1);
          cv[0] = c;
          const Rational fc = f(cv);
          Rational s = 0;
          // Every cell of level `fine` in π^{-3}O, grouped by |s − c|.
          for (const auto& cell : Cell::ball(q, 1, -3).descendants(fine)) {
            const Rational diff = f(cell.center()) - fc;
            if (diff == 0) continue;
            const PAdicScalar y = cell.center()[0] - c;
            ASSERT_LT(y.valuation_or(1000), fine);  // f − f(c) vanishes on c + π^{fine}O
            s += diff * cell.measure() * q_pow(q, y.valuation() * n);
          }
          // Outside π^{-3}O only −f(c) remains.
          s += -fc * (1 - q_pow(q, -1)) * q_pow(q, -4 * (n - 1)) / (1 - q_pow(q, -(n - 1)));
          EXPECT_EQ((RegularizedPower{q, n, shift}.pair(f)), s);
        }
      }
    }
  }
}

TEST(BetaDistribution, AveragedSupportAndMass) {
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      const BetaDistribution beta{q, n};
      for (int r = 1; r <= 3; ++r) {
        // ⟨β_U, 1_{b+π^kO}⟩ = ⟨β, 1_{U(b+π^kO)}⟩; for v(b) < 0 and k ≥ v(b) + r the U-orbit
        // is the union over u ∈ U/(1+π^{k−v(b)}O) of the cells ub + π^kO.
        for (int vb = -3; vb < 0; ++vb) {
          const int k = vb + r;
          Rational orbit = 0;
          for (const auto& u : cell1(q, 1, r).descendants(k - vb)) {
            const PAdicScalar b = u.center()[0].shifted(vb);
            orbit += beta.pair_ball(b, k);
          }
          EXPECT_EQ(orbit, 0) << "q=" << q << " n=" << n << " r=" << r;
        }
        EXPECT_EQ(beta.pair_ball(PAdicScalar(q, 0), -r), 0);
      }
    }
  }
}

TEST(Character, Basics) {
  const Character psi{3};
  EXPECT_EQ(psi(PAdicScalar(3, 7)), Cyclotomic(1));
  EXPECT_NE(psi(PAdicScalar::from_parts(3, -1, 1)), Cyclotomic(1));
  std::mt19937_64 rng(14);
  for (int it = 0; it < 50; ++it) {
    const auto a = random_scalar(rng, 3, -3, 8), b = random_scalar(rng, 3, -3, 8);
    EXPECT_EQ(psi(a + b), psi(a) * psi(b));
  }
  EXPECT_THROW(Character({2, 3})(PAdicScalar::from_parts(2, -5, 1)), InsufficientConductor);
}

TEST(FourierFprime, ShellExamples) {
  RFunction f(2, 2);
  {
    std::vector<RFunction::Term> t;
    for (const auto& c : Cell::ball(2, 2, 0).descendants(1))
      if (!c.contains_zero()) t.push_back({c, Rational(1)});
    f = RFunction::make(2, 2, t, true);
  }
  const Character psi{2};
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {1, 3}), psi), Cyclotomic(0));
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {2, 0}), psi), Cyclotomic(0));
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {1, 0}).shifted(-1), psi), Cyclotomic(-1));
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {1, 1}).shifted(-1), psi), Cyclotomic(-1));
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {1, 0}).shifted(-2), psi), Cyclotomic(Rational(-3, 4)));
  EXPECT_EQ(fourier_Fprime(f, PAdicVector(2, {3, 1}).shifted(-5), psi), Cyclotomic(Rational(-3, 4)));
  const auto fine = RFunction::indicator(Cell(PAdicVector(2, {1, 0}), 10));
  EXPECT_THROW(fourier_Fprime(fine, PAdicVector(2, {1, 0}).shifted(-10), Character{2, 4}), InsufficientConductor);
}

// Oracle: direct character sum over a fine decomposition of each cell.
TEST(FourierFprime, CharacterSumOracle) {
  std::mt19937_64 rng(15);
  for (int q : {2, 3}) {
    const Character psi{q};
    for (int it = 0; it < 8; ++it) {
      const auto f = random_cc(rng, q, 2, 0, 1, 1, 2);
      for (int s = 0; s < 5; ++s) {
        const auto xi = random_point(rng, q, 2, -2, 2);
        const int fine = std::max(f.max_level(), -xi.valuation());
        Cyclotomic direct;
        for (const auto& [c, v] : f.terms())
          for (const auto& d : c.descendants(std::max(fine, c.level())))
            direct += (psi(-xi.dot(d.center())) - Cyclotomic(1)) * Cyclotomic(v * d.measure());
        EXPECT_EQ(fourier_Fprime(f, xi, psi), direct);
      }
    }
  }
}

TEST(FourierF, ClosedFormMatchesStabilized) {
  std::mt19937_64 rng(16);
  for (int q : {2, 3}) {
    const Character psi{q};
    for (int it = 0; it < 5; ++it) {
      const auto phi = to_cyclotomic(random_cc(rng, q, 2));
      const auto lazy = LazyShellFunction<Cyclotomic>::from_cells(phi);
      for (int s = 0; s < 5; ++s) {
        const auto x = random_point(rng, q, 2, -3, 3);
        EXPECT_EQ(fourier_F(lazy, x, psi), fourier_F(phi, x, psi));
      }
    }
  }
  EXPECT_EQ(fourier_F(CFunction(2, 2), PAdicVector(2, {1, 0}), Character{2}), Cyclotomic());
}

TEST(FourierF, InvertsFprimeOnShell) {
  RFunction f(2, 2);
  {
    std::vector<RFunction::Term> t;
    for (const auto& c : Cell::ball(2, 2, 0).descendants(1))
      if (!c.contains_zero()) t.push_back({c, Rational(1)});
    f = RFunction::make(2, 2, t, true);
  }
  const Character psi{2};
  const auto fp = fourier_Fprime_as_function(f, psi);
  for (const auto& c : Cell::ball(2, 2, 0).descendants(2)) {
    if (c.contains_zero()) continue;
    EXPECT_EQ(fourier_F(fp, c.center(), psi), Cyclotomic(f(c.center())));
  }
  const auto ff = fourier_F_as_function(to_cyclotomic(f), psi);
  for (const auto& c : Cell::ball(2, 2, -1).descendants(1)) {
    if (c.contains_zero()) continue;
    EXPECT_EQ(fourier_Fprime(ff, c.center(), psi), Cyclotomic(f(c.center())));
  }
}

TEST(ApplyABeta, SphereRoundTrip) {
  for (int q : {2, 3}) {
    const auto f = sphere(q, 2);
    const auto mf = radon_M_as_function(f);
    for (const auto& c : Cell::ball(q, 2, 0).descendants(1))
      if (!c.contains_zero()) EXPECT_EQ(apply_A_beta(mf, c.center()), 1);
  }
  EXPECT_THROW(apply_A_beta(radon_M_as_function(sphere(2, 2)), PAdicVector(2, 2)), std::invalid_argument);
}

TEST(ApplyABeta, SupportBound) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 10; ++it) {
    const auto f = random_cc(rng, 3, 2);
    const auto mf = radon_M_as_function(f);
    const auto amf = apply_A_beta_as_function(mf);
    ASSERT_TRUE(amf.lower());
    EXPECT_EQ(*amf.lower(), -*mf.upper() - mf.invariance());
    for (int s = 0; s < 5; ++s) {
      PAdicVector x = random_point(rng, 3, 2, 0, 0).shifted(*amf.lower() - 1 - static_cast<int>(rng() % 2));
      EXPECT_EQ(apply_A_beta(mf, x), 0);
    }
  }
}

TEST(ApplyABeta, Linearity) {
  std::mt19937_64 rng(18);
  const auto f = random_cc(rng, 2, 2), g = random_cc(rng, 2, 2);
  const auto mf = radon_M_as_function(f), mg = radon_M_as_function(g), mfg = radon_M_as_function(f * Rational(3) + g);
  for (int s = 0; s < 10; ++s) {
    const auto x = random_point(rng, 2, 2, -2, 2);
    EXPECT_EQ(apply_A_beta(mfg, x), 3 * apply_A_beta(mf, x) + apply_A_beta(mg, x));
  }
}

TEST(ApplyABeta, RoundTripProperty) {
  std::mt19937_64 rng(19);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      const auto t0 = std::chrono::steady_clock::now();
      for (int it = 0; it < 3; ++it) {
        const auto f = random_cc(rng, q, n);
        const auto mf = radon_M_as_function(f);
        for (const auto& x : sample_points(rng, f, 5)) EXPECT_EQ(apply_A_beta(mf, x), f(x));
      }
      std::cerr << "q=" << q << " n=" << n << " "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
    }
  }
}

TEST(ApplyABeta, StabilizesUnderLargerLatticeAndWeakerCertificate) {
  std::mt19937_64 rng(20);
  for (int q : {2, 3}) {
    for (int it = 0; it < 5; ++it) {
      const auto f = random_cc(rng, q, 2);
      const auto mf = radon_M_as_function(f);
      const auto weak = mf.with_certificate(mf.invariance() + 1);
      for (const auto& x : sample_points(rng, f, 3)) {
        const Rational base = apply_A_beta(mf, x);
        EXPECT_EQ(apply_A_beta(mf, x, {1}), base);
        EXPECT_EQ(apply_A_beta(mf, x, {2}), base);
        EXPECT_EQ(apply_A_beta(weak, x), base);
      }
    }
  }
}

TEST(ApplyABeta, MOfInverseIsIdentity) {
  std::mt19937_64 rng(22);
  for (int q : {2, 3}) {
    for (int it = 0; it < 3; ++it) {
      const auto f = random_cc(rng, q, 2, 0, 1, 1, 2);
      const auto mf = radon_M_as_function(f);
      const auto g = apply_A_beta_as_function(mf);
      // Rebuild A_βφ on its shells at its certified level, then apply M again.
      int hi = -100;
      for (const auto& [c, v] : f.terms()) hi = std::max(hi, c.shell());
      std::vector<RFunction::Term> t;
      for (int u = *g.lower(); u <= hi + 1; ++u)
        for (const auto& c : Cell::ball(q, 2, u).descendants(u + g.invariance()))
          if (!c.contains_zero() && c.shell() == u) t.push_back({c, g(c.center())});
      const auto rebuilt = RFunction::make(q, 2, t, true);
      for (int s = 0; s < 10; ++s) {
        const auto xi = random_point(rng, q, 2, -3, 3);
        EXPECT_EQ(radon_M(rebuilt, xi), mf(xi));
      }
    }
  }
}

TEST(Fourier, MutuallyInverseProperty) {
  std::mt19937_64 rng(23);
  for (int q : {2, 3}) {
    const Character psi{q};
    for (int it = 0; it < 4; ++it) {
      const auto f = random_cc(rng, q, 2);
      const auto fp = fourier_Fprime_as_function(f, psi);
      for (const auto& x : sample_points(rng, f, 3)) EXPECT_EQ(fourier_F(fp, x, psi), Cyclotomic(f(x)));
      const auto ff = fourier_F_as_function(to_cyclotomic(f), psi);
      for (const auto& xi : sample_points(rng, f, 3)) EXPECT_EQ(fourier_Fprime(ff, xi, psi), Cyclotomic(f(xi)));
    }
  }
}

TEST(Chernov, Examples) {
  const auto ball = RFunction::indicator(Cell::ball(3, 2, 0));
  EXPECT_EQ(chernov_invert(ball, PAdicVector(3, {1, 0})), 1);
  EXPECT_EQ(chernov_invert(ball, PAdicVector(3, {2, 7})), 1);
  EXPECT_EQ(chernov_invert(RFunction(3, 2), PAdicVector(3, {1, 0})), 0);
  EXPECT_THROW(chernov_invert(ball, PAdicVector(3, 2)), std::invalid_argument);
}

// Oracle: the sphere average of P(η·y, m) by enumerating η on cells of the sphere.
TEST(Chernov, SphereAverageOracle) {
  for (int q : {2, 3}) {
    for (int n : {2, 3}) {
      std::mt19937_64 rng(24);
      for (int it = 0; it < 6; ++it) {
        const int m = static_cast<int>(rng() % 3) - 1;
        const auto y = random_point(rng, q, n, -1, 2, 3);
        const int level = std::max(1, m - y.valuation() + 1);
        Rational s = 0;
        for (const auto& c : Cell::ball(q, n, 0).descendants(level)) {
          if (c.contains_zero() || c.shell() != 0) continue;
          s += c.measure() * power_pair_ball(q, n, c.center().dot(y), m);
        }
        EXPECT_EQ(sphere_power_average(q, n, y, m), s);
      }
    }
  }
}

TEST(Chernov, AgreesWithFAndInverseRadon) {
  std::mt19937_64 rng(25);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (int it = 0; it < 4; ++it) {
        const auto f = random_schwartz(rng, q, n);
        for (const auto& x : sample_points(rng, f, 3)) {
          if (x.is_zero()) continue;
          EXPECT_EQ(chernov_invert(f, x), f(x));
        }
        const auto g = random_cc(rng, q, n);
        const auto mg = radon_M_as_function(g);
        for (const auto& x : sample_points(rng, g, 2)) EXPECT_EQ(chernov_invert(g, x), apply_A_beta(mg, x));
      }
    }
  }
}

TEST(Cavalieri, IndependentOfXi) {
  const auto ball = RFunction::indicator(Cell::ball(3, 2, 0));
  EXPECT_EQ(cavalieri_integral(ball, PAdicVector(3, {1, 0})), 1);
  std::mt19937_64 rng(26);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      const auto f = random_schwartz(rng, q, n);
      for (int s = 0; s < 5; ++s) {
        const auto xi = random_point(rng, q, n, -3, 3);
        EXPECT_EQ(cavalieri_integral(f, xi), f.integrate());
        EXPECT_EQ(cavalieri_integral(f * Rational(4), xi), 4 * cavalieri_integral(f, xi));
      }
    }
  }
}

TEST(Kochubei, VanishesAndUnitInvariant) {
  EXPECT_EQ(kochubei_integral(PAdicVector(2, {1, 0})), 0);
  std::mt19937_64 rng(27);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (int s = 0; s < 5; ++s) {
        const auto x = random_point(rng, q, n, -3, 3);
        EXPECT_EQ(kochubei_integral(x), 0);
        const auto u = random_scalar(rng, q, 0, 1) + PAdicScalar(q, q == 2 ? 1 : 0);
        if (u.valuation_or(1) == 0) EXPECT_EQ(kochubei_integral(u * x), kochubei_integral(x));
      }
    }
  }
  // Oracle by enumerating the unit sphere of Q_3^3 at the level where η·x is resolved.
  const PAdicVector x(3, {1, 3, 0});
  Rational s = 0;
  for (const auto& c : Cell::ball(3, 3, 0).descendants(2)) {
    if (c.contains_zero() || c.shell() != 0) continue;
    s += c.measure() * power_pair_ball(3, 3, c.center().dot(x), 2);
  }
  EXPECT_EQ(s, 0);
}

TEST(Keybeta, BetaIsSigmaAlphaStarPsi) {
  std::mt19937_64 rng(28);
  for (int q : {2, 3}) {
    for (int n : {2, 3}) {
      const Character psi{q};
      const BetaDistribution beta{q, n};
      const auto near_one = RFunction::indicator(cell1(q, 1, 2));
      EXPECT_EQ(keybeta_pairing(near_one, n, psi), Cyclotomic(beta.pair(near_one)));
      EXPECT_NE(beta.pair(near_one), 0);
      int nonzero = 0;
      for (int it = 0; it < 10; ++it) {
        const auto h = random_test_function(rng, q);
        const Rational expect = beta.pair(h);
        nonzero += expect != 0;
        EXPECT_EQ(keybeta_pairing(h, n, psi), Cyclotomic(expect));
      }
      EXPECT_GT(nonzero, 0);
    }
  }
}

TEST(Structural, MStarIntertwinesSigma) {
  std::mt19937_64 rng(29);
  for (int q : {2, 3}) {
    for (int n : {2, 3}) {
      for (int it = 0; it < 4; ++it) {
        const auto f = random_cc(rng, q, n);
        const auto alpha = random_kernel(rng, q);
        const auto lhs = mult_convolve(sigma(alpha, n), f);
        const auto rhs = mult_convolve(alpha, radon_M_as_function(f));
        for (int s = 0; s < 5; ++s) {
          const auto xi = random_point(rng, q, n, -3, 3);
          EXPECT_EQ(radon_M(lhs, xi), rhs(xi));
        }
      }
    }
  }
}

TEST(Structural, AStarIntertwinesSigma) {
  std::mt19937_64 rng(30);
  for (int q : {2, 3}) {
    for (int it = 0; it < 4; ++it) {
      const auto f = random_cc(rng, q, 2);
      const auto alpha = random_kernel(rng, q);
      const auto mf = radon_M_as_function(f);
      const auto lhs = mult_convolve(alpha, mf);
      const auto rhs = mult_convolve(sigma(alpha, 2), apply_A_beta_as_function(mf));
      for (const auto& x : sample_points(rng, mult_convolve(sigma(alpha, 2), f), 3))
        EXPECT_EQ(apply_A_beta(lhs, x), rhs(x));
    }
  }
}

TEST(Structural, FprimeIsAlphaStarM) {
  std::mt19937_64 rng(31);
  for (int q : {2, 3}) {
    const Character psi{q};
    for (int it = 0; it < 4; ++it) {
      const auto f = random_cc(rng, q, 2);
      for (int s = 0; s < 5; ++s) {
        const auto xi = random_point(rng, q, 2, -3, 3);
        EXPECT_EQ(fourier_Fprime(f, xi, psi), psi_alpha_convolve_M(f, xi, psi));
      }
    }
  }
}

TEST(Structural, Equivariance) {
  std::mt19937_64 rng(32);
  for (int q : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (int it = 0; it < 4; ++it) {
        const auto f = random_schwartz(rng, q, n);
        const auto g = random_map(rng, q, n);
        const auto gf = transform(f, g);
        EXPECT_EQ(gf.integrate(), f.integrate() * g.abs_det());
        for (int s = 0; s < 5; ++s) {
          const auto x = random_point(rng, q, n, -3, 3);
          EXPECT_EQ(gf(g.apply(x)), f(x));
          const auto xi = random_point(rng, q, n, -3, 3);
          EXPECT_EQ(radon_M(gf, xi), g.abs_det() * radon_M(f, g.apply_transpose(xi)));
        }
      }
    }
  }
}
