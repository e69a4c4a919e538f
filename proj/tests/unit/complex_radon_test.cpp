#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "radon/complex/complex_radon.hpp"
#include "radon/errors.hpp"

using namespace radon;
using namespace radon::complex_radon;
using real::RadialTestFn;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed form of ⟨β_{p,q}, t^s⟩ through Beta functions, m ≥ 1.
cplx beta_mellin_closed(int n, int p, int q, cplx s) {
  const int m = std::min(p, q);
  cplx poly = 1;
  for (int j = 1; j <= n + m - 1; ++j) poly *= s + double(p + q - 2 * j);
  const cplx b = s - double(p + q + 2 * n - 2);
  const cplx beta_fn = specfun::cgamma(b / 2.0) * double(std::tgamma(m)) * specfun::rgamma(b / 2.0 + double(m));
  return poly * 0.5 * beta_fn / (std::pow(2.0, n + m - 2) * std::pow(kPi, n - 1) * std::tgamma(m));
}

}  // namespace

TEST(ZonalComplex, Examples) {
  for (int n = 2; n <= 4; ++n)
    for (double t : {0.1, 0.45, 0.9}) {
      EXPECT_EQ(a_pq_eval(n, 0, 0, t), 1.0);
      EXPECT_NEAR(a_pq_eval(n, 1, 0, t), t, 1e-15);
      EXPECT_NEAR(a_pq_eval(n, 0, 1, t), t, 1e-15);
      EXPECT_NEAR(a_pq_eval(n, 1, 1, t), (n * t * t - 1) / (n - 1), 1e-14);
    }
}

TEST(ZonalComplex, MatchesSliceAverage) {
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int i = 1; i < 40; ++i) {
        const double t = i / 40.0;
        EXPECT_NEAR(a_pq_eval(2, p, q, t), a_pq_direct(p, q, t), 1e-8) << p << ' ' << q << ' ' << t;
      }
}

TEST(ZonalComplex, SliceAverageNeedsPowerFactor) {
  // Without t^{|p−q|} the Jacobi factor alone disagrees with the slice average.
  const double t = 0.6;
  EXPECT_GT(std::abs(a_pq_direct(2, 0, t) / std::pow(t, 2) - a_pq_direct(2, 0, t)), 0.1);
}

TEST(ZonalComplex, KernelBounds) {
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        EXPECT_NEAR(a_pq_eval(n, p, q, 1.0), 1.0, 1e-12);
        for (int i = 0; i <= 200; ++i) EXPECT_LE(std::abs(a_pq_eval(n, p, q, i / 200.0)), 1 + 1e-12);
      }
}

TEST(MellinComplex, SpotValues) {
  EXPECT_NEAR(std::abs(mellin_alpha_pq_formula(2, 0, 0, 4.0) - kPi), 0, 1e-13);
  EXPECT_NEAR(std::abs(mellin_alpha_pq_formula(2, 1, 0, 5.0) - kPi / 2), 0, 1e-13);
  EXPECT_NEAR(std::abs(mellin_alpha_pq_quad(2, 0, 0, 4.0) - kPi), 0, 1e-12);
  EXPECT_NEAR(std::abs(mellin_alpha_pq_quad(2, 1, 0, 5.0) - kPi / 2), 0, 1e-12);
  // n=2, p=q=1, s=6: 2π ∫ t³(2t²−1) dt.
  EXPECT_NEAR(mellin_alpha_pq_quad(2, 1, 1, 6.0).real(), 2 * kPi * (2.0 / 6 - 1.0 / 4), 1e-12);
  EXPECT_NEAR(mellin_alpha_pq_formula(2, 1, 1, 6.0).real(), 2 * kPi * (2.0 / 6 - 1.0 / 4), 1e-12);
  EXPECT_THROW(mellin_alpha_pq_quad(2, 0, 0, 2.0), std::invalid_argument);
}

TEST(MellinComplex, QuadratureAgreesWithFormula) {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (double off : {-1.5, 0.0, 2.0, 4.5}) {
          const cplx s = 2 * n + off;
          const cplx f = mellin_alpha_pq_formula(n, p, q, s);
          EXPECT_LE(std::abs(mellin_alpha_pq_quad(n, p, q, s) - f), 1e-8 * std::max(1.0, std::abs(f)))
              << n << ' ' << p << ' ' << q << ' ' << s;
        }
  const cplx s(5.3, -0.8);
  EXPECT_LE(std::abs(mellin_alpha_pq_quad(2, 2, 1, s) - mellin_alpha_pq_formula(2, 2, 1, s)), 1e-10);
}

TEST(BetaComplex, DeltaBranchExamples) {
  for (double s : {3.0, 4.0, 7.5}) EXPECT_NEAR(beta_pq_mellin(2, 0, 0, s).real(), (s / 2 - 1) / kPi, 1e-14);
  auto pw = [](double s) { return [s](long double t, int o) { return pow(RealJet::variable(t, o), s); }; };
  EXPECT_NEAR(beta_pq_pair(2, 0, 0, pw(4.0)), 1 / kPi, 1e-14);
  // Vanishing near t = 1 gives 0 on the delta branch.
  auto far = [](long double t, int o) { return RealJet::constant(t, o, 0.0L); };
  EXPECT_EQ(beta_pq_pair(3, 2, 0, far), 0.0);
  auto short_jet = [](long double t, int) { return RealJet::variable(t, 0); };
  EXPECT_THROW(beta_pq_pair(2, 0, 0, short_jet), JetOrderError);
}

TEST(BetaComplex, ContinuationMatchesBetaFunction) {
  for (int n = 2; n <= 3; ++n)
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q)
        for (double s : {2 * n - 1.5, 2 * n + 4.5 + p + q}) {
          const cplx a = beta_pq_mellin(n, p, q, s), b = beta_mellin_closed(n, p, q, s);
          EXPECT_LE(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(b))) << n << p << q << ' ' << s;
        }
}

TEST(BetaComplex, Reciprocity) {
  int checked = 0;
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (double off : {-1.5, 0.0, 2.0, 4.5}) {
          const cplx s = 2 * n + off;
          const cplx a = mellin_alpha_pq_formula(n, p, q, s);
          if (std::abs(a) == 0) {
            EXPECT_THROW(beta_pq_mellin(n, p, q, s), PoleError);
            continue;
          }
          EXPECT_NEAR(std::abs(beta_pq_mellin(n, p, q, s) * a - 1.0), 0, 1e-6) << n << p << q << ' ' << s;
          ++checked;
        }
  EXPECT_GT(checked, 100);
}

TEST(BetaComplex, PairingAgreesWithMellin) {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        const double s = p + q + 2 * n + 0.5;
        auto h = [s](long double t, int o) { return pow(RealJet::variable(t, o), s); };
        const double want = beta_pq_mellin(n, p, q, s).real();
        EXPECT_NEAR(beta_pq_pair(n, p, q, h), want, 1e-9 * std::max(1.0, std::abs(want)));
      }
}

TEST(InvComplex, InvolutionAndPowers) {
  RadialTestFn u;
  const auto uf = u.function();
  for (int n = 2; n <= 3; ++n) {
    const auto back = inv_radial_complex(n, inv_radial_complex(n, uf));
    for (double r : {1.1, 1.4, 1.9}) EXPECT_NEAR(back(r), uf(r), 1e-15);
    EXPECT_NEAR(inv_radial_complex(n, uf).lo, 0.5, 1e-15);
    EXPECT_NEAR(inv_radial_complex(n, real::radial_power(-2.5))(1.7), std::pow(1.7, 2.5 - 2 * n), 1e-13);
  }
}

TEST(AlphaComplex, SupportAndJets) {
  RadialTestFn u;
  const auto uf = u.function();
  EXPECT_EQ(alpha_pq_convolve(2, 1, 0, uf, 2.0), 0.0);
  const double h = 1e-4, r = 1.3;
  const auto j = alpha_pq_convolve_jet(2, 2, 1, uf, r, 1);
  EXPECT_NEAR(j[1], (alpha_pq_convolve(2, 2, 1, uf, r + h) - alpha_pq_convolve(2, 2, 1, uf, r - h)) / (2 * h), 1e-6);
}

TEST(RoundTripComplex, BetaOfAlphaRecoversU) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> lo(0.4, 1.0), width(0.5, 1.5), coef(-1.0, 1.0);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      RadialTestFn u;
      u.s0 = lo(rng);
      u.S = u.s0 + width(rng);
      u.poly = {1.0, coef(rng), coef(rng)};
      const auto phi = inv_radial_complex(2, alpha_pq_image(2, p, q, u.function()));
      for (double f : {0.6, 1.0, 1.3}) {
        const double r = u.s0 * f + (f > 1 ? (u.S - u.s0) * 0.5 : 0);
        EXPECT_NEAR(minv_pq_apply(2, p, q, phi, r), u(r), 1e-6) << p << q << ' ' << r;
      }
    }
}

TEST(RoundTripComplex, DeltaBranchIsDifferentialOperator) {
  // m = 0: β ∗ g (r) is the operator applied to t ↦ g(r/t) at t = 1, which is a
  // combination of r^j g^{(j)}(r).
  RadialTestFn u;
  const auto g = u.function();
  const double r = 1.4;
  const auto gj = g.jet_at(r, 1);
  // n = 2, p = 1, q = 0: (2π)^{−1} (t d/dt − 1) g(r/t) at t=1 = (2π)^{−1}(−r g′(r) − g(r)).
  EXPECT_NEAR(beta_pq_convolve(2, 1, 0, g, r), (-r * gj[1] - gj[0]) / (2 * kPi), 1e-13);
}
