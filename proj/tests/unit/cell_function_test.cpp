#include <random>

#include <gtest/gtest.h>

#include "radon/padic/cell_function.hpp"
#include "radon/padic/serialize.hpp"

using namespace radon;
using namespace radon::padic;

namespace {

using F = CellFunction<Rational>;

// 1_{‖x‖=1} as the cells of O^n outside πO^n at `level` >= 1.
F unit_sphere(int q, int n, int level = 1) {
  std::vector<F::Term> t;
  for (const auto& c : Cell::ball(q, n, 0).descendants(level))
    if (!c.contains_zero() && c.shell() == 0) t.push_back({c, Rational(1)});
  return F::make(q, n, t, true);
}

Cell random_cell(std::mt19937_64& rng, int q, int n, int lo = -1, int hi = 2) {
  PAdicVector x(q, n);
  const int level = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  for (int i = 0; i < n; ++i) x[i] = PAdicScalar::from_parts(q, -2, static_cast<std::int64_t>(rng() % 200));
  return Cell(x, level);
}

}  // namespace

TEST(CellFunction, IntegrateExamples) {
  EXPECT_EQ(F::indicator(Cell::ball(2, 1, 0)).integrate(), 1);
  const F units = F::indicator(Cell::ball(2, 1, 0)) - F::indicator(Cell::ball(2, 1, 1));
  EXPECT_EQ(units.integrate(), Rational(1, 2));
  const F g = F::indicator(Cell::ball(2, 2, 0), Rational(3)) - F::indicator(Cell::ball(2, 2, 1));
  EXPECT_EQ(g.integrate(), Rational(11, 4));
  const F shell = F::indicator(Cell::ball(3, 2, 0)) - F::indicator(Cell::ball(3, 2, 1));
  EXPECT_EQ(shell.integrate(), Rational(8, 9));
}

TEST(CellFunction, SphereIndicatorHasTwelveCells) {
  const F s = unit_sphere(2, 2, 2);
  EXPECT_EQ(s.terms().size(), 12u);
  EXPECT_EQ(unit_sphere(2, 2, 1).terms().size(), 3u);
  EXPECT_TRUE(s == unit_sphere(2, 2, 1));
  EXPECT_FALSE(s.contains_zero());
  EXPECT_EQ(s(PAdicVector(2, {1, 4})), 1);
  EXPECT_EQ(s(PAdicVector(2, {2, 4})), 0);
}

TEST(CellFunction, ValidationErrors) {
  EXPECT_THROW(F::make(2, 2, {{Cell::ball(2, 2, 0), Rational(1)}}, true), InvalidCellFunction);
  EXPECT_THROW(F::make(3, 2, {{Cell::ball(3, 2, 0), Rational(1)}, {Cell(PAdicVector(3, {1, 1}), 2), Rational(1)}}),
               InvalidCellFunction);
  EXPECT_TRUE(F::make(3, 2, {}).is_zero());
}

TEST(CellFunction, RefineExamples) {
  const F one = F::indicator(Cell::ball(2, 1, 0));
  const F r = one.refine(1);
  ASSERT_EQ(r.terms().size(), 2u);
  EXPECT_EQ(r.terms()[0].first, Cell(PAdicVector(2, {0}), 1));
  EXPECT_EQ(r.terms()[1].first, Cell(PAdicVector(2, {1}), 1));
  EXPECT_EQ(r.refine(1).terms().size(), 2u);
  EXPECT_EQ(r.coarsened().terms().size(), 1u);
  EXPECT_TRUE(r == one);
}

TEST(CellFunction, RefinePreservesIntegralProperty) {
  std::mt19937_64 rng(3);
  for (int q : {2, 3, 5}) {
    for (int it = 0; it < 20; ++it) {
      std::vector<F::Term> t;
      for (int i = 0; i < 4; ++i) t.push_back({random_cell(rng, q, 2, 0, 2), Rational(static_cast<long>(rng() % 5) - 2)});
      const F f = F::sum(q, 2, t);
      const F g = f.refine(f.max_level() + 1);
      EXPECT_EQ(g.integrate(), f.integrate());
      Rational direct = 0;
      for (const auto& [c, v] : t) direct += v * c.measure();
      EXPECT_EQ(f.integrate(), direct);
      for (const auto& [c, v] : g.terms()) EXPECT_EQ(f(c.center()), v);
    }
  }
}

TEST(CellFunction, UltrametricLawProperty) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    const int q = it % 2 ? 2 : 3;
    const Cell a = random_cell(rng, q, 2), b = random_cell(rng, q, 2);
    const bool nested = a.contains(b) || b.contains(a);
    // Disjoint or nested: the sum over a common refinement decides.
    const int l = std::max(a.level(), b.level());
    bool shared = false;
    for (const auto& c : a.descendants(l))
      if (b.contains(c)) shared = true;
    EXPECT_EQ(shared, nested);
    EXPECT_EQ(a.intersects(b), nested);
  }
}

TEST(CellFunction, SumResolvesOverlaps) {
  const F f = F::sum(2, 2, {{Cell::ball(2, 2, 0), Rational(3)}, {Cell::ball(2, 2, 1), Rational(-1)}});
  EXPECT_EQ(f(PAdicVector(2, {0, 0})), 2);
  EXPECT_EQ(f(PAdicVector(2, {1, 0})), 3);
  EXPECT_EQ(f.integrate(), Rational(11, 4));
}

TEST(Serialization, RoundTripIsBitExact) {
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 5}) {
    std::vector<F::Term> t;
    for (int i = 0; i < 6; ++i)
      t.push_back({random_cell(rng, q, 3), Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1)});
    for (auto& x : t) x.second.canonicalize();
    const F f = F::sum(q, 3, t);
    const auto j = to_json(f);
    const F g = cell_function_from_json<Rational>(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(g).dump(), j.dump());
    EXPECT_TRUE(f == g);
  }
  const F s = unit_sphere(3, 2);
  EXPECT_EQ(to_json(s)["cells"][0]["center"][0], "0:");
}

TEST(Serialization, CyclotomicCoefficients) {
  using G = CellFunction<Cyclotomic>;
  const G g = G::make(5, 2, {{Cell(PAdicVector(5, {1, 0}), 1), Cyclotomic::root(5, 2, 7) + Cyclotomic(Rational(1, 3))}});
  const auto j = to_json(g);
  EXPECT_EQ(j["value_ring"], "cyclotomic");
  const G h = cell_function_from_json<Cyclotomic>(j);
  EXPECT_EQ(to_json(h).dump(), j.dump());
  EXPECT_THROW(cell_function_from_json<Rational>(j), std::invalid_argument);
}
