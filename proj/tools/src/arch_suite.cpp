#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <utility>

#include "radon/complex/complex_radon.hpp"
#include "radon/errors.hpp"
#include "radon/real/real_radon.hpp"
#include "runner.hpp"

namespace radon::suites {

using detail::Task;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZonalTol = 1e-10;
constexpr double kZonalPqTol = 1e-8;
const std::vector<double> kRealOffsets{-0.5, 0.0, 0.5, 1.0, 2.5};
const std::vector<double> kComplexOffsets{-1.5, 0.0, 2.0, 4.5};

// Relative error, or absolute where the reference vanishes.
double rel_err(double got, double want) {
  const double a = std::abs(got - want);
  return want != 0 ? a / std::abs(want) : a;
}

void numeric(Row& row, double lhs, double rhs, double err, double tol) {
  row.lhs = fmt(lhs);
  row.rhs = fmt(rhs);
  row.error = err;
  row.pass = err <= tol;
}

real::RadialTestFn random_bump(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lo(0.4, 1.0), width(0.5, 1.5), coef(-1.0, 1.0);
  real::RadialTestFn u;
  u.s0 = lo(rng);
  u.S = u.s0 + width(rng);
  u.poly = {1.0, coef(rng), coef(rng)};
  return u;
}

double sup_abs(const real::RadialTestFn& u) {
  double m = 0;
  for (int i = 1; i < 1000; ++i) m = std::max(m, std::abs(u(u.s0 + (u.S - u.s0) * i / 1000.0)));
  return m;
}

/// Radii spread over (s0/2, S): below the support and across it.
std::vector<double> sample_radii(std::mt19937_64& rng, const real::RadialTestFn& u, int count) {
  std::uniform_real_distribution<double> d(0.5 * u.s0, u.S);
  std::vector<double> r(static_cast<std::size_t>(count));
  for (auto& x : r) x = d(rng);
  return r;
}

template <class Apply>
void round_trip(Row& row, std::mt19937_64& rng, int radii, double tol, Apply&& apply) {
  const auto u = random_bump(rng);
  const double sup = sup_abs(u);
  double worst = 0, at = 0, got = 0;
  for (double r : sample_radii(rng, u, radii)) {
    const double v = apply(u, r);
    const double e = std::abs(v - u(r)) / sup;
    if (e >= worst) worst = e, at = r, got = v;
  }
  numeric(row, got, u(at), worst, tol);
  row.detail = "max |M^-1 M u - u| / sup|u| over " + std::to_string(radii) + " radii; worst at r=" + fmt(at);
}

}  // namespace

Report run_real_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const int order = cfg.order;
  for (int n : cfg.n)
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
      if (n <= 3)
        tasks.push_back({"zonal_slice", {{"n", n}, {"k", k}}, [=](Row& row) {
                           double worst = 0;
                           for (int i = 0; i <= 100; ++i) {
                             const double t = i / 100.0;
                             worst = std::max(worst, std::abs(real::a_k_eval(n, k, t) - real::a_k_direct(n, k, t)));
                           }
                           numeric(row, worst, 0, worst, kZonalTol);
                           row.detail = "max over 101 points of |a_k - slice average|";
                         }});
      for (double off : kRealOffsets) {
        const double s = n + off;
        const nlohmann::json params{{"n", n}, {"k", k}, {"s", s}};
        tasks.push_back({"mellin", params, [=, tol = cfg.rtol](Row& row) {
                           const double quad = real::mellin_alpha_quad(n, k, s, order).real();
                           const double formula = real::mellin_alpha_formula(n, k, s).real();
                           numeric(row, quad, formula, rel_err(quad, formula), tol);
                         }});
        tasks.push_back({"reciprocity", params, [=, tol = cfg.round_trip_tol](Row& row) {
                           const double m = real::mellin_alpha_formula(n, k, s).real();
                           if (m == 0) {
                             try {
                               real::beta_mellin(n, k, s, order);
                               row.detail = "Mellin transform vanishes but <beta, t^s> is finite";
                             } catch (const PoleError&) {
                               row.pass = true;
                               row.detail = "Mellin transform vanishes; <beta, t^s> has a pole";
                             }
                             return;
                           }
                           const double prod = (real::beta_mellin(n, k, s, order) * m).real();
                           numeric(row, prod, 1, std::abs(prod - 1), tol);
                         }});
      }
      for (int c = 0; c < cfg.cases; ++c)
        tasks.push_back({"round_trip", {{"n", n}, {"k", k}, {"case", c}}, [=, seed = cfg.seed](Row& row) {
                           auto rng = detail::case_rng(seed, "real-round-trip", {n, k, c});
                           round_trip(row, rng, cfg.radii, cfg.round_trip_tol, [&](const real::RadialTestFn& u, double r) {
                             const auto phi = real::inv_radial(n, real::alpha_image(n, k, u.function()));
                             return real::minv_apply(n, k, phi, r);
                           });
                         }});
    }
  struct Spot {
    int n, k;
    double s, value;
  };
  for (const Spot& sp : {Spot{2, 0, 2, kPi}, Spot{2, 1, 3, kPi / 2}, Spot{3, 0, 3, 2 * kPi}}) {
    if (std::find(cfg.n.begin(), cfg.n.end(), sp.n) == cfg.n.end()) continue;
    tasks.push_back({"mellin_spot", {{"n", sp.n}, {"k", sp.k}, {"s", sp.s}}, [=, tol = cfg.rtol](Row& row) {
                       const double quad = real::mellin_alpha_quad(sp.n, sp.k, sp.s, order).real();
                       const double formula = real::mellin_alpha_formula(sp.n, sp.k, sp.s).real();
                       numeric(row, quad, sp.value, std::max(rel_err(quad, sp.value), rel_err(formula, sp.value)), tol);
                     }});
  }
  Report rep{"real", cfg, detail::run_tasks(std::move(tasks), cfg)};
  rep.sort_rows();
  return rep;
}

Report run_complex_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const int order = cfg.order;
  for (int n : cfg.n)
    for (int p = cfg.pq.lo; p <= cfg.pq.hi; ++p)
      for (int q = cfg.pq.lo; q <= cfg.pq.hi; ++q) {
        const std::string branch = std::min(p, q) == 0 ? "delta" : "integral";
        if (n == 2)
          tasks.push_back({"zonal_slice", {{"n", n}, {"p", p}, {"q", q}}, [=](Row& row) {
                             double worst = 0;
                             for (int i = 0; i <= 100; ++i) {
                               const double t = i / 100.0;
                               worst = std::max(worst, std::abs(complex_radon::a_pq_eval(2, p, q, t) -
                                                                complex_radon::a_pq_direct(p, q, t)));
                             }
                             numeric(row, worst, 0, worst, kZonalPqTol);
                             row.detail = "max over 101 points of |a_pq - slice average|";
                           }});
        for (double off : kComplexOffsets) {
          const double s = 2 * n + off;
          const nlohmann::json params{{"n", n}, {"p", p}, {"q", q}, {"s", s}, {"branch", branch}};
          tasks.push_back({"mellin", params, [=, tol = cfg.rtol](Row& row) {
                             const double quad = complex_radon::mellin_alpha_pq_quad(n, p, q, s, order).real();
                             const double formula = complex_radon::mellin_alpha_pq_formula(n, p, q, s).real();
                             numeric(row, quad, formula, rel_err(quad, formula), tol);
                           }});
          tasks.push_back({"reciprocity", params, [=, tol = cfg.round_trip_tol](Row& row) {
                             const double m = complex_radon::mellin_alpha_pq_formula(n, p, q, s).real();
                             if (m == 0) {
                               try {
                                 complex_radon::beta_pq_mellin(n, p, q, s, order);
                                 row.detail = "Mellin transform vanishes but <beta, t^s> is finite";
                               } catch (const PoleError&) {
                                 row.pass = true;
                                 row.detail = "Mellin transform vanishes; <beta, t^s> has a pole";
                               }
                               return;
                             }
                             const double prod = (complex_radon::beta_pq_mellin(n, p, q, s, order) * m).real();
                             numeric(row, prod, 1, std::abs(prod - 1), tol);
                           }});
        }
        for (int c = 0; c < cfg.cases; ++c)
          tasks.push_back(
              {"round_trip", {{"n", n}, {"p", p}, {"q", q}, {"case", c}, {"branch", branch}}, [=, seed = cfg.seed](Row& row) {
                 auto rng = detail::case_rng(seed, "complex-round-trip", {n, p, q, c});
                 round_trip(row, rng, cfg.radii, cfg.round_trip_tol, [&](const real::RadialTestFn& u, double r) {
                   const auto phi = complex_radon::inv_radial_complex(n, complex_radon::alpha_pq_image(n, p, q, u.function()));
                   return complex_radon::minv_pq_apply(n, p, q, phi, r);
                 });
               }});
      }
  struct Spot {
    int n, p, q;
    double s, value;
  };
  for (const Spot& sp : {Spot{2, 0, 0, 4, kPi}, Spot{2, 1, 0, 5, kPi / 2}}) {
    if (std::find(cfg.n.begin(), cfg.n.end(), sp.n) == cfg.n.end()) continue;
    tasks.push_back({"mellin_spot", {{"n", sp.n}, {"p", sp.p}, {"q", sp.q}, {"s", sp.s}}, [=, tol = cfg.rtol](Row& row) {
                       const double quad = complex_radon::mellin_alpha_pq_quad(sp.n, sp.p, sp.q, sp.s, order).real();
                       const double formula = complex_radon::mellin_alpha_pq_formula(sp.n, sp.p, sp.q, sp.s).real();
                       numeric(row, quad, sp.value, std::max(rel_err(quad, sp.value), rel_err(formula, sp.value)), tol);
                     }});
  }
  Report rep{"complex", cfg, detail::run_tasks(std::move(tasks), cfg)};
  rep.sort_rows();
  return rep;
}

void emit_mellin_table(const RunConfig& cfg, std::ostream& os) {
  os << "module,n,k,p,q,s,value_quad,value_formula,abs_err,rel_err\n";
  auto line = [&](const std::string& module, int n, const std::string& k, const std::string& p, const std::string& q,
                  double s, double quad, double formula) {
    os << module << ',' << n << ',' << k << ',' << p << ',' << q << ',' << fmt(s) << ',' << fmt(quad) << ','
       << fmt(formula) << ',' << fmt(std::abs(quad - formula)) << ',' << fmt(rel_err(quad, formula)) << '\n';
  };
  for (int n : cfg.n)
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
      for (double off : kRealOffsets) {
        const double s = n + off;
        line("real", n, std::to_string(k), "", "", s, real::mellin_alpha_quad(n, k, s, cfg.order).real(),
             real::mellin_alpha_formula(n, k, s).real());
      }
  for (int n : cfg.n)
    for (int p = cfg.pq.lo; p <= cfg.pq.hi; ++p)
      for (int q = cfg.pq.lo; q <= cfg.pq.hi; ++q)
        for (double off : kComplexOffsets) {
          const double s = 2 * n + off;
          line("complex", n, "", std::to_string(p), std::to_string(q), s,
               complex_radon::mellin_alpha_pq_quad(n, p, q, s, cfg.order).real(),
               complex_radon::mellin_alpha_pq_formula(n, p, q, s).real());
        }
}

}  // namespace radon::suites
