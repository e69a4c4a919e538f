#include <string>
#include <utility>

#include "radon/padic/random.hpp"
#include "runner.hpp"

namespace radon::suites {

using namespace radon::padic;
using detail::Task;

namespace {

std::string str(const Rational& r) { return r.get_str(); }
std::string str(const Cyclotomic& c) { return c.to_string(); }

/// Records the first disagreement; the row passes iff there is none.
struct Agreement {
  Row& row;
  int checked = 0;

  template <class A, class B>
  void operator()(const A& lhs, const B& rhs, const std::string& where) {
    ++checked;
    if (!row.lhs.empty() || lhs == rhs) return;
    row.lhs = str(lhs);
    row.rhs = str(rhs);
    row.detail = "first mismatch at " + where;
  }
  void finish() {
    row.pass = row.lhs.empty();
    if (row.pass) row.detail = std::to_string(checked) + " exact checks";
  }
};

}  // namespace

Report run_padic_suite(const RunConfig& cfg) {
  set_default_precision(cfg.precision);
  std::vector<Task> tasks;
  auto add = [&](const std::string& id, int q, int n, int c, std::function<void(std::mt19937_64&, Agreement&)> body) {
    tasks.push_back({id, {{"q", q}, {"n", n}, {"case", c}}, [=, seed = cfg.seed](Row& row) {
                       auto rng = detail::case_rng(seed, id, {q, n, c});
                       Agreement agree{row};
                       body(rng, agree);
                       agree.finish();
                     }});
  };

  for (int q : cfg.q)
    for (int n : cfg.n)
      for (int c = 0; c < cfg.cases; ++c) {
        add("round_trip_A_beta_M", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_cc(rng, q, n);
          const auto mf = radon_M_as_function(f);
          for (const auto& x : sample_points(rng, f, 20)) agree(apply_A_beta(mf, x), f(x), x.to_string());
        });
        add("fourier_F_Fprime", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const Character psi{q};
          const auto f = random_cc(rng, q, n);
          const auto fp = fourier_Fprime_as_function(f, psi);
          for (const auto& x : sample_points(rng, f, 5)) agree(fourier_F(fp, x, psi), Cyclotomic(f(x)), x.to_string());
        });
        add("fourier_Fprime_F", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const Character psi{q};
          const auto f = random_cc(rng, q, n);
          const auto ff = fourier_F_as_function(to_cyclotomic(f), psi);
          for (const auto& xi : sample_points(rng, f, 5))
            agree(fourier_Fprime(ff, xi, psi), Cyclotomic(f(xi)), xi.to_string());
        });
        add("chernov", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_schwartz(rng, q, n);
          for (int i = 0; i < 10; ++i) {
            const auto x = random_point(rng, q, n, -3, 3);
            agree(chernov_invert(f, x), f(x), x.to_string());
          }
          for (const auto& [cell, v] : f.terms())
            if (!cell.center().is_zero()) agree(chernov_invert(f, cell.center()), v, cell.center().to_string());
        });
        add("chernov_vs_A_beta", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_cc(rng, q, n);
          const auto mf = radon_M_as_function(f);
          for (const auto& x : sample_points(rng, f, 5)) agree(chernov_invert(f, x), apply_A_beta(mf, x), x.to_string());
        });
        add("cavalieri", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_schwartz(rng, q, n);
          for (int i = 0; i < 5; ++i) {
            const auto xi = random_point(rng, q, n, -3, 3);
            agree(cavalieri_integral(f, xi), f.integrate(), xi.to_string());
          }
        });
        add("kochubei", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          for (int i = 0; i < 5; ++i) {
            const auto x = random_point(rng, q, n, -3, 3);
            agree(kochubei_integral(x), Rational(0), x.to_string());
          }
        });
        add("keybeta", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const Character psi{q};
          const BetaDistribution beta{q, n};
          for (int i = 0; i < 10; ++i) {
            const auto h = random_test_function(rng, q);
            agree(keybeta_pairing(h, n, psi), Cyclotomic(beta.pair(h)), "test function " + std::to_string(i));
          }
        });
        add("M_star_sigma", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_cc(rng, q, n);
          const auto alpha = random_kernel(rng, q);
          const auto lhs = mult_convolve(sigma(alpha, n), f);
          const auto rhs = mult_convolve(alpha, radon_M_as_function(f));
          for (int i = 0; i < 5; ++i) {
            const auto xi = random_point(rng, q, n, -3, 3);
            agree(radon_M(lhs, xi), rhs(xi), xi.to_string());
          }
        });
        add("A_star_sigma", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_cc(rng, q, n);
          const auto alpha = random_kernel(rng, q);
          const auto mf = radon_M_as_function(f);
          const auto lhs = mult_convolve(alpha, mf);
          const auto rhs = mult_convolve(sigma(alpha, n), apply_A_beta_as_function(mf));
          for (const auto& x : sample_points(rng, mult_convolve(sigma(alpha, n), f), 3))
            agree(apply_A_beta(lhs, x), rhs(x), x.to_string());
        });
        add("Fprime_alpha_M", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const Character psi{q};
          const auto f = random_cc(rng, q, n);
          for (int i = 0; i < 5; ++i) {
            const auto xi = random_point(rng, q, n, -3, 3);
            agree(fourier_Fprime(f, xi, psi), psi_alpha_convolve_M(f, xi, psi), xi.to_string());
          }
        });
        add("equivariance", q, n, c, [=](std::mt19937_64& rng, Agreement& agree) {
          const auto f = random_schwartz(rng, q, n);
          const auto g = random_map(rng, q, n);
          const auto gf = transform(f, g);
          agree(gf.integrate(), Rational(f.integrate() * g.abs_det()), "integral");
          for (int i = 0; i < 5; ++i) {
            const auto x = random_point(rng, q, n, -3, 3);
            agree(gf(g.apply(x)), f(x), x.to_string());
            const auto xi = random_point(rng, q, n, -3, 3);
            agree(radon_M(gf, xi), Rational(g.abs_det() * radon_M(f, g.apply_transpose(xi))), xi.to_string());
          }
        });
      }

  Report rep{"padic", cfg, detail::run_tasks(std::move(tasks), cfg)};
  rep.sort_rows();
  return rep;
}

}  // namespace radon::suites
