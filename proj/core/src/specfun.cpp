#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "radon/specfun/specfun.hpp"

namespace radon::specfun {

namespace {

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx z) { return z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()); }

cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_pole(z)) throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Shift right; a sum of principal logs keeps the principal branch.
  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  cplx s = 0;
  for (int j = 0; j < shift; ++j) s += std::log(z + static_cast<double>(j));
  return lanczos_log_gamma(z + static_cast<double>(shift)) - s;
}

cplx cgamma(cplx z) {
  if (z.imag() == 0 && z.real() > 0 && z.real() < 170) return std::tgamma(z.real());
  return std::exp(log_gamma(z));
}

cplx rgamma(cplx z) {
  if (is_pole(z)) return 0;
  return 1.0 / cgamma(z);
}

namespace {

template <class T>
T chebyshev_impl(int k, T t) {
  if (k == 0) return 1;
  T p0 = 1, p1 = t;
  for (int j = 2; j <= k; ++j) {
    const T p2 = 2 * t * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

template <class T>
T gegenbauer_impl(int k, T lambda, T t) {
  if (k < 0) throw std::invalid_argument("negative degree");
  if (k == 0) return 1;
  if (lambda == 0) return T(2) / k * chebyshev_impl(k, t);
  T p0 = 1, p1 = 2 * lambda * t;
  for (int j = 2; j <= k; ++j) {
    const T p2 = (2 * t * (j + lambda - 1) * p1 - (j + 2 * lambda - 2) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

template <class T>
T jacobi_impl(int m, T a, T b, T t) {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m == 0) return 1;
  T p0 = 1, p1 = ((a + b + 2) * t + a - b) / 2;
  for (int n = 2; n <= m; ++n) {
    const T c = 2 * n + a + b;
    const T p2 = ((c - 1) * (c * (c - 2) * t + a * a - b * b) * p1 - 2 * (n + a - 1) * (n + b - 1) * c * p0) /
                 (2 * n * (n + a + b) * (c - 2));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

double chebyshev_t(int k, double t) { return chebyshev_impl(k, t); }
long double chebyshev_t(int k, long double t) { return chebyshev_impl(k, t); }
double gegenbauer(int k, double lambda, double t) { return gegenbauer_impl(k, lambda, t); }
long double gegenbauer(int k, long double lambda, long double t) { return gegenbauer_impl(k, lambda, t); }
double jacobi(int m, double a, double b, double t) { return jacobi_impl(m, a, b, t); }
long double jacobi(int m, long double a, long double b, long double t) { return jacobi_impl(m, a, b, t); }

double legendre(int k, double t) {
  if (k == 0) return 1;
  double p0 = 1, p1 = t;
  for (int j = 2; j <= k; ++j) {
    const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double sphere_area(int d) {
  if (d < 0) throw std::invalid_argument("sphere dimension must be non-negative");
  const double h = (d + 1) / 2.0;
  return 2 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

cplx power_beta_integral(cplx b, double lambda, int order) {
  // [0, 1/2]: (1−t²)^λ = Σ c_j t^{2j}, integrated term by term.
  cplx s = 0;
  double c = 1;
  for (int j = 0; j < 80; ++j) {
    if (c != 0) {
      const cplx e = b + 2.0 * j;
      if (std::abs(e) < 1e-12) throw PoleError("∫ t^{b−1}(1−t²)^λ dt has a pole at b = " + std::to_string(b.real()));
      s += c * std::pow(2.0, -e) / e;
    }
    c *= -(lambda - j) / (j + 1);
  }
  s += gauss_jacobi(order, lambda, 0)->apply_on(0.5, 1.0, [&](double t) {
    return std::exp((b - 1.0) * std::log(t)) * std::pow(1 + t, lambda);
  });
  return s;
}

double jacobi_weight_mass(double a, double b) {
  return std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
}

namespace {

using RulePair = std::pair<std::shared_ptr<const QuadratureRule>, std::shared_ptr<const QuadratureRuleExt>>;

RulePair compute_rule(int order, double a, double b) {
  using L = long double;
  const L al = a, bl = b;
  // Jacobi matrix of the monic recurrence.
  Eigen::Matrix<L, Eigen::Dynamic, 1> diag(order), sub(std::max(order - 1, 1));
  for (int j = 0; j < order; ++j) {
    const L c = 2 * j + al + bl;
    diag(j) = j == 0 ? (bl - al) / (al + bl + 2) : (bl * bl - al * al) / (c * (c + 2));
  }
  for (int j = 1; j < order; ++j) {
    const L c = 2 * j + al + bl;
    const L beta = j == 1 ? 4 * (1 + al) * (1 + bl) / ((2 + al + bl) * (2 + al + bl) * (3 + al + bl))
                          : 4 * j * (j + al) * (j + bl) * (j + al + bl) / (c * c * (c + 1) * (c - 1));
    sub(j - 1) = std::sqrt(beta);
  }
  const L mass = std::exp((al + bl + 1) * std::log(L(2)) + std::lgamma(al + 1) + std::lgamma(bl + 1) -
                          std::lgamma(al + bl + 2));
  auto ext = std::make_shared<QuadratureRuleExt>();
  ext->a = a;
  ext->b = b;
  ext->order = order;
  if (order == 1) {
    ext->nodes = {diag(0)};
    ext->weights = {mass};
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<L, Eigen::Dynamic, Eigen::Dynamic>> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    for (int i = 0; i < order; ++i) {
      ext->nodes.push_back(es.eigenvalues()(i));
      const L v = es.eigenvectors()(0, i);
      ext->weights.push_back(mass * v * v);
    }
  }
  auto dbl = std::make_shared<QuadratureRule>();
  dbl->a = a;
  dbl->b = b;
  dbl->order = order;
  for (std::size_t i = 0; i < ext->nodes.size(); ++i) {
    dbl->nodes.push_back(static_cast<double>(ext->nodes[i]));
    dbl->weights.push_back(static_cast<double>(ext->weights[i]));
  }
  return {dbl, ext};
}

const RulePair& cached_rule(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  if (a <= -1 || b <= -1) throw std::invalid_argument("Jacobi exponents must exceed -1");
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, RulePair> cache;
  const auto key = std::make_tuple(order, a, b);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = compute_rule(order, a, b);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_jacobi(int order, double a, double b) {
  return cached_rule(order, a, b).first;
}

std::shared_ptr<const QuadratureRuleExt> gauss_jacobi_ext(int order, double a, double b) {
  return cached_rule(order, a, b).second;
}

}  // namespace radon::specfun
