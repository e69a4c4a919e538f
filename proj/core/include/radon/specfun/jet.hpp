#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "radon/errors.hpp"

namespace radon::specfun {

/// Truncated Taylor expansion Σ_{j≤N} c_j (t − t₀)^j of a function at t₀.
///
/// Coefficients are c_j = f^{(j)}(t₀)/j!. Binary operations truncate at the
/// smaller of the two orders.
template <class T = double>
class Jet {
 public:
  /// Type of the base point (the real type underlying T).
  using Real = decltype(std::abs(std::declval<T>()));
  using Coeffs = std::vector<T>;

  Jet() : c_(1, T(0)) {}
  Jet(Real base, Coeffs coeffs) : t0_(base), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
  }

  static Jet constant(Real base, int order, T value) {
    Coeffs c(static_cast<std::size_t>(order) + 1, T(0));
    c[0] = value;
    return Jet(base, std::move(c));
  }
  /// The identity t ↦ t at t₀.
  static Jet variable(Real base, int order) {
    Jet j = constant(base, order, T(base));
    if (order >= 1) j.c_[1] = T(1);
    return j;
  }

  Real base() const noexcept { return t0_; }
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Coeffs& coeffs() const noexcept { return c_; }
  T value() const { return c_[0]; }
  T operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }

  /// f^{(j)}(t₀).
  T derivative_value(int j) const {
    if (j > order()) throw JetOrderError(j, order());
    Real fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    return c_[static_cast<std::size_t>(j)] * fact;
  }

  /// Jet of f′ (order drops by one).
  Jet derivative() const {
    if (order() < 1) throw JetOrderError(1, order());
    Coeffs d(c_.size() - 1);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = c_[j + 1] * static_cast<double>(j + 1);
    return Jet(t0_, std::move(d));
  }

  Jet truncated(int order) const {
    if (order > this->order()) throw JetOrderError(order, this->order());
    return Jet(t0_, Coeffs(c_.begin(), c_.begin() + order + 1));
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a.truncated(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Coeffs r(static_cast<std::size_t>(n) + 1, T(0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return Jet(a.t0_, std::move(r));
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }
  friend Jet operator+(Jet a, T s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(T s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, T s) { return a + (-s); }
  friend Jet operator-(T s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(Jet a, T s) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend Jet operator*(T s, Jet a) { return a * s; }
  friend Jet operator/(Jet a, T s) {
    for (auto& v : a.c_) v /= s;
    return a;
  }

  Jet reciprocal() const {
    if (c_[0] == T(0)) throw std::domain_error("reciprocal of a jet vanishing at its base point");
    Coeffs r(c_.size(), T(0));
    r[0] = T(1) / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T s(0);
      for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
      r[k] = -s / c_[0];
    }
    return Jet(t0_, std::move(r));
  }

  /// g(f(t)) for g given by its Taylor coefficients at f(t₀).
  Jet compose_outer(const Coeffs& outer) const {
    const int n = std::min(order(), static_cast<int>(outer.size()) - 1);
    Jet delta = truncated(n);
    delta.c_[0] = T(0);
    // Horner: g = Σ outer_j δ^j.
    Jet r = constant(t0_, n, outer[static_cast<std::size_t>(n)]);
    for (int j = n - 1; j >= 0; --j) r = r * delta + outer[static_cast<std::size_t>(j)];
    return r;
  }
  /// Composition with another jet taken at f(t₀).
  Jet compose_outer(const Jet& outer) const { return compose_outer(outer.c_); }

 private:
  Real t0_ = 0;
  Coeffs c_;
};

/// exp ∘ f: E′ = f′E.
template <class T>
Jet<T> exp(const Jet<T>& f) {
  const int n = f.order();
  typename Jet<T>::Coeffs e(static_cast<std::size_t>(n) + 1, T(0));
  e[0] = std::exp(f[0]);
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * f[j] * e[static_cast<std::size_t>(k - j)];
    e[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
  }
  return Jet<T>(f.base(), std::move(e));
}

/// f^a for f(t₀) > 0 (or any nonzero complex value, principal branch): P′ f = a f′ P.
template <class T, class E>
Jet<T> pow(const Jet<T>& f, E a) {
  const int n = f.order();
  if (f[0] == T(0)) throw std::domain_error("power of a jet vanishing at its base point");
  typename Jet<T>::Coeffs p(static_cast<std::size_t>(n) + 1, T(0));
  p[0] = std::pow(f[0], a);
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j)
      s += (T(a) * static_cast<double>(j) - static_cast<double>(k - j)) * f[j] * p[static_cast<std::size_t>(k - j)];
    p[static_cast<std::size_t>(k)] = s / (static_cast<double>(k) * f[0]);
  }
  return Jet<T>(f.base(), std::move(p));
}

/// Real jets carry extended precision: the radial convolutions differentiate
/// through sums with heavy cancellation.
using RealJet = Jet<long double>;
using ComplexJet = Jet<std::complex<double>>;

}  // namespace radon::specfun
