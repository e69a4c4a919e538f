#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radon/value/rational.hpp"

namespace radon {

/// Exact element of Q(ζ_{p^K}).
///
/// Stored in the group ring Q[Z/p^K] (sparse, exponent -> coefficient) so that
/// sums and products by roots of unity stay cheap. Equality goes through the
/// canonical form: reduction modulo the cyclotomic polynomial Φ_{p^K} followed
/// by lowering K while every exponent is divisible by p. Elements with K = 0
/// are plain rationals and combine with any prime.
class Cyclotomic {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  Cyclotomic() = default;
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// ζ_{p^k}^e.
  static Cyclotomic root(int p, int k, std::int64_t e);
  /// Inverse of to_string(); also accepts a bare rational.
  static Cyclotomic parse(std::string_view text);

  int prime() const noexcept { return p_; }
  int exponent() const noexcept { return k_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }

  /// Canonical form (reduced mod Φ_{p^K}, minimal K).
  Cyclotomic normalized() const;
  bool is_rational() const;
  /// Throws std::domain_error if the canonical form is not rational.
  Rational to_rational() const;

  /// Same element viewed in Q(ζ_{p^k}), k >= exponent().
  Cyclotomic lifted(int p, int k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Canonical text: "p^K:[e:num/den,...]" or a bare rational when K = 0.
  std::string to_string() const;

 private:
  void merge_prime(int p);
  std::uint64_t modulus() const;

  int p_ = 0;
  int k_ = 0;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace radon
