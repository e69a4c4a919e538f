#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "radon/errors.hpp"
#include "radon/value/rational.hpp"

namespace radon::padic {

using Int = __int128;

/// Digit precision N used by truncated inversion and digit-string output.
int default_precision() noexcept;
void set_default_precision(int digits);

/// Primes accepted as residue-field orders.
bool is_supported_prime(int q) noexcept;

/// Exact element q^valuation * unit of Z[1/q] ⊂ Q_q.
///
/// Addition, subtraction and multiplication are exact; an operation whose
/// mantissa would leave 128 bits throws PrecisionOverflow instead of rounding.
/// Inversion is the only truncating operation: the unit part is inverted
/// modulo q^N, so x.inverse(N) agrees with 1/x to relative precision N.
class PAdicScalar {
 public:
  PAdicScalar() = default;
  PAdicScalar(int q, std::int64_t value);

  /// q^valuation * unit, renormalized so that q does not divide the unit.
  static PAdicScalar from_parts(int q, int valuation, Int unit);
  /// num/den; the q-part of den is exact, the rest is inverted to `precision` digits.
  static PAdicScalar from_ratio(int q, std::int64_t num, std::int64_t den, int precision);
  /// "v:d0d1d2…": valuation, then base-q digits of the unit, least significant first.
  static PAdicScalar parse(int q, std::string_view text);

  int prime() const noexcept { return q_; }
  bool is_zero() const noexcept { return unit_ == 0; }
  /// Throws IndeterminateValuation on zero.
  int valuation() const;
  /// Valuation with +infinity represented by `cap` for zero.
  int valuation_or(int cap) const noexcept { return unit_ == 0 ? cap : v_; }
  Int unit() const noexcept { return unit_; }

  PAdicScalar operator-() const;
  friend PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b);
  friend PAdicScalar operator-(const PAdicScalar& a, const PAdicScalar& b);
  friend PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b);
  PAdicScalar& operator+=(const PAdicScalar& b) { return *this = *this + b; }
  PAdicScalar& operator-=(const PAdicScalar& b) { return *this = *this - b; }
  PAdicScalar& operator*=(const PAdicScalar& b) { return *this = *this * b; }

  friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) noexcept {
    return a.unit_ == b.unit_ && (a.unit_ == 0 || a.v_ == b.v_);
  }
  friend bool operator!=(const PAdicScalar& a, const PAdicScalar& b) noexcept { return !(a == b); }
  /// Total order on representatives; used only for canonical sorting.
  friend bool operator<(const PAdicScalar& a, const PAdicScalar& b) noexcept;

  /// q^k * this.
  PAdicScalar shifted(int k) const;
  /// Inverse with unit part correct modulo q^precision. Throws on zero.
  PAdicScalar inverse(int precision) const;
  /// Canonical representative of this mod q^level, lying in [0, q^level).
  PAdicScalar reduced(int level) const;
  /// Principal part as (k, a): this ≡ a / q^k mod O with 0 <= a < q^k; k = 0 if integral.
  std::pair<int, Int> principal_part() const;

  /// Base-q digits of the unit, least significant first, at most `precision` of them.
  std::string digits(int precision) const;
  std::string to_string(int precision) const;
  std::string to_string() const { return to_string(default_precision()); }

  Rational to_rational() const;

 private:
  int q_ = 0;
  int v_ = 0;
  Int unit_ = 0;
};

inline constexpr int kMaxDim = 4;

/// Point of Q_q^n, 1 <= n <= kMaxDim, stored inline.
class PAdicVector {
 public:
  PAdicVector() = default;
  PAdicVector(int q, int n);
  PAdicVector(int q, std::initializer_list<std::int64_t> coords);

  int prime() const noexcept { return q_; }
  int dim() const noexcept { return n_; }
  const PAdicScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  PAdicScalar& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const noexcept;
  /// v(x) = min coordinate valuation; throws IndeterminateValuation on zero.
  int valuation() const;
  int valuation_or(int cap) const noexcept;

  friend PAdicVector operator+(const PAdicVector& a, const PAdicVector& b);
  friend PAdicVector operator-(const PAdicVector& a, const PAdicVector& b);
  friend PAdicVector operator*(const PAdicScalar& s, const PAdicVector& a);
  friend bool operator==(const PAdicVector& a, const PAdicVector& b) noexcept;
  friend bool operator!=(const PAdicVector& a, const PAdicVector& b) noexcept { return !(a == b); }
  friend bool operator<(const PAdicVector& a, const PAdicVector& b) noexcept;

  PAdicScalar dot(const PAdicVector& o) const;
  PAdicVector shifted(int k) const;
  PAdicVector reduced(int level) const;

  std::string to_string() const;

 private:
  int q_ = 0;
  int n_ = 0;
  std::array<PAdicScalar, kMaxDim> c_{};
};

/// v(x) = min over coordinates; ‖x‖ = q^{-v(x)}.
int vnorm(const PAdicVector& x);

/// q^k as an exact 128-bit integer; throws PrecisionOverflow when it does not fit.
Int int_pow(int q, int k);

std::string int_to_string(Int v);

}  // namespace radon::padic
