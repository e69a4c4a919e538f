#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "radon/padic/scalar.hpp"

namespace radon::padic {

namespace {

std::atomic<int> g_precision{12};

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw PrecisionOverflow("p-adic mantissa overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw PrecisionOverflow("p-adic mantissa overflow in addition");
  return r;
}

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (gcd(a, m) = 1), in [0, m).
Int mod_inverse(Int a, Int m) {
  Int old_r = mod_pos(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    Int t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("unit part is not invertible");
  return mod_pos(old_s, m);
}

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

int default_precision() noexcept { return g_precision.load(std::memory_order_relaxed); }

void set_default_precision(int digits) {
  if (digits < 1 || digits > 40) throw std::invalid_argument("precision must be in [1, 40]");
  g_precision.store(digits, std::memory_order_relaxed);
}

bool is_supported_prime(int q) noexcept {
  if (q < 2 || q > 31) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Int int_pow(int q, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent in int_pow");
  Int r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, q);
  return r;
}

std::string int_to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

PAdicScalar::PAdicScalar(int q, std::int64_t value) : PAdicScalar(from_parts(q, 0, value)) {}

PAdicScalar PAdicScalar::from_parts(int q, int valuation, Int unit) {
  PAdicScalar s;
  s.q_ = q;
  if (unit == 0) return s;
  while (unit % q == 0) {
    unit /= q;
    ++valuation;
  }
  s.v_ = valuation;
  s.unit_ = unit;
  return s;
}

PAdicScalar PAdicScalar::from_ratio(int q, std::int64_t num, std::int64_t den, int precision) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num == 0) return PAdicScalar(q, 0);
  int v = 0;
  Int n = num, d = den;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  while (d % q == 0) {
    d /= q;
    --v;
  }
  if (d == 1) return from_parts(q, v, n);
  if (d == -1) return from_parts(q, v, -n);
  const Int m = int_pow(q, precision);
  return from_parts(q, v, mod_pos(checked_mul(mod_pos(n, m), mod_inverse(d, m)), m));
}

PAdicScalar PAdicScalar::parse(int q, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("p-adic digit string needs 'v:digits'");
  const std::string vs(text.substr(0, colon));
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(vs, &used);
    if (used != vs.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed valuation in '" + std::string(text) + "'");
  }
  const auto digits = text.substr(colon + 1);
  if (digits.empty()) return PAdicScalar(q, 0);
  if (digit_value(digits.front()) == 0) throw std::invalid_argument("leading digit must be nonzero");
  Int unit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const int d = digit_value(*it);
    if (d < 0 || d >= q) throw std::invalid_argument("digit out of range in '" + std::string(text) + "'");
    unit = checked_add(checked_mul(unit, q), d);
  }
  return from_parts(q, v, unit);
}

int PAdicScalar::valuation() const {
  if (unit_ == 0) throw IndeterminateValuation("valuation of zero is indeterminate");
  return v_;
}

PAdicScalar PAdicScalar::operator-() const {
  PAdicScalar r = *this;
  r.unit_ = -r.unit_;
  return r;
}

PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b) {
  if (a.unit_ == 0) return b.q_ == 0 ? PAdicScalar::from_parts(a.q_, 0, b.unit_) : b;
  if (b.unit_ == 0) return a;
  const int q = a.q_;
  if (a.v_ <= b.v_) {
    const Int s = checked_add(a.unit_, checked_mul(b.unit_, int_pow(q, b.v_ - a.v_)));
    return PAdicScalar::from_parts(q, a.v_, s);
  }
  const Int s = checked_add(b.unit_, checked_mul(a.unit_, int_pow(q, a.v_ - b.v_)));
  return PAdicScalar::from_parts(q, b.v_, s);
}

PAdicScalar operator-(const PAdicScalar& a, const PAdicScalar& b) { return a + (-b); }

PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b) {
  const int q = a.q_ != 0 ? a.q_ : b.q_;
  if (a.unit_ == 0 || b.unit_ == 0) return PAdicScalar::from_parts(q, 0, 0);
  PAdicScalar r;
  r.q_ = q;
  r.v_ = a.v_ + b.v_;
  r.unit_ = checked_mul(a.unit_, b.unit_);
  return r;
}

bool operator<(const PAdicScalar& a, const PAdicScalar& b) noexcept {
  if ((a.unit_ == 0) != (b.unit_ == 0)) return a.unit_ == 0;
  if (a.unit_ == 0) return false;
  if (a.v_ != b.v_) return a.v_ < b.v_;
  return a.unit_ < b.unit_;
}

PAdicScalar PAdicScalar::shifted(int k) const {
  PAdicScalar r = *this;
  if (r.unit_ != 0) r.v_ += k;
  return r;
}

PAdicScalar PAdicScalar::inverse(int precision) const {
  if (unit_ == 0) throw IndeterminateValuation("inverse of zero");
  if (unit_ == 1 || unit_ == -1) return from_parts(q_, -v_, unit_);
  const Int m = int_pow(q_, precision);
  return from_parts(q_, -v_, mod_inverse(unit_, m));
}

PAdicScalar PAdicScalar::reduced(int level) const {
  if (unit_ == 0 || v_ >= level) return from_parts(q_, 0, 0);
  const Int m = int_pow(q_, level - v_);
  return from_parts(q_, v_, mod_pos(unit_, m));
}

std::pair<int, Int> PAdicScalar::principal_part() const {
  if (unit_ == 0 || v_ >= 0) return {0, 0};
  return {-v_, mod_pos(unit_, int_pow(q_, -v_))};
}

std::string PAdicScalar::digits(int precision) const {
  Int u = unit_;
  if (u < 0) u = mod_pos(u, int_pow(q_, precision));
  std::string s;
  while (u != 0 && static_cast<int>(s.size()) < precision) {
    s.push_back(digit_char(static_cast<int>(u % q_)));
    u /= q_;
  }
  return s;
}

std::string PAdicScalar::to_string(int precision) const {
  if (unit_ == 0) return "0:";
  return std::to_string(v_) + ":" + digits(precision);
}

Rational PAdicScalar::to_rational() const {
  if (unit_ == 0) return Rational(0);
  mpz_class u(int_to_string(unit_));
  return Rational(u) * q_pow(q_, v_);
}

// ---------------------------------------------------------------------------

PAdicVector::PAdicVector(int q, int n) : q_(q), n_(n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  for (int i = 0; i < n; ++i) c_[static_cast<std::size_t>(i)] = PAdicScalar(q, 0);
}

PAdicVector::PAdicVector(int q, std::initializer_list<std::int64_t> coords)
    : PAdicVector(q, static_cast<int>(coords.size())) {
  int i = 0;
  for (auto v : coords) c_[static_cast<std::size_t>(i++)] = PAdicScalar(q, v);
}

bool PAdicVector::is_zero() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

int PAdicVector::valuation_or(int cap) const noexcept {
  int v = cap;
  for (int i = 0; i < n_; ++i) v = std::min(v, c_[static_cast<std::size_t>(i)].valuation_or(cap));
  return v;
}

int PAdicVector::valuation() const {
  if (is_zero()) throw IndeterminateValuation("valuation of the zero vector is indeterminate");
  return valuation_or(0x3fffffff);
}

PAdicVector operator+(const PAdicVector& a, const PAdicVector& b) {
  PAdicVector r = a;
  for (int i = 0; i < a.n_; ++i) r[i] = a[i] + b[i];
  return r;
}

PAdicVector operator-(const PAdicVector& a, const PAdicVector& b) {
  PAdicVector r = a;
  for (int i = 0; i < a.n_; ++i) r[i] = a[i] - b[i];
  return r;
}

PAdicVector operator*(const PAdicScalar& s, const PAdicVector& a) {
  PAdicVector r = a;
  for (int i = 0; i < a.n_; ++i) r[i] = s * a[i];
  return r;
}

bool operator==(const PAdicVector& a, const PAdicVector& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool operator<(const PAdicVector& a, const PAdicVector& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int i = 0; i < a.n_; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

PAdicScalar PAdicVector::dot(const PAdicVector& o) const {
  PAdicScalar s(q_, 0);
  for (int i = 0; i < n_; ++i) s += (*this)[i] * o[i];
  return s;
}

PAdicVector PAdicVector::shifted(int k) const {
  PAdicVector r = *this;
  for (int i = 0; i < n_; ++i) r[i] = r[i].shifted(k);
  return r;
}

PAdicVector PAdicVector::reduced(int level) const {
  PAdicVector r = *this;
  for (int i = 0; i < n_; ++i) r[i] = r[i].reduced(level);
  return r;
}

std::string PAdicVector::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ", ";
    s += (*this)[i].to_string();
  }
  return s + ")";
}

int vnorm(const PAdicVector& x) { return x.valuation(); }

}  // namespace radon::padic
