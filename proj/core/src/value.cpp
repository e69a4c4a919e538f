#include <algorithm>
#include <map>
#include <stdexcept>

#include "radon/value/cyclotomic.hpp"
#include "radon/value/rational.hpp"

namespace radon {

Rational q_pow(int q, int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(1, p);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

std::uint64_t ipow(int p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(p);
  return r;
}

void combine(std::vector<Cyclotomic::Term>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational c = v[i].second;
    while (j < v.size() && v[j].first == v[i].first) c += v[j++].second;
    if (c != 0) v[out++] = {v[i].first, std::move(c)};
    i = j;
  }
  v.resize(out);
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
  if (r != 0) terms_.push_back({0, r});
}

Cyclotomic Cyclotomic::root(int p, int k, std::int64_t e) {
  Cyclotomic z;
  z.p_ = p;
  z.k_ = k;
  const auto m = static_cast<std::int64_t>(ipow(p, k));
  std::int64_t r = e % m;
  if (r < 0) r += m;
  z.terms_.push_back({static_cast<std::uint64_t>(r), Rational(1)});
  return z;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return Cyclotomic(parse_rational(text));
  const auto open = text.find(":[", caret);
  if (open == std::string_view::npos || text.back() != ']')
    throw std::invalid_argument("malformed cyclotomic value: '" + std::string(text) + "'");
  Cyclotomic r;
  try {
    r.p_ = std::stoi(std::string(text.substr(0, caret)));
    r.k_ = std::stoi(std::string(text.substr(caret + 1, open - caret - 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed cyclotomic value: '" + std::string(text) + "'");
  }
  if (r.p_ < 2 || r.k_ < 0) throw std::invalid_argument("malformed cyclotomic value: '" + std::string(text) + "'");
  auto body = text.substr(open + 2, text.size() - open - 3);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("malformed cyclotomic term: '" + std::string(item) + "'");
    const auto e = std::stoull(std::string(item.substr(0, colon)));
    r.terms_.push_back({e % r.modulus(), parse_rational(item.substr(colon + 1))});
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  combine(r.terms_);
  return r;
}

std::uint64_t Cyclotomic::modulus() const { return ipow(p_, k_); }

void Cyclotomic::merge_prime(int p) {
  if (p == 0) return;
  if (p_ != 0 && p_ != p) throw std::domain_error("cyclotomic values over different primes");
  p_ = p;
}

Cyclotomic Cyclotomic::lifted(int p, int k) const {
  if (k < k_) throw std::invalid_argument("cannot lower conductor by lifting");
  Cyclotomic r = *this;
  r.merge_prime(p);
  if (k == k_) return r;
  const std::uint64_t f = ipow(r.p_, k - k_);
  for (auto& t : r.terms_) t.first *= f;
  r.k_ = k;
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  merge_prime(o.p_);
  const int k = std::max(k_, o.k_);
  Cyclotomic a = lifted(p_, k);
  Cyclotomic b = o.lifted(p_, k);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.push_back(std::move(*j++));
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.push_back({i->first, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  k_ = k;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  Cyclotomic r;
  r.p_ = a.p_;
  r.merge_prime(b.p_);
  r.k_ = std::max(a.k_, b.k_);
  const Cyclotomic x = a.lifted(r.p_, r.k_);
  const Cyclotomic y = b.lifted(r.p_, r.k_);
  const std::uint64_t m = r.modulus();
  r.terms_.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) r.terms_.push_back({(s.first + t.first) % m, s.second * t.second});
  combine(r.terms_);
  return r;
}

Cyclotomic Cyclotomic::normalized() const {
  if (terms_.empty()) return {};
  if (k_ == 0) {
    Cyclotomic r;
    r.terms_ = terms_;
    return r;
  }
  // Reduce mod Φ_{p^K}: ζ^{j+(p-1)P} = -Σ_{i<p-1} ζ^{j+iP}, P = p^{K-1}.
  const std::uint64_t big_p = ipow(p_, k_ - 1);
  const std::uint64_t top = static_cast<std::uint64_t>(p_ - 1) * big_p;
  std::vector<Term> v;
  v.reserve(terms_.size() * static_cast<std::size_t>(p_));
  for (const auto& t : terms_) {
    if (t.first < top) {
      v.push_back(t);
    } else {
      const std::uint64_t j = t.first - top;
      for (int i = 0; i < p_ - 1; ++i) v.push_back({j + static_cast<std::uint64_t>(i) * big_p, -t.second});
    }
  }
  combine(v);
  Cyclotomic r;
  r.p_ = p_;
  r.k_ = k_;
  r.terms_ = std::move(v);
  while (r.k_ > 0 &&
         std::all_of(r.terms_.begin(), r.terms_.end(),
                     [&](const Term& t) { return t.first % static_cast<std::uint64_t>(r.p_) == 0; })) {
    for (auto& t : r.terms_) t.first /= static_cast<std::uint64_t>(r.p_);
    --r.k_;
  }
  if (r.terms_.empty()) return {};
  if (r.k_ == 0) r.p_ = 0;
  return r;
}

bool Cyclotomic::is_rational() const { return normalized().k_ == 0; }

Rational Cyclotomic::to_rational() const {
  const Cyclotomic n = normalized();
  if (n.k_ != 0) throw std::domain_error("cyclotomic value is not rational: " + n.to_string());
  return n.terms_.empty() ? Rational(0) : n.terms_.front().second;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const Cyclotomic x = a.normalized();
  const Cyclotomic y = b.normalized();
  return x.p_ == y.p_ && x.k_ == y.k_ && x.terms_ == y.terms_;
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic n = normalized();
  if (n.k_ == 0) return radon::to_string(n.terms_.empty() ? Rational(0) : n.terms_.front().second);
  std::string s = std::to_string(n.p_) + "^" + std::to_string(n.k_) + ":[";
  for (std::size_t i = 0; i < n.terms_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n.terms_[i].first) + ":" + radon::to_string(n.terms_[i].second);
  }
  return s + "]";
}

}  // namespace radon
