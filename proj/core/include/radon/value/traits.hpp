#pragma once

#include <string>
#include <string_view>

#include "radon/value/cyclotomic.hpp"
#include "radon/value/rational.hpp"

namespace radon {

inline bool is_zero_value(const Rational& r) { return r == 0; }
inline bool is_zero_value(const Cyclotomic& c) { return c.normalized().is_zero(); }

inline std::string value_to_string(const Rational& r) { return to_string(r); }
inline std::string value_to_string(const Cyclotomic& c) { return c.to_string(); }

template <class V>
struct ValueRing;

template <>
struct ValueRing<Rational> {
  static constexpr const char* name = "rational";
  static Rational parse(std::string_view s) { return parse_rational(s); }
};

template <>
struct ValueRing<Cyclotomic> {
  static constexpr const char* name = "cyclotomic";
  static Cyclotomic parse(std::string_view s) { return Cyclotomic::parse(s); }
};

}  // namespace radon
