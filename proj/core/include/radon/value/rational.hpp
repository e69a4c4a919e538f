#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radon {

using Rational = mpq_class;

/// Exact q^e for any integer exponent.
Rational q_pow(int q, int e);

/// "num/den" (den omitted when 1).
std::string to_string(const Rational& r);

/// Parses "num", "num/den", with optional sign; result is canonicalized.
Rational parse_rational(std::string_view text);

}  // namespace radon
