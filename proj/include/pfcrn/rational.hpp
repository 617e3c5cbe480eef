#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfcrn {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "-p" and "p/q". Throws InvalidArgument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace pfcrn
