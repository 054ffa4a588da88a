#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace rht {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);

// numerator bits + denominator bits, the pivot cost used by elimination.
std::size_t bit_size(const Rational& q);

}  // namespace rht
