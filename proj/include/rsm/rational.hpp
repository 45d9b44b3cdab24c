#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rsm {

// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) across arithmetic; parse_rational
// canonicalizes on construction.
using Rational = mpq_class;

// Accepts "n/d" or "n" with optional leading '-'. Throws Error(BadWeight).
Rational parse_rational(std::string_view text);

// Lowest terms, "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace rsm
