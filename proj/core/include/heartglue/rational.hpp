#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace heartglue {

// Canonical exact rational: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

// Accepts "p", "p/q" and surrounding whitespace; throws std::invalid_argument.
Rat parse_rat(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace heartglue
