#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kscyc {

// Exact rationals.  mpq_class keeps values canonical after every operation
// as long as we canonicalize on construction from strings.
using Rational = mpq_class;

// Accepts "p", "p/q", with optional leading sign.  Throws InputError.
Rational parse_rational(std::string_view s);

// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace kscyc
