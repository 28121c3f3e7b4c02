#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacquet {

using Rational = mpq_class;

// n/d in lowest terms; d must be nonzero.
Rational make_rational(long n, long d = 1);
// Accepts "3", "-3/4".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace jacquet
