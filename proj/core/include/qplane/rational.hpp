#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qplane {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "3", "-7/2" or "0.25". Throws InputError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace qplane
