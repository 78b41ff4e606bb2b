#pragma once

// Exact rationals and integers backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cotcoord {

using Int = mpz_class;
using Rat = mpq_class;

/// Lowest-terms "p/q" rendering; integers render without a denominator.
std::string to_string(const Rat& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator. The result is canonicalized.
Rat parse_rat(std::string_view text);

/// p/q in lowest terms; q must be nonzero.
Rat frac(const Int& p, const Int& q);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// Exact power of a rational with a (possibly negative) integer exponent.
Rat pow(const Rat& base, long exponent);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace cotcoord
