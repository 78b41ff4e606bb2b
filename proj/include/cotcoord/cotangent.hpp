#pragma once

// Exact cotangent values in Q(zeta_n), from i cot(pi k / n) = (1 + zeta_n^k) / (1 - zeta_n^k).

#include "cotcoord/cyclotomic.hpp"

#include <vector>

namespace cotcoord {

/// cot_l written as a polynomial in y = cot: poly_0 = y,
/// poly_{l+1} = -(1 + y^2) * d/dy poly_l.
struct CotDerivPoly {
  long order;
  std::vector<Rat> coeffs;  // ascending powers of y
};

CotDerivPoly cot_derivative_poly(long l);

/// i cot(pi k / n). Requires n >= 2 and gcd(k, n) = 1.
CycElem icot_value(long n, long k = 1);

/// (i cot(pi / n))^r, r >= 0.
CycElem icot_power(long r, long n);

/// The cotangent number i^j cot_{j-1}(pi / n), j >= 1.
CycElem cotangent_number(long j, long n);

}  // namespace cotcoord
