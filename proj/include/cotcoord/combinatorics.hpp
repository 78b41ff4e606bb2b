#pragma once

// Stirling numbers of the first kind and the two coefficient families that
// express i^r cot^r through the cotangent numbers i^j cot_{j-1}:
//
//   c_{r,j} = (-1)^(r-1) sum_{k=j}^{r} (-2)^(k-j) / (k-1)! * C(r,k) * S(k,j)
//   d_{r,j} = sum over j_1..j_r >= 0 with j + 2(j_1+...+j_r) = r of
//             prod_t B_{2 j_t} / (2 j_t)!
//
// and the relation c_{r,j} = (-1)^(r+1) 2^(r-j) / (j-1)! * d_{r,j}.
// Out-of-range (r, j) yields exact zero.

#include "cotcoord/rational.hpp"

#include <map>

namespace cotcoord {

/// Unsigned S(k, j): permutations of k objects with exactly j cycles.
Int stirling_first_unsigned(long k, long j);

Rat coeff_c(long r, long j);

/// d_{r,j} as the z^((r-j)/2) coefficient of (sum_m B_{2m}/(2m)! z^m)^r.
Rat coeff_d(long r, long j);

inline constexpr long kBruteforceMaxR = 12;

/// d_{r,j} by literal enumeration of the index tuples. Throws
/// std::out_of_range for r > kBruteforceMaxR.
Rat coeff_d_bruteforce(long r, long j);

/// (-1)^(r+1) 2^(r-j) / (j-1)! * d_{r,j}. Throws std::invalid_argument unless
/// 1 <= j <= r and j = r (mod 2).
Rat bridge_4_7(long r, long j);

enum class CoeffKind { c, d };

struct CoeffTable {
  long r;
  CoeffKind kind;
  std::map<long, Rat> values;  // j -> value, 1 <= j <= r
};

CoeffTable coeff_table(CoeffKind kind, long r);

}  // namespace cotcoord
