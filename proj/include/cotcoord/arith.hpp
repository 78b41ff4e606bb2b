#pragma once

// Small machine-integer number theory used across the library.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cotcoord {

struct PrimePower {
  long prime;
  int exponent;
  long value;  // prime^exponent
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(long n);

/// Distinct primes dividing n, ascending.
std::vector<long> prime_divisors(long n);

/// Positive divisors of n, ascending.
std::vector<long> divisors(long n);

long euler_phi(long n);

/// Non-negative residue of a mod n (n > 0).
inline long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long pow_mod(long base, long exponent, long modulus);

/// Inverse of a mod n; a must be coprime to n.
long inverse_mod(long a, long n);

bool is_prime(long n);

}  // namespace cotcoord
