#include "cotcoord/arith.hpp"

#include <stdexcept>
#include <tuple>

namespace cotcoord {

std::vector<PrimePower> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long euler_phi(long n) {
  long phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

long pow_mod(long base, long exponent, long modulus) {
  if (modulus == 1) return 0;
  long result = 1;
  long b = mod(base, modulus);
  while (exponent > 0) {
    if (exponent & 1) result = static_cast<long>((__int128)result * b % modulus);
    b = static_cast<long>((__int128)b * b % modulus);
    exponent >>= 1;
  }
  return result;
}

long inverse_mod(long a, long n) {
  long old_r = mod(a, n), r = n;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1 && n != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(old_s, n);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace cotcoord
