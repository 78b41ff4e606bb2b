#include "cotcoord/cotangent.hpp"

#include "cotcoord/arith.hpp"
#include "cotcoord/coverage.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

std::mutex g_cot_mutex;
std::vector<CotDerivPoly> g_cot_polys{{0, {Rat(0), Rat(1)}}};

void require_modulus(long n) {
  if (n < 2) throw std::invalid_argument("cotangent modulus must be at least 2, got " + std::to_string(n));
}

}  // namespace

CotDerivPoly cot_derivative_poly(long l) {
  coverage::touch(Op::cot_derivative_poly);
  if (l < 0) throw std::invalid_argument("cot_derivative_poly: negative order");
  std::lock_guard lock(g_cot_mutex);
  while (static_cast<long>(g_cot_polys.size()) <= l) {
    const auto& p = g_cot_polys.back().coeffs;
    std::vector<Rat> d(p.size() > 1 ? p.size() - 1 : 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    // -(1 + y^2) * d
    std::vector<Rat> next(d.size() + 2);
    for (std::size_t i = 0; i < d.size(); ++i) {
      next[i] -= d[i];
      next[i + 2] -= d[i];
    }
    while (next.size() > 1 && sgn(next.back()) == 0) next.pop_back();
    g_cot_polys.push_back({static_cast<long>(g_cot_polys.size()), std::move(next)});
  }
  return g_cot_polys[l];
}

CycElem icot_value(long n, long k) {
  coverage::touch(Op::icot_value);
  require_modulus(n);
  if (std::gcd(mod(k, n), n) != 1)
    throw std::invalid_argument("icot_value: k=" + std::to_string(k) + " not coprime to n=" +
                                std::to_string(n));
  const CycElem one = CycElem::one(n);
  const CycElem z = CycElem::root_of_unity(n, k);
  return (one + z) * inverse(one - z);
}

CycElem icot_power(long r, long n) {
  coverage::touch(Op::icot_power);
  require_modulus(n);
  if (r < 0) throw std::invalid_argument("icot_power: negative exponent");
  return pow(icot_value(n), static_cast<unsigned>(r));
}

CycElem cotangent_number(long j, long n) {
  coverage::touch(Op::cotangent_number);
  require_modulus(n);
  if (j < 1) throw std::invalid_argument("cotangent_number: j must be positive");
  const CotDerivPoly poly = cot_derivative_poly(j - 1);
  const CycElem ic = icot_value(n);
  // i^j a_m y^m = a_m (-1)^((j-m)/2) (i y)^m for m = j (mod 2).
  CycElem sum = CycElem::zero(n);
  CycElem power = CycElem::one(n);
  for (std::size_t m = 0; m < poly.coeffs.size(); ++m) {
    if (m > 0) power *= ic;
    const Rat& a = poly.coeffs[m];
    if (sgn(a) == 0) continue;
    if ((j - static_cast<long>(m)) % 2 != 0)
      throw std::logic_error("cot_derivative_poly has a term of the wrong parity");
    const long half = (j - static_cast<long>(m)) / 2;
    sum += power * (half % 2 == 0 ? a : Rat(-a));
  }
  return sum;
}

}  // namespace cotcoord
