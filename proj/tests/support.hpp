#pragma once

#include "cotcoord/cyclotomic.hpp"

#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace cotcoord::testing {

inline CycElem elem(long order, std::initializer_list<const char*> powers) {
  std::vector<Rat> v;
  for (const char* p : powers) v.push_back(parse_rat(p));
  return CycElem::from_powers(order, v);
}

// Small random rational p/q with |p| <= 9, 1 <= q <= 4.
inline Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return frac(num(rng), den(rng));
}

inline CycElem random_elem(long order, std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<long> exp(0, 2 * order);
  std::vector<Rat> powers(2 * order + 1);
  for (int i = 0; i < terms; ++i) powers[exp(rng)] += random_rat(rng);
  return CycElem::from_powers(order, powers);
}

inline CycElem random_nonzero(long order, std::mt19937& rng) {
  for (;;) {
    CycElem a = random_elem(order, rng);
    if (!a.is_zero()) return a;
  }
}

inline std::complex<double> zeta(long order, long k = 1) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order));
}

// Independent float evaluation of sum c_i zeta^i straight from the stored coefficients.
inline std::complex<double> naive_eval(const CycElem& a) {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) acc += a.coeffs()[i].get_d() * zeta(a.order(), static_cast<long>(i));
  return acc;
}

}  // namespace cotcoord::testing
