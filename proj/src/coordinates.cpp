#include "cotcoord/coordinates.hpp"

#include "cotcoord/arith.hpp"
#include "cotcoord/bernoulli.hpp"
#include "cotcoord/combinatorics.hpp"
#include "cotcoord/coverage.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

std::mutex g_tau_mutex;
std::map<std::pair<long, std::vector<long>>, CycElem> g_tau_inverse;

// 1 / tau(psi) for a primitive psi, memoized by (modulus, exponents).
CycElem inverse_gauss_sum(const DirichletCharacter& psi) {
  auto key = std::pair{psi.modulus(), psi.exponents()};
  {
    std::lock_guard lock(g_tau_mutex);
    auto it = g_tau_inverse.find(key);
    if (it != g_tau_inverse.end()) return it->second;
  }
  CycElem inv = inverse(gauss_sum(psi));
  std::lock_guard lock(g_tau_mutex);
  g_tau_inverse.emplace(std::move(key), inv);
  return inv;
}

CycElem descend_or_throw(const CycElem& a, long order, const char* what) {
  auto d = descend(a, order);
  if (!d)
    throw NotInSubfield(std::string(what) + ": result does not lie in Q(zeta_" +
                        std::to_string(order) + ")");
  return *d;
}

bool parity_matches(const DirichletCharacter& chi, long j) {
  return parity(chi) == (j % 2 == 0 ? 1 : -1);
}

// (2n)^j / (j f^j) * prod_{p | n} (1 - conj(chi)_f(p) / p^j) * B_{j, chi_f}
CycElem cotangent_closed_core(const DirichletCharacter& chi, long j) {
  const long n = chi.modulus();
  const long m = chi.order();
  const DirichletCharacter chi_f = primitive_part(chi);
  const DirichletCharacter chi_f_bar = chi_f.conj();
  const long f = chi_f.modulus();

  CycElem euler = CycElem::one(m);
  for (long p : prime_divisors(n)) {
    CycElem term = embed(eval(chi_f_bar, p), m);
    term *= pow(Rat(p), -j);
    euler *= CycElem::one(m) - term;
  }
  const Rat scalar = pow(Rat(2 * n), j) / (Rat(j) * pow(Rat(f), j));
  CycElem out = euler * embed(generalized_bernoulli(j, chi_f), m);
  out *= scalar;
  return out;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::definitional: return "definitional";
    case Method::closed_28: return "closed_28";
    case Method::theorem1: return "theorem1";
    case Method::eq42: return "eq42";
    case Method::coord_one: return "coord_one";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "def" || text == "definitional") return Method::definitional;
  if (text == "c28" || text == "closed_28") return Method::closed_28;
  if (text == "t1" || text == "theorem1") return Method::theorem1;
  if (text == "eq42") return Method::eq42;
  if (text == "one" || text == "coord_one") return Method::coord_one;
  throw std::invalid_argument("unknown method \"" + std::string(text) + "\"");
}

CycElem coord_definitional(const DirichletCharacter& chi, const CycElem& a) {
  coverage::touch(Op::coord_definitional);
  const long n = chi.modulus();
  if (a.order() != n)
    throw FieldMismatch("coord_definitional: element of Q(zeta_" + std::to_string(a.order()) +
                        ") with a character mod " + std::to_string(n));
  const DirichletCharacter chi_bar = chi.conj();
  const long m = chi.order();
  const long big = std::lcm(n, m);

  // sum_k conj(chi)(k) sigma_k(a), assembled as powers of zeta_big.
  std::vector<Rat> powers(static_cast<std::size_t>(big));
  for (long k = 1; k <= n; ++k) {
    auto t = chi_bar.value_exponent(k);
    if (!t) continue;
    const CycElem image = galois(a, k);
    const long shift = *t * (big / m);
    for (long i = 0; i < image.degree(); ++i) {
      const Rat& c = image.coeffs()[i];
      if (sgn(c) != 0) powers[(i * (big / n) + shift) % big] += c;
    }
  }
  const CycElem sum = CycElem::from_powers(big, powers);
  if (sum.is_zero()) return CycElem::zero(m);

  const CycElem tau_inv = embed(inverse_gauss_sum(primitive_part(chi_bar)), big);
  return descend_or_throw(sum * tau_inv, m, "coord_definitional");
}

CycElem coord_cotangent_closed(const DirichletCharacter& chi, long j) {
  coverage::touch(Op::coord_cotangent_closed);
  if (j < 1) throw std::invalid_argument("coord_cotangent_closed: j must be positive");
  if (!parity_matches(chi, j)) return CycElem::zero(chi.order());
  CycElem out = cotangent_closed_core(chi, j);
  if (parity(chi) < 0) out = -out;
  return out;
}

CycElem coord_one(const DirichletCharacter& chi) {
  coverage::touch(Op::coord_one);
  if (!chi.is_principal()) return CycElem::zero(chi.order());
  return CycElem::rational(1, Rat(euler_phi(chi.modulus())));
}

CycElem coord_power_closed(const DirichletCharacter& chi, long r) {
  coverage::touch(Op::coord_power_closed);
  if (r < 1) throw std::invalid_argument("coord_power_closed: r must be positive");
  const long m = chi.order();
  if (!parity_matches(chi, r)) return CycElem::zero(m);
  CycElem sum = CycElem::zero(m);
  for (long j = r % 2 == 0 ? 2 : 1; j <= r; j += 2) {
    const Rat c = coeff_c(r, j);
    if (sgn(c) == 0) continue;
    sum += cotangent_closed_core(chi, j) * c;
  }
  if (r % 2 != 0) return -sum;
  return embed(coord_one(chi), m) + sum;
}

CycElem coord_power_eq42(const DirichletCharacter& chi, long r) {
  coverage::touch(Op::coord_power_eq42);
  if (r < 1) throw std::invalid_argument("coord_power_eq42: r must be positive");
  if (!is_primitive(chi))
    throw std::invalid_argument("coord_power_eq42: character mod " + std::to_string(chi.modulus()) +
                                " is not primitive");
  const long m = chi.order();
  if (!parity_matches(chi, r)) return CycElem::zero(m);
  CycElem sum = CycElem::zero(m);
  for (long j = r % 2 == 0 ? 2 : 1; j <= r; j += 2) {
    const Rat d = coeff_d(r, j);
    if (sgn(d) == 0) continue;
    sum += embed(generalized_bernoulli(j, chi), m) * (d / Rat(factorial(j)));
  }
  sum *= -pow(Rat(2), r);
  return sum;
}

CycElem reconstruct(std::span<const CycElem> coords, long n) {
  coverage::touch(Op::reconstruct);
  auto group = CharacterGroup::of(n);
  if (n < 2 || coords.size() != group->size())
    throw std::invalid_argument("reconstruct: need exactly phi(n) coordinates");
  const long big = std::lcm(n, group->exponent());
  CycElem sum = CycElem::zero(big);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const DirichletCharacter chi = group->character(i);
    const CycElem tau = gauss_sum(primitive_part(chi.conj()));
    sum += embed(coords[i], big) * embed(tau, big);
  }
  sum *= Rat(1) / Rat(group->phi());
  return descend_or_throw(sum, n, "reconstruct");
}

std::vector<CycElem> all_coordinates(const CycElem& a) {
  std::vector<CycElem> out;
  for (const auto& chi : enumerate(a.order())) out.push_back(coord_definitional(chi, a));
  return out;
}

std::complex<long double> direct_sum_float(const DirichletCharacter& chi, long r, long n,
                                           int precision_bits) {
  coverage::touch(Op::direct_sum_float);
  if (chi.modulus() != n)
    throw std::invalid_argument("direct_sum_float: character modulus differs from n");
  if (precision_bits > 64) throw std::invalid_argument("direct_sum_float: at most 64 bits");
  auto run = [&]<class F>(F) {
    const F pi = std::numbers::pi_v<F>;
    std::complex<F> sum = 0;
    const long m = chi.order();
    for (long k = 1; k <= n; ++k) {
      auto t = chi.value_exponent(k);
      if (!t) continue;
      const F angle = 2 * pi * static_cast<F>(*t) / static_cast<F>(m);
      const std::complex<F> value(std::cos(angle), std::sin(angle));
      const F x = pi * static_cast<F>(k) / static_cast<F>(n);
      const std::complex<F> icot(0, std::cos(x) / std::sin(x));
      sum += value * std::pow(icot, static_cast<int>(r));
    }
    return std::complex<long double>(sum.real(), sum.imag());
  };
  if (precision_bits <= 53) return run(double{});
  return run((long double){});
}

}  // namespace cotcoord
