#include "cotcoord/bernoulli.hpp"

#include "cotcoord/coverage.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli{Rat(1)};

}  // namespace

Rat BernoulliPolynomial::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BernoulliPolynomial BernoulliPolynomial::derivative() const {
  BernoulliPolynomial d{degree > 0 ? degree - 1 : 0, {}};
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * static_cast<long>(i));
  if (d.coeffs.empty()) d.coeffs.push_back(0);
  return d;
}

Rat bernoulli_number(long m) {
  coverage::touch(Op::bernoulli_number);
  if (m < 0) throw std::invalid_argument("bernoulli_number: negative index");
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1.
  while (static_cast<long>(g_bernoulli.size()) <= m) {
    const long j = static_cast<long>(g_bernoulli.size());
    Rat acc = 0;
    for (long k = 0; k < j; ++k)
      if (sgn(g_bernoulli[k]) != 0) acc += Rat(binomial(j + 1, k)) * g_bernoulli[k];
    g_bernoulli.push_back(-acc / Rat(j + 1));
  }
  return g_bernoulli[m];
}

BernoulliPolynomial bernoulli_polynomial(long r) {
  coverage::touch(Op::bernoulli_polynomial);
  if (r < 0) throw std::invalid_argument("bernoulli_polynomial: negative degree");
  BernoulliPolynomial p{r, std::vector<Rat>(static_cast<std::size_t>(r) + 1)};
  // B_r(x) = sum_k C(r, k) B_k x^(r-k)
  for (long k = 0; k <= r; ++k) p.coeffs[r - k] = Rat(binomial(r, k)) * bernoulli_number(k);
  return p;
}

CycElem generalized_bernoulli(long r, const DirichletCharacter& chi) {
  coverage::touch(Op::generalized_bernoulli);
  if (r < 1) throw std::invalid_argument("generalized_bernoulli: r must be positive");
  const long f = chi.modulus();
  if (!is_primitive(chi))
    throw std::invalid_argument("generalized_bernoulli: character mod " + std::to_string(f) +
                                " is not primitive");
  const long m = chi.order();
  const BernoulliPolynomial b = bernoulli_polynomial(r);
  std::vector<Rat> by_value(static_cast<std::size_t>(m));
  for (long k = 1; k <= f; ++k) {
    auto t = chi.value_exponent(k);
    if (!t) continue;
    by_value[*t] += b(frac(k, f));
  }
  CycElem out = CycElem::from_powers(m, by_value);
  out *= pow(Rat(f), r - 1);
  return out;
}

}  // namespace cotcoord
