#pragma once

// Bernoulli numbers (B_1 = -1/2), Bernoulli polynomials and generalized
// Bernoulli numbers B_{r,chi} = f^(r-1) sum_{k=1}^{f} B_r(k/f) chi(k).

#include "cotcoord/characters.hpp"
#include "cotcoord/rational.hpp"

#include <vector>

namespace cotcoord {

struct BernoulliPolynomial {
  long degree;
  std::vector<Rat> coeffs;  // ascending powers of x

  Rat operator()(const Rat& x) const;
  BernoulliPolynomial derivative() const;
};

/// Exact B_m, memoized and thread-safe.
Rat bernoulli_number(long m);

BernoulliPolynomial bernoulli_polynomial(long r);

/// Requires chi primitive (throws std::invalid_argument otherwise). The value
/// lies in Q(zeta_m), m the order of chi.
CycElem generalized_bernoulli(long r, const DirichletCharacter& chi);

}  // namespace cotcoord
