#pragma once

/**
 * Truncated formal Laurent series over Q, used as an independent oracle for
 * the generating-function identities behind the cotangent-power expansion.
 *
 * A series is known modulo t^precision: it stores the coefficients of
 * t^valuation .. t^(precision-1). Every operation computes the precision of its
 * result from the precisions of its inputs; reading a coefficient at or above
 * the precision throws std::out_of_range.
 *
 * Throughout, C(t) = i cot(-i t / 2) = 2 / (1 - e^t) - 1 and, with x = -i t / 2,
 *   i^j cot_{j-1}(x) = (-1)^(j+1) 2^(j-1) d^(j-1)/dt^(j-1) C(t),
 * so the powers of i become rational signs.
 */

#include "cotcoord/rational.hpp"

#include <vector>

namespace cotcoord {

class LaurentSeries {
 public:
  /// coeffs[i] is the coefficient of t^(valuation + i); precision is
  /// valuation + coeffs.size().
  LaurentSeries(long valuation, std::vector<Rat> coeffs);

  static LaurentSeries constant(const Rat& value, long precision);
  static LaurentSeries monomial(const Rat& value, long exponent, long precision);

  long valuation() const { return valuation_; }
  long precision() const { return valuation_ + static_cast<long>(coeffs_.size()); }

  /// Coefficient of t^exponent (zero below the valuation).
  Rat coeff(long exponent) const;

  LaurentSeries truncated(long precision) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rat& s, const LaurentSeries& a);

  /// Requires a nonzero known coefficient; the pole order is factored out.
  LaurentSeries inverse() const;
  LaurentSeries derivative() const;
  LaurentSeries pow(unsigned exponent) const;

  /// Equal coefficients for every exponent below `order`. Throws
  /// std::out_of_range if either series is not known that far.
  bool agrees_with(const LaurentSeries& other, long order) const;

 private:
  long valuation_;
  std::vector<Rat> coeffs_;
};

/// 1 / (1 - e^t), known modulo t^precision.
LaurentSeries series_one_minus_exp_inv(long precision);

/// i cot(-i t / 2) = 2 / (1 - e^t) - 1, known modulo t^precision.
LaurentSeries series_icot_half(long precision);

/// 1/(1-e^t)^k against (1/(k-1)!) sum_j S(k,j) d^(j-1)/dt^(j-1) 1/(1-e^t),
/// compared for all exponents below `order`. Requires k >= 1, order >= k + 2.
bool verify_stirling_identity(long k, long order);

/// C(t)^r against ((-1)^r + 1)/2 + sum_j c_{r,j} i^j cot_{j-1}, compared for
/// all exponents below `order`. Requires r >= 1, order >= r + 3.
bool verify_proposition_1(long r, long order);

/// d_{r,j} read off as the t^(r-j) coefficient of (-t C(t) / 2)^r.
Rat coeff_d_from_series(long r, long j);

}  // namespace cotcoord
