#include "cotcoord/series.hpp"

#include "cotcoord/combinatorics.hpp"
#include "cotcoord/coverage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

void require_order(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": truncation order too small");
}

}  // namespace

LaurentSeries::LaurentSeries(long valuation, std::vector<Rat> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs)) {}

LaurentSeries LaurentSeries::constant(const Rat& value, long precision) {
  return monomial(value, 0, precision);
}

LaurentSeries LaurentSeries::monomial(const Rat& value, long exponent, long precision) {
  if (precision <= exponent) throw std::invalid_argument("monomial beyond its precision");
  std::vector<Rat> c(static_cast<std::size_t>(precision - exponent));
  c[0] = value;
  return LaurentSeries(exponent, std::move(c));
}

Rat LaurentSeries::coeff(long exponent) const {
  if (exponent >= precision())
    throw std::out_of_range("coefficient of t^" + std::to_string(exponent) +
                            " is beyond the series precision " + std::to_string(precision()));
  if (exponent < valuation_) return 0;
  return coeffs_[exponent - valuation_];
}

LaurentSeries LaurentSeries::truncated(long prec) const {
  if (prec > precision()) throw std::out_of_range("cannot extend a truncated series");
  std::vector<Rat> c;
  for (long e = valuation_; e < prec; ++e) c.push_back(coeff(e));
  return LaurentSeries(std::min(valuation_, prec), std::move(c));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const long v = std::min(a.valuation_, b.valuation_);
  const long p = std::min(a.precision(), b.precision());
  std::vector<Rat> c;
  for (long e = v; e < p; ++e) c.push_back(a.coeff(e) + b.coeff(e));
  return LaurentSeries(v, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + Rat(-1) * b;
}

LaurentSeries operator*(const Rat& s, const LaurentSeries& a) {
  LaurentSeries out = a;
  for (auto& x : out.coeffs_) x *= s;
  return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const long v = a.valuation_ + b.valuation_;
  const long p = std::min(a.valuation_ + b.precision(), b.valuation_ + a.precision());
  std::vector<Rat> c(static_cast<std::size_t>(std::max(0L, p - v)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) < p - v; ++j)
      if (sgn(b.coeffs_[j]) != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentSeries(v, std::move(c));
}

LaurentSeries LaurentSeries::inverse() const {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) throw std::domain_error("inverse of a series with no known nonzero term");
  const long v = valuation_ + static_cast<long>(lead);
  const long rel = precision() - v;  // relative precision of the unit part
  std::vector<Rat> u(coeffs_.begin() + static_cast<long>(lead), coeffs_.end());
  std::vector<Rat> w(static_cast<std::size_t>(rel));
  const Rat u0_inv = 1 / u[0];
  w[0] = u0_inv;
  for (long e = 1; e < rel; ++e) {
    Rat acc = 0;
    for (long i = 1; i <= e; ++i)
      if (sgn(u[i]) != 0) acc += u[i] * w[e - i];
    w[e] = -acc * u0_inv;
  }
  return LaurentSeries(-v, std::move(w));
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rat> c;
  for (long e = valuation_; e < precision(); ++e) c.push_back(coeff(e) * e);
  return LaurentSeries(valuation_ - 1, std::move(c));
}

LaurentSeries LaurentSeries::pow(unsigned exponent) const {
  if (exponent == 0) return constant(1, precision() - std::min(0L, valuation_));
  LaurentSeries out = *this;
  for (unsigned i = 1; i < exponent; ++i) out = out * *this;
  return out;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other, long order) const {
  if (precision() < order || other.precision() < order)
    throw std::out_of_range("series not known to the requested order");
  for (long e = std::min(valuation_, other.valuation_); e < order; ++e)
    if (coeff(e) != other.coeff(e)) return false;
  return true;
}

LaurentSeries series_one_minus_exp_inv(long precision) {
  coverage::touch(Op::series_one_minus_exp_inv);
  // 1 - e^t = -(t + t^2/2! + ...), valuation 1; inverting costs two orders.
  std::vector<Rat> c;
  Int fact = 1;
  for (long k = 1; k < precision + 2; ++k) {
    fact *= k;
    c.push_back(frac(-1, fact));
  }
  return LaurentSeries(1, std::move(c)).inverse();
}

LaurentSeries series_icot_half(long precision) {
  coverage::touch(Op::series_icot_half);
  const LaurentSeries base = series_one_minus_exp_inv(precision);
  return Rat(2) * base - LaurentSeries::constant(1, precision);
}

bool verify_stirling_identity(long k, long order) {
  coverage::touch(Op::verify_stirling_identity);
  require_order(k >= 1 && order >= k + 2, "verify_stirling_identity");
  // k-fold products and (k-1)-fold derivatives each lose k-1 orders.
  const LaurentSeries base = series_one_minus_exp_inv(order + k - 1);
  const LaurentSeries lhs = base.pow(static_cast<unsigned>(k));

  LaurentSeries rhs = LaurentSeries::constant(0, base.precision());
  LaurentSeries deriv = base;
  for (long j = 1; j <= k; ++j) {
    if (j > 1) deriv = deriv.derivative();
    rhs = rhs + Rat(stirling_first_unsigned(k, j)) * deriv;
  }
  rhs = frac(1, factorial(k - 1)) * rhs;
  return lhs.agrees_with(rhs, order);
}

bool verify_proposition_1(long r, long order) {
  coverage::touch(Op::verify_proposition_1);
  require_order(r >= 1 && order >= r + 3, "verify_proposition_1");
  const LaurentSeries icot = series_icot_half(order + r - 1);
  const LaurentSeries lhs = icot.pow(static_cast<unsigned>(r));

  LaurentSeries rhs = LaurentSeries::constant(r % 2 == 0 ? 1 : 0, icot.precision());
  LaurentSeries deriv = icot;
  for (long j = 1; j <= r; ++j) {
    if (j > 1) deriv = deriv.derivative();
    const Rat c = coeff_c(r, j);
    if (sgn(c) == 0) continue;
    // i^j cot_{j-1}(x) = (-1)^(j+1) 2^(j-1) D^(j-1) C
    Rat factor = c * Rat(Int(1) << static_cast<mp_bitcnt_t>(j - 1));
    if (j % 2 == 0) factor = -factor;
    rhs = rhs + factor * deriv;
  }
  return lhs.agrees_with(rhs, order);
}

Rat coeff_d_from_series(long r, long j) {
  if (r < 1) throw std::invalid_argument("coeff_d_from_series: r must be positive");
  if (j < 1 || j > r) return 0;
  const LaurentSeries icot = series_icot_half(r + 1);
  const LaurentSeries scaled = LaurentSeries::monomial(frac(-1, 2), 1, r + 2) * icot;
  return scaled.pow(static_cast<unsigned>(r)).coeff(r - j);
}

}  // namespace cotcoord
