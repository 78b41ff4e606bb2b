#pragma once

/**
 * Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * An element is stored as its unique residue modulo the N-th cyclotomic
 * polynomial Phi_N: a vector of phi(N) rationals, ascending powers of zeta_N.
 * Equality is therefore plain coefficient comparison.
 *
 * Elements of different orders never mix implicitly. Use embed() or
 * to_common_field() to move both operands into Q(zeta_lcm) first.
 */

#include "cotcoord/rational.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cotcoord {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value that must lie in a subfield does not. Signals a bug in
/// the caller, never bad user input.
struct NotInSubfield : std::logic_error {
  using std::logic_error::logic_error;
};

/// Phi_N with ascending integer coefficients. Memoized, thread-safe.
const std::vector<Int>& cyclotomic_polynomial(long order);

class CycElem {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycElem() : CycElem(zero(1)) {}

  static CycElem zero(long order);
  static CycElem one(long order);
  static CycElem rational(long order, const Rat& value);
  /// zeta_N^k, any integer k.
  static CycElem root_of_unity(long order, long k);
  /// Sum of powers[i] * zeta_N^i for a vector of any length; reduced.
  static CycElem from_powers(long order, std::span<const Rat> powers);
  /// Takes a canonical coefficient vector; throws if its length is not phi(N).
  static CycElem from_coeffs(long order, std::vector<Rat> coeffs);

  long order() const { return order_; }
  long degree() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rat> as_rational() const;

  CycElem& operator+=(const CycElem& other);
  CycElem& operator-=(const CycElem& other);
  CycElem& operator*=(const CycElem& other);
  CycElem& operator*=(const Rat& scalar);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rat& s) { return a *= s; }
  friend CycElem operator*(const Rat& s, CycElem a) { return a *= s; }
  friend CycElem operator-(const CycElem& a);

  friend bool operator==(const CycElem& a, const CycElem& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CycElem(long order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

  long order_;
  std::vector<Rat> coeffs_;
};

CycElem add(const CycElem& a, const CycElem& b);
CycElem sub(const CycElem& a, const CycElem& b);
CycElem mul(const CycElem& a, const CycElem& b);
CycElem neg(const CycElem& a);

/// a^e for e >= 0.
CycElem pow(const CycElem& a, unsigned exponent);

/// Multiplicative inverse by the extended Euclidean algorithm against Phi_N.
/// Fields of degree above detail::kModularInverseDegree run Euclid over F_p
/// for several primes and lift by CRT and rational reconstruction; the lift is
/// accepted only once a * inverse == 1 holds exactly. Throws std::domain_error
/// for zero.
CycElem inverse(const CycElem& a);

namespace detail {
inline constexpr long kModularInverseDegree = 96;
/// Extended Euclid over Q[x].
CycElem inverse_rational_euclid(const CycElem& a);
/// Extended Euclid over F_p with CRT lifting; nullopt if max_primes did not suffice.
std::optional<CycElem> inverse_multimodular(const CycElem& a, int max_primes = 256);
}  // namespace detail

/// sigma_k : zeta_N -> zeta_N^k. Throws std::invalid_argument unless gcd(k, N) = 1.
CycElem galois(const CycElem& a, long k);

/// Image under zeta_N -> zeta_M^(M/N). Throws FieldMismatch unless N | M.
CycElem embed(const CycElem& a, long target_order);

/// Inverse of embed: returns the element of Q(zeta_target) whose embedding is
/// a, or nullopt if a is not in that subfield. target_order must divide a.order().
std::optional<CycElem> descend(const CycElem& a, long target_order);

/// Embeds both operands into Q(zeta_lcm(N, M)).
std::pair<CycElem, CycElem> to_common_field(const CycElem& a, const CycElem& b);

/// Complex conjugation, i.e. sigma_{N-1}.
CycElem conjugate(const CycElem& a);

/**
 * Evaluates the residue polynomial at exp(2 pi i / N).
 *
 * precision_bits <= 53 evaluates in double, <= 64 in long double; anything
 * larger throws std::invalid_argument. With u = 2^(1 - precision_bits) the
 * absolute error is at most (phi(N) + 4) * u * sum_i |c_i|, where the c_i are
 * the stored coefficients.
 */
std::complex<long double> complex_eval(const CycElem& a, int precision_bits = 53);

/// A priori bound for complex_eval's absolute error, as documented above.
long double complex_eval_error_bound(const CycElem& a, int precision_bits = 53);

std::ostream& operator<<(std::ostream& os, const CycElem& a);

}  // namespace cotcoord
