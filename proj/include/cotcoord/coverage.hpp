#pragma once

// Records which library operations have executed since the last reset. The
// verification suites are expected to touch every operation; a test enforces
// this.

#include <array>
#include <atomic>
#include <cstddef>
#include <string_view>

namespace cotcoord::coverage {

enum class Op : std::size_t {
  // cyclotomic
  cyclotomic_polynomial,
  add,
  sub,
  mul,
  neg,
  inverse,
  galois,
  embed,
  conjugate,
  complex_eval,
  // characters
  enumerate,
  eval,
  parity,
  conductor,
  primitive_part,
  gauss_sum,
  // bernoulli
  bernoulli_number,
  bernoulli_polynomial,
  generalized_bernoulli,
  // combinatorics
  stirling_first_unsigned,
  coeff_c,
  coeff_d,
  coeff_d_bruteforce,
  bridge_4_7,
  // cotangent
  icot_value,
  icot_power,
  cot_derivative_poly,
  cotangent_number,
  // coordinates
  coord_definitional,
  coord_cotangent_closed,
  coord_one,
  coord_power_closed,
  coord_power_eq42,
  reconstruct,
  direct_sum_float,
  // series_oracle
  series_one_minus_exp_inv,
  series_icot_half,
  verify_stirling_identity,
  verify_proposition_1,
  count_
};

inline constexpr std::size_t kOpCount = static_cast<std::size_t>(Op::count_);

std::string_view name(Op op);

void touch(Op op) noexcept;
bool touched(Op op) noexcept;
void reset() noexcept;

}  // namespace cotcoord::coverage
