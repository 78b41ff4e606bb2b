#include "cotcoord/coverage.hpp"

namespace cotcoord::coverage {

namespace {

std::array<std::atomic<bool>, kOpCount> g_flags{};

constexpr std::array<std::string_view, kOpCount> kNames = {
    "cyclotomic_polynomial", "add", "sub", "mul", "neg", "inverse", "galois", "embed",
    "conjugate", "complex_eval", "enumerate", "eval", "parity", "conductor", "primitive_part",
    "gauss_sum", "bernoulli_number", "bernoulli_polynomial", "generalized_bernoulli",
    "stirling_first_unsigned", "coeff_c", "coeff_d", "coeff_d_bruteforce", "bridge_4_7",
    "icot_value", "icot_power", "cot_derivative_poly", "cotangent_number", "coord_definitional",
    "coord_cotangent_closed", "coord_one", "coord_power_closed", "coord_power_eq42",
    "reconstruct", "direct_sum_float", "series_one_minus_exp_inv", "series_icot_half",
    "verify_stirling_identity", "verify_proposition_1",
};

}  // namespace

std::string_view name(Op op) { return kNames[static_cast<std::size_t>(op)]; }

void touch(Op op) noexcept {
  g_flags[static_cast<std::size_t>(op)].store(true, std::memory_order_relaxed);
}

bool touched(Op op) noexcept {
  return g_flags[static_cast<std::size_t>(op)].load(std::memory_order_relaxed);
}

void reset() noexcept {
  for (auto& f : g_flags) f.store(false, std::memory_order_relaxed);
}

}  // namespace cotcoord::coverage
