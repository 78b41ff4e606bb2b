#include "cotcoord/combinatorics.hpp"

#include "cotcoord/bernoulli.hpp"
#include "cotcoord/coverage.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotcoord {

namespace {

using coverage::Op;

std::mutex g_stirling_mutex;
// Row k holds S(k, 0..k).
std::vector<std::vector<Int>> g_stirling{{Int(1)}};

// a_m = B_{2m} / (2m)!
Rat even_bernoulli_term(long m) { return bernoulli_number(2 * m) / Rat(factorial(2 * m)); }

}  // namespace

Int stirling_first_unsigned(long k, long j) {
  coverage::touch(Op::stirling_first_unsigned);
  if (k < 0) throw std::invalid_argument("stirling_first_unsigned: k must be non-negative");
  if (j < 0 || j > k) return 0;
  std::lock_guard lock(g_stirling_mutex);
  while (static_cast<long>(g_stirling.size()) <= k) {
    const auto& prev = g_stirling.back();
    const long n = static_cast<long>(prev.size()) - 1;  // S(n+1, i) = n S(n, i) + S(n, i-1)
    std::vector<Int> row(prev.size() + 1);
    for (long i = 0; i <= n + 1; ++i) {
      if (i <= n) row[i] += n * prev[i];
      if (i >= 1) row[i] += prev[i - 1];
    }
    g_stirling.push_back(std::move(row));
  }
  return g_stirling[k][j];
}

Rat coeff_c(long r, long j) {
  coverage::touch(Op::coeff_c);
  if (r < 1) throw std::invalid_argument("coeff_c: r must be positive");
  if (j < 1 || j > r) return 0;
  Rat sum = 0;
  for (long k = j; k <= r; ++k) {
    Int term = pow(Rat(-2), k - j).get_num() * binomial(r, k) * stirling_first_unsigned(k, j);
    sum += frac(term, factorial(k - 1));
  }
  return (r - 1) % 2 == 0 ? sum : Rat(-sum);
}

Rat coeff_d(long r, long j) {
  coverage::touch(Op::coeff_d);
  if (r < 1) throw std::invalid_argument("coeff_d: r must be positive");
  if (j < 1 || j > r || (r - j) % 2 != 0) return 0;
  const long top = (r - j) / 2;
  std::vector<Rat> base(top + 1);
  for (long m = 0; m <= top; ++m) base[m] = even_bernoulli_term(m);
  std::vector<Rat> acc(top + 1);
  acc[0] = 1;
  for (long t = 0; t < r; ++t) {
    std::vector<Rat> next(top + 1);
    for (long a = 0; a <= top; ++a) {
      if (sgn(acc[a]) == 0) continue;
      for (long b = 0; a + b <= top; ++b) next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
  }
  return acc[top];
}

Rat coeff_d_bruteforce(long r, long j) {
  coverage::touch(Op::coeff_d_bruteforce);
  if (r < 1) throw std::invalid_argument("coeff_d_bruteforce: r must be positive");
  if (r > kBruteforceMaxR)
    throw std::out_of_range("coeff_d_bruteforce: r exceeds " + std::to_string(kBruteforceMaxR));
  if (j < 1 || j > r) return 0;
  if ((r - j) % 2 != 0) return 0;  // no tuple satisfies the index equation

  // Every tuple (j_1..j_r) of non-negative integers with j + 2 * sum = r.
  Rat total = 0;
  std::vector<long> tuple(static_cast<std::size_t>(r));
  std::function<void(long, long)> walk = [&](long pos, long remaining) {
    if (pos == r) {
      if (remaining != 0) return;
      Rat prod = 1;
      for (long jt : tuple) prod *= bernoulli_number(2 * jt) / Rat(factorial(2 * jt));
      total += prod;
      return;
    }
    for (long v = 0; 2 * v <= remaining; ++v) {
      tuple[pos] = v;
      walk(pos + 1, remaining - 2 * v);
    }
  };
  walk(0, r - j);
  return total;
}

Rat bridge_4_7(long r, long j) {
  coverage::touch(Op::bridge_4_7);
  if (j < 1 || j > r || (r - j) % 2 != 0)
    throw std::invalid_argument("bridge_4_7: need 1 <= j <= r with j = r (mod 2), got r=" +
                                std::to_string(r) + ", j=" + std::to_string(j));
  Rat factor = frac(Int(1) << static_cast<mp_bitcnt_t>(r - j), factorial(j - 1));
  if ((r + 1) % 2 != 0) factor = -factor;
  return factor * coeff_d(r, j);
}

CoeffTable coeff_table(CoeffKind kind, long r) {
  CoeffTable t{r, kind, {}};
  for (long j = 1; j <= r; ++j) t.values[j] = kind == CoeffKind::c ? coeff_c(r, j) : coeff_d(r, j);
  return t;
}

}  // namespace cotcoord
