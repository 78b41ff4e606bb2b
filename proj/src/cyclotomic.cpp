#include "cotcoord/cyclotomic.hpp"

#include "cotcoord/arith.hpp"
#include "cotcoord/coverage.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

struct Cyclo {
  long order = 1;
  long phi = 1;
  std::vector<Int> poly;                    // ascending, monic, length phi + 1
  std::vector<std::pair<long, Int>> tail;   // nonzero terms below the leading one
};

std::mutex g_cyclo_mutex;
std::map<long, std::unique_ptr<Cyclo>> g_cyclo;

// Exact division of an integer polynomial by a monic one; remainder must vanish.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Int> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Int c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

const Cyclo& cyclo(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard lock(g_cyclo_mutex);
    auto it = g_cyclo.find(order);
    if (it != g_cyclo.end()) return *it->second;
  }
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<Int> p(static_cast<std::size_t>(order) + 1);
  p.front() = -1;
  p.back() = 1;
  for (long d : divisors(order)) {
    if (d == order) continue;
    p = divide_exact(std::move(p), cyclo(d).poly);
  }
  auto c = std::make_unique<Cyclo>();
  c->order = order;
  c->phi = static_cast<long>(p.size()) - 1;
  for (long t = 0; t < c->phi; ++t)
    if (p[t] != 0) c->tail.emplace_back(t, p[t]);
  c->poly = std::move(p);

  std::lock_guard lock(g_cyclo_mutex);
  auto [it, inserted] = g_cyclo.emplace(order, std::move(c));
  return *it->second;
}

// Reduces an integer polynomial of any length modulo Phi_N, result length phi(N).
void reduce(std::vector<Int>& p, const Cyclo& c) {
  const long phi = c.phi;
  for (long i = static_cast<long>(p.size()) - 1; i >= phi; --i) {
    if (p[i] == 0) continue;
    for (const auto& [t, coef] : c.tail)
      mpz_submul(p[i - phi + t].get_mpz_t(), p[i].get_mpz_t(), coef.get_mpz_t());
    p[i] = 0;
  }
  p.resize(static_cast<std::size_t>(phi));
}

Int common_denominator(std::span<const Rat> v) {
  Int den = 1;
  for (const auto& q : v)
    if (q.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  return den;
}

std::vector<Int> scale(std::span<const Rat> v, const Int& den) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (den / v[i].get_den());
  }
  return out;
}

std::vector<Rat> unscale(const std::vector<Int>& v, const Int& den) {
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out[i] = Rat(v[i], den);
    out[i].canonicalize();
  }
  return out;
}

void require_same_order(const CycElem& a, const CycElem& b) {
  if (a.order() != b.order())
    throw FieldMismatch("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

// Dense polynomial helpers over Q for the extended Euclidean algorithm.
using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  std::size_t n = std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1);
  QPoly out(n);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

// Divides a by b (b nonzero); returns the quotient, leaves the remainder in a.
QPoly divmod(QPoly& a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - db);
  const Rat lead_inv = 1 / b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(a[i]) == 0) continue;
    Rat c = a[i] * lead_inv;
    for (std::size_t t = 0; t <= db; ++t)
      if (sgn(b[t]) != 0) a[i - db + t] -= c * b[t];
    q[i - db] = std::move(c);
  }
  a.resize(db);
  trim(a);
  return q;
}

struct DescentMap {
  std::vector<long> pivots;                // coefficient indices in the big field
  std::vector<std::vector<Rat>> solve;     // phi(N) x phi(N) inverse on the pivots
};

std::mutex g_descent_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const DescentMap>> g_descent;

std::shared_ptr<const DescentMap> descent_map(long small, long big) {
  {
    std::lock_guard lock(g_descent_mutex);
    auto it = g_descent.find({small, big});
    if (it != g_descent.end()) return it->second;
  }
  const long ds = cyclo(small).phi;
  const long db = cyclo(big).phi;
  const long step = big / small;

  // Columns: images of zeta_small^i in Q(zeta_big).
  std::vector<std::vector<Rat>> cols;
  for (long i = 0; i < ds; ++i) cols.push_back(CycElem::root_of_unity(big, i * step).coeffs());

  // Row-reduce a copy of the transposed system to pick pivot coordinates.
  auto rows = cols;
  std::vector<long> pivots;
  std::size_t rank = 0;
  for (long col = 0; col < db && static_cast<long>(rank) < ds; ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (long c = col; c < db; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (static_cast<long>(rank) != ds) throw std::logic_error("embedding is not injective");

  // Invert the square block S[r][i] = cols[i][pivots[r]] by Gauss-Jordan.
  std::vector<std::vector<Rat>> a(ds, std::vector<Rat>(2 * ds));
  for (long r = 0; r < ds; ++r) {
    for (long i = 0; i < ds; ++i) a[r][i] = cols[i][pivots[r]];
    a[r][ds + r] = 1;
  }
  for (long c = 0; c < ds; ++c) {
    long p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    Rat inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (long r = 0; r < ds; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rat f = a[r][c];
      for (long k = 0; k < 2 * ds; ++k) a[r][k] -= f * a[c][k];
    }
  }
  auto map = std::make_shared<DescentMap>();
  map->pivots = std::move(pivots);
  map->solve.assign(ds, std::vector<Rat>(ds));
  for (long i = 0; i < ds; ++i)
    for (long r = 0; r < ds; ++r) map->solve[i][r] = a[i][ds + r];

  std::lock_guard lock(g_descent_mutex);
  g_descent.emplace(std::pair{small, big}, map);
  return map;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

u64 reduce_int(const Int& x, u64 q) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), q);
  return r.get_ui();
}

using PPoly = std::vector<u64>;

void trim_p(PPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Extended Euclid in F_q[x]; returns num^-1 mod (Phi_N, q) or nullopt when
// num and Phi_N share a factor mod q.
std::optional<PPoly> inverse_mod_prime(const std::vector<Int>& num, const Cyclo& c, u64 q) {
  PPoly r0(c.poly.size()), r1(num.size());
  for (std::size_t i = 0; i < c.poly.size(); ++i) r0[i] = reduce_int(c.poly[i], q);
  for (std::size_t i = 0; i < num.size(); ++i) r1[i] = reduce_int(num[i], q);
  trim_p(r1);
  if (r1.empty()) return std::nullopt;
  PPoly s0, s1{1};
  while (r1.size() > 1) {
    // r0 = quot * r1 + rem, with s2 = s0 - quot * s1.
    const u64 lead_inv = powmod(r1.back(), q - 2, q);
    const std::size_t d1 = r1.size() - 1;
    PPoly quot(r0.size() >= r1.size() ? r0.size() - d1 : 0);
    for (std::size_t i = r0.size(); i-- > d1;) {
      if (r0[i] == 0) continue;
      const u64 f = mulmod(r0[i], lead_inv, q);
      quot[i - d1] = f;
      for (std::size_t t = 0; t <= d1; ++t)
        r0[i - d1 + t] = (r0[i - d1 + t] + q - mulmod(f, r1[t], q)) % q;
    }
    r0.resize(d1);
    trim_p(r0);
    PPoly s2(std::max(s0.size(), quot.size() + s1.size()));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j)
        s2[i + j] = (s2[i + j] + q - mulmod(quot[i], s1[j], q)) % q;
    }
    trim_p(s2);
    std::swap(r0, r1);  // r1 <- remainder, r0 <- old r1
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) return std::nullopt;
  }
  const u64 inv = powmod(r1[0], q - 2, q);
  for (auto& x : s1) x = mulmod(x, inv, q);
  s1.resize(static_cast<std::size_t>(c.phi));
  return s1;
}

// Wang's rational reconstruction with numerator and denominator bounded by sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Int& u, const Int& m) {
  Int bound;
  Int half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Int r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int quo = r0 / r1;
    Int r2 = r0 - quo * r1;
    Int t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return frac(r1, t1);
}

long double to_long_double(const Rat& q) {
  mpf_class f(q, 128);
  const double hi = f.get_d();
  mpf_class rest(f - hi, 128);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

template <class F>
std::complex<long double> evaluate(const CycElem& a) {
  const long n = a.order();
  std::complex<F> sum = 0;
  const F two_pi = 2 * std::numbers::pi_v<F>;
  for (long i = 0; i < a.degree(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    const F angle = two_pi * static_cast<F>(i) / static_cast<F>(n);
    const F cf = static_cast<F>(to_long_double(c));
    sum += cf * std::complex<F>(std::cos(angle), std::sin(angle));
  }
  return {static_cast<long double>(sum.real()), static_cast<long double>(sum.imag())};
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long order) {
  coverage::touch(Op::cyclotomic_polynomial);
  return cyclo(order).poly;
}

CycElem CycElem::zero(long order) { return CycElem(order, std::vector<Rat>(cyclo(order).phi)); }

CycElem CycElem::one(long order) { return rational(order, Rat(1)); }

CycElem CycElem::rational(long order, const Rat& value) {
  CycElem out = zero(order);
  out.coeffs_[0] = value;
  return out;
}

CycElem CycElem::root_of_unity(long order, long k) {
  const Cyclo& c = cyclo(order);
  const long e = mod(k, order);
  if (e < c.phi) {
    CycElem out = zero(order);
    out.coeffs_[e] = 1;
    return out;
  }
  std::vector<Int> p(static_cast<std::size_t>(e) + 1);
  p[e] = 1;
  reduce(p, c);
  return CycElem(order, unscale(p, Int(1)));
}

CycElem CycElem::from_powers(long order, std::span<const Rat> powers) {
  const Cyclo& c = cyclo(order);
  const Int den = common_denominator(powers);
  std::vector<Int> p = scale(powers, den);
  reduce(p, c);
  return CycElem(order, unscale(p, den));
}

CycElem CycElem::from_coeffs(long order, std::vector<Rat> coeffs) {
  if (static_cast<long>(coeffs.size()) != cyclo(order).phi)
    throw std::invalid_argument("coefficient vector length must equal phi(" +
                                std::to_string(order) + ")");
  for (auto& q : coeffs) q.canonicalize();
  return CycElem(order, std::move(coeffs));
}

bool CycElem::is_zero() const {
  for (const auto& q : coeffs_)
    if (sgn(q) != 0) return false;
  return true;
}

std::optional<Rat> CycElem::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_[0];
}

CycElem& CycElem::operator+=(const CycElem& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator*=(const Rat& scalar) {
  for (auto& q : coeffs_)
    if (sgn(q) != 0) q *= scalar;
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& other) {
  require_same_order(*this, other);
  if (auto r = other.as_rational()) return *this *= *r;
  if (auto r = as_rational()) {
    Rat s = *r;
    *this = other;
    return *this *= s;
  }
  const Cyclo& c = cyclo(order_);
  const Int da = common_denominator(coeffs_);
  const Int db = common_denominator(other.coeffs_);
  const std::vector<Int> a = scale(coeffs_, da);
  const std::vector<Int> b = scale(other.coeffs_, db);
  std::vector<Int> p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) mpz_addmul(p[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  reduce(p, c);
  coeffs_ = unscale(p, da * db);
  return *this;
}

CycElem operator-(const CycElem& a) {
  CycElem out = a;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

CycElem add(const CycElem& a, const CycElem& b) {
  coverage::touch(Op::add);
  return a + b;
}

CycElem sub(const CycElem& a, const CycElem& b) {
  coverage::touch(Op::sub);
  return a - b;
}

CycElem mul(const CycElem& a, const CycElem& b) {
  coverage::touch(Op::mul);
  return a * b;
}

CycElem neg(const CycElem& a) {
  coverage::touch(Op::neg);
  return -a;
}

CycElem pow(const CycElem& a, unsigned exponent) {
  CycElem result = CycElem::one(a.order());
  CycElem base = a;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycElem detail::inverse_rational_euclid(const CycElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (auto r = a.as_rational()) return CycElem::rational(a.order(), 1 / *r);

  // Invariant: s_i * a == r_i (mod Phi_N).
  const Cyclo& c = cyclo(a.order());
  QPoly r0(c.poly.begin(), c.poly.end());
  QPoly r1 = a.coeffs();
  trim(r1);
  QPoly s0;
  QPoly s1{Rat(1)};
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly q = divmod(rem, r1);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    // Keep r1 monic so coefficient growth stays tame.
    if (!r1.empty()) {
      Rat lead_inv = 1 / r1.back();
      for (auto& x : r1) x *= lead_inv;
      for (auto& x : s1) x *= lead_inv;
    }
  }
  if (r1.empty()) throw std::logic_error("inverse: element shares a factor with Phi_N");
  const Rat scale_inv = 1 / r1[0];
  for (auto& x : s1) x *= scale_inv;
  return CycElem::from_powers(a.order(), s1);
}

std::optional<CycElem> detail::inverse_multimodular(const CycElem& a, int max_primes) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (auto r = a.as_rational()) return CycElem::rational(a.order(), 1 / *r);
  const Cyclo& c = cyclo(a.order());
  const Int den = common_denominator(a.coeffs());
  const std::vector<Int> num = scale(a.coeffs(), den);
  const CycElem one = CycElem::one(a.order());

  // inverse(a) = den * inverse(num); num^-1 is recovered from its images mod p.
  std::vector<Int> crt(static_cast<std::size_t>(c.phi));
  Int modulus = 1;
  Int p = Int(1) << 62;
  for (int used = 0; used < max_primes;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const std::uint64_t q = p.get_ui();
    auto image = inverse_mod_prime(num, c, q);
    if (!image) continue;  // unlucky prime
    ++used;
    // Combine: x = crt + modulus * ((image - crt) * modulus^-1 mod q)
    Int m_inv;
    Int qz(p);
    mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), qz.get_mpz_t());
    for (long i = 0; i < c.phi; ++i) {
      Int diff = Int(static_cast<unsigned long>((*image)[i])) - crt[i];
      diff = diff * m_inv;
      mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), qz.get_mpz_t());
      crt[i] += modulus * diff;
    }
    modulus *= qz;

    std::vector<Rat> coeffs(static_cast<std::size_t>(c.phi));
    bool ok = true;
    for (long i = 0; i < c.phi && ok; ++i) {
      auto rr = rational_reconstruct(crt[i], modulus);
      if (!rr) ok = false;
      else coeffs[i] = *rr * Rat(den);
    }
    if (!ok) continue;
    CycElem candidate = CycElem::from_coeffs(a.order(), std::move(coeffs));
    if (candidate * a == one) return candidate;
  }
  return std::nullopt;
}

CycElem inverse(const CycElem& a) {
  coverage::touch(Op::inverse);
  if (a.degree() > detail::kModularInverseDegree) {
    if (auto inv = detail::inverse_multimodular(a)) return *inv;
  }
  return detail::inverse_rational_euclid(a);
}

CycElem galois(const CycElem& a, long k) {
  coverage::touch(Op::galois);
  const long n = a.order();
  if (std::gcd(mod(k, n), n) != 1)
    throw std::invalid_argument("galois: k=" + std::to_string(k) + " not coprime to " +
                                std::to_string(n));
  const long kk = mod(k, n);
  if (kk == 1 % n) return a;
  std::vector<Rat> powers(static_cast<std::size_t>(n));
  for (long i = 0; i < a.degree(); ++i)
    if (sgn(a.coeffs()[i]) != 0) powers[(i * kk) % n] = a.coeffs()[i];
  return CycElem::from_powers(n, powers);
}

CycElem embed(const CycElem& a, long target_order) {
  coverage::touch(Op::embed);
  const long n = a.order();
  if (target_order < 1 || target_order % n != 0)
    throw FieldMismatch("embed: " + std::to_string(n) + " does not divide " +
                        std::to_string(target_order));
  if (target_order == n) return a;
  const long step = target_order / n;
  std::vector<Rat> powers(static_cast<std::size_t>((a.degree() - 1) * step + 1));
  for (long i = 0; i < a.degree(); ++i) powers[i * step] = a.coeffs()[i];
  return CycElem::from_powers(target_order, powers);
}

std::optional<CycElem> descend(const CycElem& a, long target_order) {
  const long n = a.order();
  if (target_order < 1 || n % target_order != 0)
    throw FieldMismatch("descend: " + std::to_string(target_order) + " does not divide " +
                        std::to_string(n));
  if (target_order == n) return a;
  if (auto r = a.as_rational()) return CycElem::rational(target_order, *r);
  auto map = descent_map(target_order, n);
  const long ds = static_cast<long>(map->pivots.size());
  std::vector<Rat> y(ds);
  for (long i = 0; i < ds; ++i)
    for (long r = 0; r < ds; ++r) {
      const Rat& b = a.coeffs()[map->pivots[r]];
      if (sgn(b) != 0 && sgn(map->solve[i][r]) != 0) y[i] += map->solve[i][r] * b;
    }
  CycElem candidate = CycElem::from_coeffs(target_order, std::move(y));
  if (embed(candidate, n) != a) return std::nullopt;
  return candidate;
}

std::pair<CycElem, CycElem> to_common_field(const CycElem& a, const CycElem& b) {
  const long l = std::lcm(a.order(), b.order());
  return {embed(a, l), embed(b, l)};
}

CycElem conjugate(const CycElem& a) {
  coverage::touch(Op::conjugate);
  if (a.order() <= 2) return a;
  return galois(a, a.order() - 1);
}

std::complex<long double> complex_eval(const CycElem& a, int precision_bits) {
  coverage::touch(Op::complex_eval);
  if (precision_bits <= 53) return evaluate<double>(a);
  if (precision_bits <= 64) return evaluate<long double>(a);
  throw std::invalid_argument("complex_eval supports at most 64 bits of precision");
}

long double complex_eval_error_bound(const CycElem& a, int precision_bits) {
  const int p = precision_bits <= 53 ? 53 : 64;
  long double l1 = 0;
  for (const auto& q : a.coeffs()) l1 += std::fabs(to_long_double(q));
  return static_cast<long double>(a.degree() + 4) * std::ldexp(1.0L, 1 - p) * l1;
}

std::ostream& operator<<(std::ostream& os, const CycElem& a) {
  os << "Q(zeta_" << a.order() << "): ";
  bool first = true;
  for (long i = 0; i < a.degree(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat mag = abs(c);
    if (i == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os;
}

}  // namespace cotcoord
