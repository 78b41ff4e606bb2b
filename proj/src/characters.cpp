#include "cotcoord/characters.hpp"

#include "cotcoord/arith.hpp"
#include "cotcoord/coverage.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cotcoord {

namespace {

using coverage::Op;

long multiplicative_order(long g, long q) {
  long x = mod(g, q);
  long k = 1;
  while (x != 1 % q) {
    x = x * g % q;
    ++k;
  }
  return k;
}

long smallest_primitive_root(long q) {
  const long phi = euler_phi(q);
  for (long g = 2; g < q; ++g)
    if (std::gcd(g, q) == 1 && multiplicative_order(g, q) == phi) return g;
  throw std::logic_error("no primitive root mod " + std::to_string(q));
}

std::mutex g_groups_mutex;
std::map<long, std::shared_ptr<const CharacterGroup>> g_groups;

}  // namespace

CharacterGroup::CharacterGroup(long modulus) : modulus_(modulus), phi_(euler_phi(modulus)) {
  if (modulus < 1) throw std::invalid_argument("character modulus must be positive");

  // Per-component discrete logs, indexed by residue mod the prime power.
  struct Factor {
    long q;
    std::size_t first;                      // first component index
    std::vector<std::vector<long>> logs;    // residue mod q -> logs (empty: non-unit)
  };
  std::vector<Factor> factors;

  for (const auto& pp : factorize(modulus)) {
    const long q = pp.value;
    Factor f{q, components_.size(), std::vector<std::vector<long>>(static_cast<std::size_t>(q))};
    if (pp.prime == 2 && pp.exponent == 1) {
      f.logs[1] = {};
    } else if (pp.prime == 2 && pp.exponent == 2) {
      components_.push_back({4, 3, 2});
      f.logs[1] = {0};
      f.logs[3] = {1};
    } else if (pp.prime == 2) {
      const long o5 = q / 4;
      components_.push_back({q, q - 1, 2});
      components_.push_back({q, 5, o5});
      long sign = 1;
      for (long s = 0; s < 2; ++s) {
        long x = sign;
        for (long l = 0; l < o5; ++l) {
          f.logs[mod(x, q)] = {s, l};
          x = x * 5 % q;
        }
        sign = q - 1;
      }
    } else {
      const long g = smallest_primitive_root(q);
      const long o = euler_phi(q);
      components_.push_back({q, g, o});
      long x = 1;
      for (long l = 0; l < o; ++l) {
        f.logs[x] = {l};
        x = x * g % q;
      }
    }
    factors.push_back(std::move(f));
  }
  for (const auto& c : components_) exponent_ = std::lcm(exponent_, c.order);

  log_table_.resize(static_cast<std::size_t>(modulus));
  for (long k = 0; k < modulus; ++k) {
    if (std::gcd(k, modulus) != 1) continue;
    std::vector<long> logs;
    for (const auto& f : factors) {
      const auto& part = f.logs[k % f.q];
      logs.insert(logs.end(), part.begin(), part.end());
    }
    log_table_[k] = std::move(logs);
  }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::of(long modulus) {
  std::lock_guard lock(g_groups_mutex);
  auto it = g_groups.find(modulus);
  if (it != g_groups.end()) return it->second;
  auto g = std::make_shared<const CharacterGroup>(modulus);
  g_groups.emplace(modulus, g);
  return g;
}

const std::vector<long>* CharacterGroup::logs(long k) const {
  const auto& entry = log_table_[mod(k, modulus_)];
  return entry ? &*entry : nullptr;
}

std::size_t CharacterGroup::index_of(const std::vector<long>& exponents) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < components_.size(); ++i)
    index = index * components_[i].order + exponents[i];
  return index;
}

DirichletCharacter CharacterGroup::character(std::size_t index) const {
  if (index >= size())
    throw std::out_of_range("character index " + std::to_string(index) + " out of range for modulus " +
                            std::to_string(modulus_) + " (phi = " + std::to_string(phi_) + ")");
  std::vector<long> exps(components_.size());
  for (std::size_t i = components_.size(); i-- > 0;) {
    exps[i] = static_cast<long>(index % components_[i].order);
    index /= components_[i].order;
  }
  return character(std::move(exps));
}

DirichletCharacter CharacterGroup::character(std::vector<long> exponents) const {
  if (exponents.size() != components_.size())
    throw std::invalid_argument("exponent vector has the wrong length");
  for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] = mod(exponents[i], components_[i].order);
  return DirichletCharacter(shared_from_this(), std::move(exponents));
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                                       std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& comps = group_->components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    order_ = std::lcm(order_, comps[i].order / std::gcd(exponents_[i], comps[i].order));
}

std::optional<long> DirichletCharacter::value_exponent(long k) const {
  const auto* logs = group_->logs(k);
  if (!logs) return std::nullopt;
  const long e = group_->exponent();
  const auto& comps = group_->components();
  long t = 0;
  for (std::size_t i = 0; i < comps.size(); ++i)
    t = (t + exponents_[i] * (*logs)[i] % comps[i].order * (e / comps[i].order)) % e;
  // chi(k) = zeta_e^t, and t is a multiple of e/m.
  return t / (e / order_);
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<long> neg(exponents_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -exponents_[i];
  return group_->character(std::move(neg));
}

std::vector<DirichletCharacter> enumerate(long n) {
  coverage::touch(Op::enumerate);
  if (n < 2) throw std::invalid_argument("enumerate: modulus must be at least 2");
  auto g = CharacterGroup::of(n);
  std::vector<DirichletCharacter> out;
  out.reserve(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) out.push_back(g->character(i));
  return out;
}

DirichletCharacter character(long n, std::size_t index) {
  if (n < 1) throw std::invalid_argument("character modulus must be positive");
  return CharacterGroup::of(n)->character(index);
}

CycElem eval(const DirichletCharacter& chi, long k) {
  coverage::touch(Op::eval);
  auto t = chi.value_exponent(k);
  if (!t) return CycElem::zero(chi.order());
  return CycElem::root_of_unity(chi.order(), *t);
}

int parity(const DirichletCharacter& chi) {
  coverage::touch(Op::parity);
  const long t = *chi.value_exponent(-1);
  return t == 0 ? 1 : -1;
}

long conductor(const DirichletCharacter& chi) {
  coverage::touch(Op::conductor);
  const long n = chi.modulus();
  if (chi.is_principal()) return 1;
  for (long f : divisors(n)) {
    bool kernel = true;
    for (long k = 1 % f; k < n && kernel; k += f) {
      auto t = chi.value_exponent(k);
      if (t && *t != 0) kernel = false;
    }
    if (kernel) return f;
  }
  return n;
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus(); }

DirichletCharacter primitive_part(const DirichletCharacter& chi) {
  coverage::touch(Op::primitive_part);
  const long n = chi.modulus();
  const long f = conductor(chi);
  if (f == n) return chi;
  auto gf = CharacterGroup::of(f);
  const auto& comps = gf->components();
  const long m = chi.order();
  std::vector<long> exps(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    // A residue mod f that is the i-th generator and trivial elsewhere.
    long x = -1;
    for (long r = 0; r < f && x < 0; ++r) {
      const auto* l = gf->logs(r);
      if (!l) continue;
      bool unit_vector = true;
      for (std::size_t j = 0; j < l->size(); ++j) unit_vector &= (*l)[j] == (j == i ? 1 : 0);
      if (unit_vector) x = r;
    }
    long lift = x;
    while (std::gcd(lift, n) != 1) lift += f;
    const long t = *chi.value_exponent(lift);
    if ((t * comps[i].order) % m != 0)
      throw std::logic_error("primitive_part: value is not a root of the component order");
    exps[i] = t * comps[i].order / m;
  }
  return gf->character(std::move(exps));
}

CycElem gauss_sum(const DirichletCharacter& chi) {
  coverage::touch(Op::gauss_sum);
  const long f = chi.modulus();
  if (!is_primitive(chi))
    throw std::invalid_argument("gauss_sum: character mod " + std::to_string(f) + " is not primitive");
  const long m = chi.order();
  const long l = std::lcm(f, m);
  std::vector<Rat> powers(static_cast<std::size_t>(l));
  for (long k = 1; k <= f; ++k) {
    auto t = chi.value_exponent(k);
    if (!t) continue;
    powers[(*t * (l / m) + k * (l / f)) % l] += 1;
  }
  return CycElem::from_powers(l, powers);
}

}  // namespace cotcoord
