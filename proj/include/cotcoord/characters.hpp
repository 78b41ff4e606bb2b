#pragma once

/**
 * Dirichlet characters mod n.
 *
 * (Z/n)* is split by CRT into cyclic components with fixed generators:
 *   - odd p^a: the smallest primitive root mod p^a;
 *   - 4: the generator 3;
 *   - 2^a, a >= 3: the pair (-1, 5), in that order;
 *   - 2 contributes nothing (the trivial group).
 * Components are ordered by prime. A character is the vector of exponents e_i
 * with chi(g_i) = zeta_{o_i}^{e_i}, o_i the component order. Its index is the
 * lexicographic (mixed-radix, first component most significant) rank of that
 * vector, so index 0 is always the principal character.
 */

#include "cotcoord/cyclotomic.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace cotcoord {

class DirichletCharacter;

struct CrtComponent {
  long prime_power;  // the modulus q of this CRT factor
  long generator;    // generator residue mod q
  long order;        // order of the generator
};

class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
 public:
  /// Shared, memoized group for modulus >= 1 (modulus 1 is the trivial group).
  static std::shared_ptr<const CharacterGroup> of(long modulus);

  long modulus() const { return modulus_; }
  long phi() const { return phi_; }
  /// Exponent of the group: lcm of the component orders.
  long exponent() const { return exponent_; }
  const std::vector<CrtComponent>& components() const { return components_; }

  /// Discrete-log vector of k, or nullptr when gcd(k, n) > 1.
  const std::vector<long>* logs(long k) const;

  std::size_t size() const { return static_cast<std::size_t>(phi_); }
  DirichletCharacter character(std::size_t index) const;
  DirichletCharacter character(std::vector<long> exponents) const;
  std::size_t index_of(const std::vector<long>& exponents) const;

  explicit CharacterGroup(long modulus);

 private:
  long modulus_;
  long phi_;
  long exponent_ = 1;
  std::vector<CrtComponent> components_;
  std::vector<std::optional<std::vector<long>>> log_table_;
};

class DirichletCharacter {
 public:
  long modulus() const { return group_->modulus(); }
  const CharacterGroup& group() const { return *group_; }
  const std::vector<long>& exponents() const { return exponents_; }
  std::size_t index() const { return group_->index_of(exponents_); }
  /// Multiplicative order m; values lie in Q(zeta_m).
  long order() const { return order_; }
  bool is_principal() const { return order_ == 1; }

  /// t with chi(k) = zeta_m^t (0 <= t < m), or nullopt when gcd(k, n) > 1.
  std::optional<long> value_exponent(long k) const;

  /// The conjugate character, realized by negating the exponent vector.
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  friend class CharacterGroup;
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<long> exponents);

  std::shared_ptr<const CharacterGroup> group_;
  std::vector<long> exponents_;
  long order_ = 1;
};

/// All phi(n) characters mod n in index order. Throws for n < 2.
std::vector<DirichletCharacter> enumerate(long n);

/// Character mod n by index; throws std::out_of_range on a bad index.
DirichletCharacter character(long n, std::size_t index);

/// chi(k) in Q(zeta_m); exact zero when gcd(k, n) > 1.
CycElem eval(const DirichletCharacter& chi, long k);

/// chi(-1) as +1 or -1.
int parity(const DirichletCharacter& chi);

/// Smallest f | n with chi(k) = 1 for all units k = 1 (mod f).
long conductor(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

/// The primitive character mod conductor(chi) inducing chi.
DirichletCharacter primitive_part(const DirichletCharacter& chi);

/// tau(chi) = sum_{k=1}^{f} chi(k) zeta_f^k in Q(zeta_lcm(f, m)).
/// Throws std::invalid_argument unless chi is primitive.
CycElem gauss_sum(const DirichletCharacter& chi);

}  // namespace cotcoord
