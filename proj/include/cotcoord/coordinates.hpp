#pragma once

/**
 * Character coordinates y(chi | a) of a in Q(zeta_n), defined by
 *
 *   y(chi | a) * tau(conj(chi)_f) = sum_{1 <= k <= n, (k, n) = 1} conj(chi)(k) sigma_k(a),
 *
 * computed literally, and the closed forms for cotangent numbers and
 * cotangent powers that are checked against it.
 *
 * Closed-form conventions (settled against the definitional path):
 *   - the generalized Bernoulli number in the cotangent-number formula is
 *     B_{j, chi_f}, while the Euler factors use conj(chi)_f(p);
 *   - the primitive-character formula with d_{r,j} uses B_{j, chi};
 *   - the odd-r cotangent-power formula carries an explicit leading minus
 *     that absorbs chi(-1) = -1.
 * Every coordinate lies in Q(zeta_m), m the order of chi.
 */

#include "cotcoord/characters.hpp"
#include "cotcoord/cyclotomic.hpp"

#include <complex>
#include <span>
#include <string_view>

namespace cotcoord {

enum class Method { definitional, closed_28, theorem1, eq42, coord_one };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

/// Requires a.order() == chi.modulus(). Throws NotInSubfield if the quotient
/// fails to land in Q(zeta_m), which would indicate a bug.
CycElem coord_definitional(const DirichletCharacter& chi, const CycElem& a);

/// Closed form for y(chi | i^j cot_{j-1}(pi/n)); exact zero on parity mismatch.
CycElem coord_cotangent_closed(const DirichletCharacter& chi, long j);

/// y(chi | 1): phi(n) for the principal character, otherwise 0.
CycElem coord_one(const DirichletCharacter& chi);

/// Closed form for y(chi | i^r cot^r(pi/n)) through c_{r,j}; exact zero on parity mismatch.
CycElem coord_power_closed(const DirichletCharacter& chi, long r);

/// Closed form through d_{r,j}, for primitive chi only (std::invalid_argument
/// otherwise); exact zero on parity mismatch.
CycElem coord_power_eq42(const DirichletCharacter& chi, long r);

/// Inverts the coordinate map: coords[i] is the coordinate for the character
/// of index i mod n. Requires exactly phi(n) entries.
CycElem reconstruct(std::span<const CycElem> coords, long n);

/// All phi(n) coordinates of a, in character-index order.
std::vector<CycElem> all_coordinates(const CycElem& a);

/// sum_{k=1}^{n} chi(k) (i cot(pi k / n))^r by direct floating summation.
std::complex<long double> direct_sum_float(const DirichletCharacter& chi, long r, long n,
                                           int precision_bits = 53);

}  // namespace cotcoord
