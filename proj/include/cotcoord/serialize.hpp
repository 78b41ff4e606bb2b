#pragma once

// JSON encodings. A CycElem is {"order": N, "coeffs": ["p/q", ...]} with
// exactly phi(N) lowest-terms coefficients in ascending powers of zeta_N.

#include "cotcoord/characters.hpp"
#include "cotcoord/cyclotomic.hpp"

#include <json.hpp>

#include <complex>

namespace cotcoord {

nlohmann::json to_json(const CycElem& a);

/// Throws std::invalid_argument on a malformed document.
CycElem cycelem_from_json(const nlohmann::json& j);

/// {"modulus", "index", "exponents", "order", "conductor", "parity"}
nlohmann::json to_json(const DirichletCharacter& chi);

/// {"re": x, "im": y}
nlohmann::json to_json(std::complex<long double> z);

}  // namespace cotcoord
