#pragma once

#include <json.hpp>

#include "vvmf/conformal.hpp"
#include "vvmf/scan.hpp"

namespace vvmf {

using Json = nlohmann::json;

// {"lead_exp":"p/q","step":"p/q","prefactor":{"base":...,"exp":"p/q"}|null,
//  "coeffs":["num/den",...]} -- exact rational strings, zeros padded to the
// horizon so validity round-trips.
Json series_to_json(const RationalSeries& s,
                    const std::optional<Prefactor>& prefactor = std::nullopt);
RationalSeries series_from_json(const Json& j, std::optional<Prefactor>* prefactor = nullptr);

// {"degree":d,"P":[["c0","c1",...],...]} with P[j] the K-polynomial on theta^j.
Json theta_ode_to_json(const ThetaOde<Rational>& ode);
ThetaOde<Rational> theta_ode_from_json(const Json& j);

// {"degree":d,"coeffs":[{"scalar":"p/q","monomial":"E4^i*E6^j","order":n},...]}
Json monic_mlde_to_json(const MonicMlde& mlde);

// Series schema per coordinate plus {"exponents":[...],"rescale":[...]}.
Json expansion_to_json(const CharacterVectorExpansion& x);
CharacterVectorExpansion expansion_from_json(const Json& j);

// {"d":n,"entries":[["decimal",...],...]}
Json smatrix_to_json(const SMatrix& s, int digits = 40);
SMatrix smatrix_from_json(const Json& j, mpfr_prec_t prec = BigFloat::kDefaultPrecision);

Json report_to_json(const ConformalReport& rep);

Json candidate_to_json(const CharacterCandidate& c);
Json line_candidate_to_json(const LineCandidate& c);

}  // namespace vvmf
