/**
 * Machine-readable formats. Cyclotomic entries render as canonical
 * coefficient-list strings ("[1, 1]" is 1+q at N=3, rationals in lowest
 * terms); keys keep insertion order so identical inputs serialize to
 * identical bytes.
 */

#pragma once

#include "qhom/affine.hpp"
#include "qhom/ncomplex.hpp"
#include "qhom/pairs.hpp"
#include "qhom/simplicial.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qhom {

using Json = nlohmann::ordered_json;

// {"N":5,"lo":0,"hi":4,"ranks":[...],"borders":{"1":[[...]],...}}
Json complex_to_json(const GradedNComplex& c);
GradedNComplex complex_from_json(const Json& j);

// {"cells":{"0":["v0","v1"],"1":["e"]},"faces":{"1":{"e":["v1","v0"]}}}
// plus an optional "subcomplex": ["v0", ...].
Json simplicial_to_json(const SemiSimplicialSet& x);
SemiSimplicialSet simplicial_from_json(const Json& j);
std::optional<std::vector<std::string>> subcomplex_ids_from_json(const Json& j);

// {"d":2,"degree":1,"terms":[{"coeff":"[1,0]","vertices":[["0","0"],["1/2","1"]]}]}
Json affine_chain_to_json(const AffineChain& c);
AffineChain affine_chain_from_json(long order, const Json& j);

Json homology_report_to_json(const AmplitudeHomologyReport& rep);
Json coefficient_table_to_json(const CoefficientTable& t);

}  // namespace qhom
