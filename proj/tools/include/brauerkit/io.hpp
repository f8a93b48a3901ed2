#pragma once

// JSON documents for fields, places, Brauer classes, algebras, maps and
// Frobenius data. Big integers are written as decimal strings; readers
// accept strings or JSON integers. Schema violations throw MalformedInput.

#include <json.hpp>

#include "brauerkit/honda_tate.hpp"

namespace brauerkit::io {

using json = nlohmann::json;

Integer integer_from_json(const json& j);
json to_json(const Integer& v);
Rational rational_from_json(const json& j);
json to_json(const Rational& v);

ZPoly zpoly_from_json(const json& j);
json to_json(const ZPoly& f);
QPoly qpoly_from_json(const json& j);
json to_json(const QPoly& f);

NumberField field_from_json(const json& j);
json to_json(const NumberField& k);

/// Finite places are named by {"p", "factor"} or {"p", "index"}; the factor
/// is the residue polynomial of the place, as printed by `field info`.
Place place_from_json(const json& j, const NumberField& k);
json to_json(const Place& v);

BrauerClass class_from_json(const json& j);
json to_json(const BrauerClass& c);

CentralSimpleAlgebra algebra_from_json(const json& j);
json to_json(const CentralSimpleAlgebra& a);

/// {"source": field, "target": field, "image": [...]}; a missing source means Q.
SubfieldMap map_from_json(const json& j);
json to_json(const SubfieldMap& m);

PrimePower prime_power_from_json(const json& j);
json to_json(const PrimePower& q);
WeilNumber weil_from_json(const json& j);
json to_json(const WeilNumber& w);

json to_json(const Compositum& c);
json to_json(const EmbeddingVerdict& v);
json to_json(const CandidateVerdict& v);
json to_json(const EmbedDecision& d);
json to_json(const PrimeSubalgebra& s);
json to_json(const IsogenyClassInvariants& inv);
json to_json(const ObstructionReport& r);
json to_json(const QmSurfaceReport& r);
json to_json(const NewtonPolygon& np);

/// Field summary: degree, signature and places above the given primes.
json field_info(const NumberField& k, const std::vector<u64>& primes);

}  // namespace brauerkit::io
