#pragma once

#include <json.hpp>

#include "mutwb/cluster/quiver.hpp"
#include "mutwb/cluster/seed.hpp"
#include "mutwb/exchange/exchange.hpp"
#include "mutwb/laurent/map.hpp"
#include "mutwb/local/local_system.hpp"
#include "mutwb/q0/rep.hpp"
#include "mutwb/torus/curves.hpp"

namespace mutwb::io {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
// Rationals are always "p/q" strings. Readers accept either form and throw Parse errors.

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json config_to_json(const GeodesicConfig& c);
GeodesicConfig config_from_json(const Json& j);

Json ledger_to_json(const IntersectionLedger& l);
IntersectionLedger ledger_from_json(const Json& j);

Json character_to_json(const Character& c);
Character character_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json pair_to_json(const CommutingPair& p);
CommutingPair pair_from_json(const Json& j);

Json q0_to_json(const Q0Rep& r);
Q0Rep q0_from_json(const Json& j);

/// Rendered images, one per coordinate.
Json map_to_json(const RationalMap& m);
RationalMap map_from_json(const Json& j, std::size_t rank);

/// {vertices: [{key, depth, vectors, xvars, word}], edges: [[key, k, key]], ...}; k is 1-based.
Json graph_to_json(const ExchangeGraph& g);

/// Reads a JSON document from text; throws Parse on malformed input.
Json parse(const std::string& text);

}  // namespace mutwb::io
