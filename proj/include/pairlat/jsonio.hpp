#pragma once

#include <json.hpp>

#include "pairlat/hyperbolic.hpp"
#include "pairlat/moduli.hpp"
#include "pairlat/tables.hpp"
#include "pairlat/walls.hpp"

namespace pairlat {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);                 // "p/q" string
json to_json(const Monomial& m);            // [a, b, c]
json to_json(const Configuration& cfg);
json to_json(const StabilityInterval& iv);
json to_json(const WallReport& rep);
json to_json(const GramLattice& L);
json to_json(const FiniteQuadraticForm& f);
json to_json(const RootSystemReport& r);
json to_json(const CoxeterDiagram& d);  // adjacency list with edge labels
json to_json(const IsotropicClass& c);
json to_json(const OccursResult& r);
json to_json(const RowResult& r);

Configuration configuration_from_json(const json& j);
// pair files: {"d": .., "curve": [[a,b,c]..], "line": "x0"}
struct PairInput {
    int d;
    std::vector<Monomial> curve;
    int line;
};
PairInput pair_from_json(const json& j);
GramLattice gram_from_json(const json& j);  // [[..],[..]] integer matrix

}  // namespace pairlat
