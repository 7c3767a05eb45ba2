#ifndef KNESERLAB_JSON_IO_HPP
#define KNESERLAB_JSON_IO_HPP

#include <json.hpp>

#include "kneserlab/defect.hpp"
#include "kneserlab/geometry.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/setsystem.hpp"
#include "kneserlab/topology.hpp"

namespace kneserlab {

using json = nlohmann::json;

// Ground-set elements and complex vertices are 1-based in JSON;
// hypergraph vertex indices are 0-based (they index the vertex list).

json to_json(const SetSystem& F);
SetSystem setsystem_from_json(const json& j);

json to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const Coloring& col);
Coloring coloring_from_json(const json& j);

json to_json(const PointConfig& cfg);
PointConfig pointconfig_from_json(const json& j);

json to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const json& j);

json to_json(const BettiVector& bv);

json to_json(const DefectWitness& w);

} // namespace kneserlab

#endif
