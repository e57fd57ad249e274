#pragma once

// JSON serialization for ideals and weighted graphs.
//
// Ideal files:   {"variables": ["a","b","x","y"],
//                 "generators": [{"a":1,"b":1}, {"a":1,"x":1}, ...]}
// Zero exponents are never written; generators need not be minimal on input
// (they are minimalized on load).
//
// Graph files:   {"vertices": ["a","b","x","y"],
//                 "edges": [{"u":"a","v":"b","w":2}, ...]}
// "w" defaults to 1.

#include <json.hpp>

#include "weid/graph.hpp"
#include "weid/ideal.hpp"

namespace weid {

nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

MonomialIdeal load_ideal_file(const std::string& path);
WeightedGraph load_graph_file(const std::string& path);

}  // namespace weid
