#include "weid/io.hpp"

#include <fstream>

namespace weid {

using nlohmann::json;

json ideal_to_json(const MonomialIdeal& I) {
  json j;
  j["variables"] = I.ring()->names();
  json gens = json::array();
  for (const auto& g : I.gens()) {
    json m = json::object();
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (g.exp(i)) m[I.ring()->name(i)] = g.exp(i);
    gens.push_back(std::move(m));
  }
  j["generators"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw DomainError("ideal JSON needs \"variables\" and \"generators\"");
  std::vector<std::string> names;
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw DomainError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  auto ring = make_ring(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& gj : j.at("generators")) {
    if (!gj.is_object()) throw DomainError("each generator must be an object of exponents");
    std::vector<std::pair<std::size_t, Exp>> pairs;
    for (auto it = gj.begin(); it != gj.end(); ++it) {
      if (!it.value().is_number_unsigned())
        throw DomainError("exponent of " + it.key() + " must be a nonnegative integer");
      Exp e = it.value().get<Exp>();
      if (e) pairs.push_back({ring->index_of(it.key()), e});
    }
    gens.push_back(Monomial::from_pairs(ring->size(), pairs));
  }
  return MonomialIdeal::make(std::move(ring), std::move(gens));
}

json graph_to_json(const WeightedGraph& g) {
  json j;
  j["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"w", e.w}});
  j["edges"] = std::move(edges);
  return j;
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw DomainError("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<std::string> labels;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw DomainError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  Ring lookup(labels);  // validates uniqueness, gives index lookup
  std::vector<WeightedGraph::Edge> edges;
  for (const auto& ej : j.at("edges")) {
    if (!ej.is_object() || !ej.contains("u") || !ej.contains("v"))
      throw DomainError("each edge needs \"u\" and \"v\"");
    Exp w = 1;
    if (ej.contains("w")) {
      if (!ej.at("w").is_number_unsigned() || ej.at("w").get<Exp>() == 0)
        throw DomainError("edge weight must be a positive integer");
      w = ej.at("w").get<Exp>();
    }
    edges.push_back({lookup.index_of(ej.at("u").get<std::string>()),
                     lookup.index_of(ej.at("v").get<std::string>()), w});
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

namespace {
json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  in >> j;
  return j;
}
}  // namespace

MonomialIdeal load_ideal_file(const std::string& path) { return ideal_from_json(load_json_file(path)); }
WeightedGraph load_graph_file(const std::string& path) { return graph_from_json(load_json_file(path)); }

}  // namespace weid
