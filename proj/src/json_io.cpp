#include "pknuth/json_io.hpp"

namespace pknuth {

using nlohmann::json;

json order_to_json(const UnitIntervalOrder& o) {
  return json{{"n", o.n()}, {"lambda", o.shape().parts()}};
}

UnitIntervalOrder order_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("lambda"))
    throw std::invalid_argument("order JSON needs \"n\" and \"lambda\"");
  std::vector<int> parts = j.at("lambda").get<std::vector<int>>();
  return UnitIntervalOrder::from_partition(Partition(std::move(parts)),
                                           j.at("n").get<int>());
}

json tableau_to_json(const Tableau& t) {
  return json{{"columns", t.columns}};
}

Tableau tableau_from_json(const json& j) {
  Tableau t;
  t.columns = j.at("columns").get<std::vector<std::vector<int>>>();
  return t;
}

json word_to_json(const Word& w) {
  json arr = json::array();
  for (int v : w) {
    if (v == kInf)
      arr.push_back("inf");
    else
      arr.push_back(v);
  }
  return arr;
}

json graph_to_json(const KnuthGraph& g) {
  json vertices = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i)
    vertices.push_back(json{{"word", g.vertices[i]}, {"des", g.sigma[i]}});
  json edges = json::array();
  for (const auto& [color, pairs] : g.edges)
    for (auto [u, v] : pairs)
      edges.push_back(json{{"color", color}, {"u", u}, {"v", v}});
  return json{{"schema_version", kSchemaVersion},
              {"n", g.n},
              {"vertices", vertices},
              {"edges", edges}};
}

json qsym_to_json(const QSym& q) {
  json terms = json::object();
  for (const auto& [comp, poly] : q.terms()) {
    std::string key;
    for (size_t i = 0; i < comp.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(comp[i]);
    }
    terms[key] = poly.coeffs();
  }
  return json{{"schema_version", kSchemaVersion}, {"n", q.n()}, {"fundamental", terms}};
}

json schur_to_json(const SchurExpansion& e) {
  json terms = json::object();
  for (const auto& [la, poly] : e.coeffs) {
    std::string key;
    const auto& parts = la.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(parts[i]);
    }
    terms[key] = poly.coeffs();
  }
  return json{{"schema_version", kSchemaVersion}, {"n", e.n}, {"t_power_terms", terms}};
}

json prs_to_json(const PrsResult& r) {
  return json{{"schema_version", kSchemaVersion},
              {"pt", r.pt_columns},
              {"qt", r.qt_columns},
              {"pt_valid", r.pt_valid},
              {"qt_valid", r.qt_valid}};
}

}  // namespace pknuth
