#include "plumbline/json_io.hpp"

#include "plumbline/error.hpp"

namespace plumbline {

Json rational_json(const Q& q) { return to_string(q); }

Q rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_q(j.get<long long>());
  throw DomainError("ParseError", "expected a rational as a \"p/q\" string, got " + j.dump());
}

Json cycle_json(const ResolutionGraph& g, const RatCycle& x) {
  Json j = Json::object();
  for (int v = 0; v < g.size(); ++v) j[g.id(v)] = rational_json(x[v]);
  return j;
}

Json cycle_json(const ResolutionGraph& g, const IntCycle& x) { return cycle_json(g, to_rat(x)); }

RatCycle cycle_from_json(const ResolutionGraph& g, const Json& j) {
  if (!j.is_object()) throw DomainError("ParseError", "a cycle must be a JSON object keyed by vertex id");
  RatCycle r(g.size(), Q(0));
  std::vector<bool> seen(g.size(), false);
  for (const auto& [key, value] : j.items()) {
    int v = g.index_of(key);
    r[v] = rational_from_json(value);
    seen[v] = true;
  }
  for (int v = 0; v < g.size(); ++v)
    if (!seen[v]) throw DomainError("ParseError", "cycle has no entry for vertex '" + g.id(v) + "'");
  return r;
}

Json matrix_json(const Matrix<long long>& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

Json graph_json(const ResolutionGraph& g) {
  Json j;
  j["vertices"] = g.ids();
  Json euler = Json::object();
  for (int v = 0; v < g.size(); ++v) euler[g.id(v)] = g.euler(v);
  j["euler"] = euler;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.id(a), g.id(b)});
  j["edges"] = edges;
  j["matrix"] = matrix_json(g.intersection_matrix());
  j["det"] = to_string(g.det());
  return j;
}

ResolutionGraph graph_from_json(const Json& j) {
  try {
    std::vector<std::string> ids = j.at("vertices").get<std::vector<std::string>>();
    std::vector<long long> euler;
    for (const auto& id : ids) euler.push_back(j.at("euler").at(id).get<long long>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return ResolutionGraph(ids, euler, edges);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("ParseError", std::string("malformed graph JSON: ") + e.what());
  }
}

Json seifert_json(const SeifertData& sd) {
  Json j;
  j["b0"] = sd.b0;
  Json legs = Json::array();
  for (const auto& l : sd.legs) legs.push_back({l.alpha, l.omega});
  j["legs"] = legs;
  j["text"] = format_seifert(sd);
  return j;
}

Json minimization_json(const ResolutionGraph& g, const MinimizationResult& r) {
  Json j;
  j["min_value"] = rational_json(r.min_value);
  j["minimal_minimizer"] = cycle_json(g, r.minimal_minimizer);
  j["minimizer_count"] = to_string(r.minimizer_count);
  j["search_bound"] = cycle_json(g, r.search_bound);
  return j;
}

}  // namespace plumbline
