// JSON encoding shared by the CLI and the tests: rationals are "p/q"
// strings, cycles are objects keyed by vertex id.  nlohmann::json objects
// keep their keys sorted, so dumps are deterministic.
#pragma once

#include "json.hpp"

#include "plumbline/graph.hpp"
#include "plumbline/lattice.hpp"
#include "plumbline/seifert.hpp"

namespace plumbline {

using Json = nlohmann::json;

Json rational_json(const Q& q);
Q rational_from_json(const Json& j);  // accepts "p/q" strings and JSON integers

Json cycle_json(const ResolutionGraph& g, const RatCycle& x);
Json cycle_json(const ResolutionGraph& g, const IntCycle& x);
RatCycle cycle_from_json(const ResolutionGraph& g, const Json& j);  // ParseError on unknown / missing ids

Json graph_json(const ResolutionGraph& g);  // vertices, euler, edges, matrix, det
ResolutionGraph graph_from_json(const Json& j);
Json matrix_json(const Matrix<long long>& m);

Json seifert_json(const SeifertData& sd);
Json minimization_json(const ResolutionGraph& g, const MinimizationResult& r);

}  // namespace plumbline
