#pragma once

#include <string>

#include "json.hpp"  // vendored nlohmann/json
#include "orderscope/approx.hpp"
#include "orderscope/covers.hpp"
#include "orderscope/poset.hpp"
#include "orderscope/realization.hpp"

namespace osc {

using Json = nlohmann::json;

// Posets and preposets: {"elements":["a","b"],"relations":[["a","b"]]}.
// Elements may also be two-element arrays ["lo","hi"], which read as the
// interval label "[lo,hi]".
Json preposet_to_json(const Preposet& p);
Json poset_to_json(const Poset& p);  // relations = covering pairs
Preposet preposet_from_json(const Json& j);
Poset poset_from_json(const Json& j);

// Subdivision posets write their interval elements as ["lo","hi"] pairs.
Json subdivision_to_json(const Subdivision& s);

// Maps: {"source":{...},"target":{...},"assign":{"a":"x"}}.
Json map_to_json(const MonotoneMap& f);
MonotoneMap map_from_json(const Json& j);

// RPoint: {"chain":["a","b"],"weights":["1/2","1/2"]}.
Json rpoint_to_json(const RPoint& x);
RPoint rpoint_from_json(const Json& j, BasePtr base);

// Sparse vectors: {"a":"1","b":"1/2"}.
Json vector_to_json(const Poset& base, const std::vector<Rat>& v);
std::vector<Rat> vector_from_json(const Json& j, const Poset& base);

// Cover: {"ground":["x","y"],"sets":{"U1":["x"],"U2":["x","y"]}}.
Json cover_to_json(const Cover& c);
Cover cover_from_json(const Json& j, std::optional<FiniteMetric> metric = std::nullopt);

// FiniteMetric: {"points":[...],"d":[["0","1"],["1","0"]]}.
Json metric_to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const Json& j);

// SampledMap: {"domain":<metric>,"gamma":"1/8","delta":"1/16",
//              "codomain":<poset>,"values":{"x1":<rpoint>}}.
Json sampled_map_to_json(const SampledMap& f);
SampledMap sampled_map_from_json(const Json& j);

// Tower spec: {"space":<metric>,"covers":[{"U1":["x"],...},...]}.
struct TowerSpec {
  FiniteMetric space;
  std::vector<Cover> covers;
};
TowerSpec tower_spec_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace osc
