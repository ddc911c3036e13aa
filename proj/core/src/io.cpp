#include "orderscope/io.hpp"

#include <fstream>

namespace osc {

namespace {

std::string element_from_entry(const Json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string())
    return "[" + e[0].get<std::string>() + "," + e[1].get<std::string>() + "]";
  fail(Errc::BadInput, "element entries must be strings or [lo,hi] pairs");
}

std::vector<std::string> elements_from_json(const Json& j) {
  if (!j.contains("elements") || !j["elements"].is_array())
    fail(Errc::BadInput, "missing 'elements' array");
  std::vector<std::string> out;
  for (const auto& e : j["elements"]) out.push_back(element_from_entry(e));
  return out;
}

std::vector<std::pair<std::string, std::string>> relations_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains("relations")) return out;
  for (const auto& r : j["relations"]) {
    if (!r.is_array() || r.size() != 2) fail(Errc::BadInput, "relations must be pairs");
    out.emplace_back(element_from_entry(r[0]), element_from_entry(r[1]));
  }
  return out;
}

}  // namespace

Json preposet_to_json(const Preposet& p) {
  Json j;
  j["elements"] = p.labels;
  Json rels = Json::array();
  for (const auto& [a, b] : edge_pairs(p)) rels.push_back(Json::array({a, b}));
  j["relations"] = rels;
  return j;
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels;
  Json rels = Json::array();
  for (const auto& [a, b] : hasse_pairs(p)) rels.push_back(Json::array({a, b}));
  j["relations"] = rels;
  return j;
}

Json subdivision_to_json(const Subdivision& s) {
  Json j;
  Json elements = Json::array();
  for (const auto& iv : s.iv)
    elements.push_back(Json::array({s.base->labels[iv.lo], s.base->labels[iv.hi]}));
  j["elements"] = elements;
  Json rels = Json::array();
  for (const auto& [a, b] : hasse_pairs(s.sub)) {
    int ia = s.sub.index_of(a), ib = s.sub.index_of(b);
    rels.push_back(Json::array({elements[ia], elements[ib]}));
  }
  j["relations"] = rels;
  return j;
}

Preposet preposet_from_json(const Json& j) {
  return validate_preposet(elements_from_json(j), relations_from_json(j));
}

Poset poset_from_json(const Json& j) {
  return validate_poset(elements_from_json(j), relations_from_json(j));
}

Json map_to_json(const MonotoneMap& f) {
  Json j;
  j["source"] = poset_to_json(f.source);
  j["target"] = poset_to_json(f.target);
  Json assign = Json::object();
  for (int i = 0; i < f.source.n(); ++i)
    assign[f.source.labels[i]] = f.target.labels[f.assign[i]];
  j["assign"] = assign;
  return j;
}

MonotoneMap map_from_json(const Json& j) {
  if (!j.contains("source") || !j.contains("target") || !j.contains("assign"))
    fail(Errc::BadInput, "map needs 'source', 'target' and 'assign'");
  Poset src = poset_from_json(j["source"]);
  Poset tgt = poset_from_json(j["target"]);
  std::vector<std::pair<std::string, std::string>> assign;
  for (const auto& [k, v] : j["assign"].items()) assign.emplace_back(k, v.get<std::string>());
  return make_monotone_map(std::move(src), std::move(tgt), assign);
}

Json rpoint_to_json(const RPoint& x) {
  Json j;
  Json chain = Json::array();
  Json weights = Json::array();
  for (size_t i = 0; i < x.chain.size(); ++i) {
    chain.push_back(x.base->closed.labels[x.chain[i]]);
    weights.push_back(rat_str(x.weights[i]));
  }
  j["chain"] = chain;
  j["weights"] = weights;
  return j;
}

RPoint rpoint_from_json(const Json& j, BasePtr base) {
  if (!j.contains("chain") || !j.contains("weights"))
    fail(Errc::BadInput, "point needs 'chain' and 'weights'");
  std::vector<std::string> chain;
  for (const auto& e : j["chain"]) chain.push_back(element_from_entry(e));
  std::vector<Rat> weights;
  for (const auto& w : j["weights"]) weights.push_back(parse_rat(w.get<std::string>()));
  return make_rpoint_labels(std::move(base), chain, weights);
}

Json vector_to_json(const Poset& base, const std::vector<Rat>& v) {
  Json j = Json::object();
  for (int i = 0; i < base.n(); ++i)
    if (v[i] != 0) j[base.labels[i]] = rat_str(v[i]);
  return j;
}

std::vector<Rat> vector_from_json(const Json& j, const Poset& base) {
  std::vector<Rat> v(base.n(), Rat(0));
  for (const auto& [k, val] : j.items()) {
    int i = base.index_of(k);
    if (i < 0) fail(Errc::BadInput, "unknown element '" + k + "'");
    v[i] = parse_rat(val.get<std::string>());
  }
  return v;
}

Json cover_to_json(const Cover& c) {
  Json j;
  j["ground"] = c.ground;
  Json sets = Json::object();
  for (int s = 0; s < c.n_sets(); ++s) {
    Json members = Json::array();
    for (int g = 0; g < c.n_ground(); ++g)
      if (c.contains(s, g)) members.push_back(c.ground[g]);
    sets[c.names[s]] = members;
  }
  j["sets"] = sets;
  return j;
}

Cover cover_from_json(const Json& j, std::optional<FiniteMetric> metric) {
  if (!j.contains("ground") || !j.contains("sets"))
    fail(Errc::BadInput, "cover needs 'ground' and 'sets'");
  std::vector<std::string> ground;
  for (const auto& g : j["ground"]) ground.push_back(g.get<std::string>());
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  for (const auto& [name, members] : j["sets"].items()) {
    std::vector<std::string> m;
    for (const auto& x : members) m.push_back(x.get<std::string>());
    sets.emplace_back(name, std::move(m));
  }
  return make_cover_labels(ground, sets, std::move(metric));
}

Json metric_to_json(const FiniteMetric& m) {
  Json j;
  j["points"] = m.points;
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n(); ++k) row.push_back(rat_str(m.dist(i, k)));
    rows.push_back(row);
  }
  j["d"] = rows;
  return j;
}

FiniteMetric metric_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("d"))
    fail(Errc::BadInput, "metric needs 'points' and 'd'");
  std::vector<std::string> points;
  for (const auto& p : j["points"]) points.push_back(p.get<std::string>());
  std::vector<Rat> d;
  for (const auto& row : j["d"])
    for (const auto& v : row) d.push_back(parse_rat(v.get<std::string>()));
  return validate_metric(std::move(points), std::move(d));
}

Json sampled_map_to_json(const SampledMap& f) {
  Json j;
  j["domain"] = metric_to_json(f.domain);
  j["codomain"] = poset_to_json(f.codomain->closed);
  j["gamma"] = rat_str(f.gamma);
  j["delta"] = rat_str(f.delta);
  Json values = Json::object();
  for (int i = 0; i < f.domain.n(); ++i)
    values[f.domain.points[i]] = rpoint_to_json(f.values[i]);
  j["values"] = values;
  return j;
}

SampledMap sampled_map_from_json(const Json& j) {
  for (const char* key : {"domain", "codomain", "gamma", "delta", "values"})
    if (!j.contains(key)) fail(Errc::BadInput, std::string("sampled map needs '") + key + "'");
  FiniteMetric domain = metric_from_json(j["domain"]);
  BasePtr codomain = make_base(poset_from_json(j["codomain"]));
  std::vector<RPoint> values;
  for (const auto& p : domain.points) {
    if (!j["values"].contains(p)) fail(Errc::BadInput, "missing value for '" + p + "'");
    values.push_back(rpoint_from_json(j["values"][p], codomain));
  }
  return make_sampled_map(std::move(domain), std::move(codomain), std::move(values),
                          parse_rat(j["gamma"].get<std::string>()),
                          parse_rat(j["delta"].get<std::string>()));
}

TowerSpec tower_spec_from_json(const Json& j) {
  if (!j.contains("space") || !j.contains("covers"))
    fail(Errc::BadInput, "tower spec needs 'space' and 'covers'");
  TowerSpec t;
  t.space = metric_from_json(j["space"]);
  for (const auto& c : j["covers"]) {
    if (c.contains("ground")) {
      t.covers.push_back(cover_from_json(c, t.space));
    } else {
      // bare {"U1": [...], ...} object; ground implied by the space
      Json wrapped;
      wrapped["ground"] = t.space.points;
      wrapped["sets"] = c;
      t.covers.push_back(cover_from_json(wrapped, t.space));
    }
  }
  return t;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::BadInput, "JSON parse error in '" + path + "': " + e.what());
  }
  return j;
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::BadInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace osc
