#include "doctest.h"
#include "orderscope/build.hpp"
#include "orderscope/io.hpp"

using namespace osc;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(parse_rat("3/6")) == "1/2");
  CHECK(rat_str(parse_rat("4")) == "4");
  CHECK(rat_str(parse_rat("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
}

TEST_CASE("poset round trip through the documented schema") {
  Json j = Json::parse(R"({"elements":["a","b","c"],"relations":[["a","b"],["b","c"]]})");
  Poset p = poset_from_json(j);
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));
  Json back = poset_to_json(p);
  Poset again = poset_from_json(back);
  CHECK(again == p);
}

TEST_CASE("preposets keep their generating edges") {
  Preposet k0 = validate_preposet({"a", "b", "c", "d"},
                                  {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  Preposet again = preposet_from_json(preposet_to_json(k0));
  CHECK(again == k0);
}

TEST_CASE("interval elements read as two-element arrays") {
  Json j = Json::parse(R"({"elements":[["a","a"],["a","b"]],"relations":[[["a","a"],["a","b"]]]})");
  Poset p = poset_from_json(j);
  CHECK(p.index_of("[a,a]") >= 0);
  CHECK(p.leq(p.index_of("[a,a]"), p.index_of("[a,b]")));
}

TEST_CASE("map round trip") {
  Poset c2 = chain_poset(2);
  MonotoneMap f = make_monotone_map(c2, chain_poset(3), {{"c1", "c1"}, {"c2", "c3"}});
  MonotoneMap again = map_from_json(map_to_json(f));
  CHECK(again.assign == f.assign);
  CHECK(again.source == f.source);
  CHECK(again.target == f.target);
}

TEST_CASE("rpoint schema uses p/q strings") {
  BasePtr base = make_base(chain_poset(2));
  RPoint x = make_rpoint_labels(base, {"c1", "c2"}, {parse_rat("1/2"), parse_rat("1/2")});
  Json j = rpoint_to_json(x);
  CHECK(j["weights"][0] == "1/2");
  RPoint again = rpoint_from_json(j, base);
  CHECK(again.chain == x.chain);
  CHECK(again.weights == x.weights);
}

TEST_CASE("sparse vectors") {
  Poset c2 = chain_poset(2);
  std::vector<Rat> v{Rat(1), parse_rat("1/2")};
  Json j = vector_to_json(c2, v);
  CHECK(j["c1"] == "1");
  CHECK(vector_from_json(j, c2) == v);
}

TEST_CASE("cover and metric schemas") {
  Json j = Json::parse(R"({"ground":["x","y"],"sets":{"U1":["x"],"U2":["x","y"]}})");
  Cover c = cover_from_json(j);
  CHECK(c.n_sets() == 2);
  Cover again = cover_from_json(cover_to_json(c));
  CHECK(again.sets == c.sets);

  Json mj = Json::parse(R"({"points":["a","b"],"d":[["0","1"],["1","0"]]})");
  FiniteMetric m = metric_from_json(mj);
  CHECK(m.dist(0, 1) == 1);
  CHECK(metric_from_json(metric_to_json(m)) == m);
}

TEST_CASE("sampled map schema") {
  Json j = Json::parse(R"({
    "domain": {"points":["x1","x2"],"d":[["0","1/8"],["1/8","0"]]},
    "codomain": {"elements":["a","b"],"relations":[["a","b"]]},
    "gamma": "1/4", "delta": "1/2",
    "values": {"x1": {"chain":["a"],"weights":["1"]},
               "x2": {"chain":["a","b"],"weights":["3/4","1/4"]}}
  })");
  SampledMap f = sampled_map_from_json(j);
  CHECK(f.gamma == parse_rat("1/4"));
  CHECK(f.values[1].weights[1] == parse_rat("1/4"));
  Json back = sampled_map_to_json(f);
  CHECK(back["values"]["x2"]["weights"][1] == "1/4");
}

TEST_CASE("tower spec accepts bare per-level set objects") {
  Json j = Json::parse(R"({
    "space": {"points":["a","b"],"d":[["0","1"],["1","0"]]},
    "covers": [ {"U": ["a","b"]}, {"V1": ["a"], "V2": ["b"]} ]
  })");
  TowerSpec t = tower_spec_from_json(j);
  REQUIRE(t.covers.size() == 2);
  CHECK(t.covers[0].n_sets() == 1);
  CHECK(t.covers[1].n_sets() == 2);
  CHECK(t.covers[1].metric.has_value());
}
