#include "doctest.h"
#include "orderscope/build.hpp"
#include "orderscope/random_gen.hpp"
#include "orderscope/realization.hpp"

using namespace osc;

namespace {

Rat q(const char* s) { return parse_rat(s); }

// the first worked subposet of the 3-cube: 0 < a < ab < abc, plus c < abc
struct Example1 {
  Poset p = validate_poset({"0", "a", "ab", "abc", "c"},
                           {{"0", "a"}, {"a", "ab"}, {"ab", "abc"}, {"0", "c"}, {"c", "abc"}});
  BasePtr base = make_base(p);
  Injection incl = [this] {
    Injection j(5);
    j[p.index_of("0")] = {};
    j[p.index_of("a")] = {"a"};
    j[p.index_of("ab")] = {"a", "b"};
    j[p.index_of("abc")] = {"a", "b", "c"};
    j[p.index_of("c")] = {"c"};
    return j;
  }();
  Injection reembedded = [this] {
    Injection j = incl;
    j[p.index_of("c")] = {"b"};  // not an embedding
    return j;
  }();
  // x on the chain 0 < a < ab < abc with cube coordinates (3/4, 1/2, 1/4)
  RPoint x = make_rpoint_labels(base, {"0", "a", "ab", "abc"},
                                {q("1/4"), q("1/4"), q("1/4"), q("1/4")});
  // y on the chain 0 < c < abc with (y1, y2) = (3/4, 1/2)
  RPoint y = make_rpoint_labels(base, {"0", "c", "abc"}, {q("1/4"), q("1/4"), q("1/2")});
};

}  // namespace

TEST_CASE("coordinates are the partial weight sums") {
  BasePtr c2 = make_base(chain_poset(2));
  RPoint x = make_rpoint_labels(c2, {"c1", "c2"}, {q("2/3"), q("1/3")});
  auto v = coords(x);
  CHECK(v[0] == 1);
  CHECK(v[1] == q("1/3"));
}

TEST_CASE("first worked example reproduces its cube coordinates and distances") {
  Example1 e;
  auto vx = coords_j(e.x, e.incl);
  CHECK(vx["a"] == q("3/4"));
  CHECK(vx["b"] == q("1/2"));
  CHECK(vx["c"] == q("1/4"));
  auto vy = coords_j(e.y, e.incl);
  CHECK(vy["a"] == q("1/2"));
  CHECK(vy["b"] == q("1/2"));
  CHECK(vy["c"] == q("3/4"));
  CHECK(is_embedding(e.p, e.incl));
  CHECK(dist_j(e.x, e.y, e.incl) == q("1/2"));
  CHECK(dist(e.x, e.y) == q("1/2"));  // standard coordinates agree: embedding
  CHECK_FALSE(is_embedding(e.p, e.reembedded));
  CHECK(dist_j(e.x, e.y, e.reembedded) == q("1/4"));
}

TEST_CASE("second worked example distances") {
  Poset p = validate_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  BasePtr base = make_base(p);
  Injection incl(3);
  incl[p.index_of("0")] = {};
  incl[p.index_of("a")] = {"a"};
  incl[p.index_of("b")] = {"b"};
  Injection reembedded = incl;
  reembedded[p.index_of("a")] = {"a", "b"};
  // x on the chain 0 < a with cube coordinates (1/2, 0)
  RPoint x = make_rpoint_labels(base, {"0", "a"}, {q("1/2"), q("1/2")});
  RPoint y = vertex_point(base, p.index_of("b"));
  CHECK(dist_j(x, y, incl) == 1);
  CHECK(dist(x, y) == 1);
  CHECK(dist_j(x, y, reembedded) == q("1/2"));
  CHECK(dist(x, x) == 0);
}

TEST_CASE("atomic coordinates are supported on the atoms below the chain top") {
  Poset v = validate_poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  BasePtr base = make_base(v);
  Injection a = atomic_injection(v);
  RPoint pt = make_rpoint_labels(base, {"x", "z"}, {q("1/2"), q("1/2")});
  auto c = coords_j(pt, a);
  CHECK(c["x"] == 1);
  CHECK(c["y"] == q("1/2"));
  CHECK(c.size() == 2);
}

TEST_CASE("decompose inverts coords and rejects non-cone level sets") {
  Poset c2 = chain_poset(2);
  BasePtr base = make_base(c2);
  RPoint x = decompose(base, {Rat(1), q("1/2")});
  CHECK(x.chain == std::vector<int>{0, 1});
  CHECK(x.weights == std::vector<Rat>{q("1/2"), q("1/2")});
  CHECK_THROWS_AS(decompose(base, {q("1/2"), Rat(1)}), Error);
  try {
    decompose(base, {q("1/2"), Rat(1)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInRealization);
  }
  // vertex indicator
  RPoint v = decompose(base, {Rat(1), Rat(0)});
  CHECK(v.chain == std::vector<int>{0});
  CHECK(v.weights == std::vector<Rat>{Rat(1)});
}

TEST_CASE("decompose round trips on random points") {
  Rng rng(51);
  for (int t = 0; t < 60; ++t) {
    Rng trial = rng.fork(t);
    BasePtr base = make_base(random_poset(trial, 1 + static_cast<int>(trial.below(7))));
    RPoint x = random_point(trial, base);
    RPoint back = decompose(base, coords(x));
    CHECK(back.chain == x.chain);
    CHECK(back.weights == x.weights);
  }
}

TEST_CASE("product law: a vector decomposes iff both projections do") {
  Poset p = chain_poset(2, "p");
  Poset q2 = validate_poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  Poset prod = product(p, q2);
  BasePtr pb = make_base(p), qb = make_base(q2);
  Rng rng(53);
  long decomposable = 0;
  for (int t = 0; t < 120; ++t) {
    Rng trial = rng.fork(t);
    // random vector over the disjoint ground sets, monotone or not
    std::vector<Rat> vp(p.n()), vq(q2.n());
    auto rnd = [&]() { return Rat(trial.below(5), 4); };
    if (trial.chance(1, 2)) {
      RPoint xp = random_point(trial, pb);
      vp = coords(xp);
    } else {
      for (auto& r : vp) r = rnd();
    }
    if (trial.chance(1, 2)) {
      RPoint xq = random_point(trial, qb);
      vq = coords(xq);
    } else {
      for (auto& r : vq) r = rnd();
    }
    bool both = try_decompose(pb, vp).has_value() && try_decompose(qb, vq).has_value();
    // combined vector over P x Q via the pairing of cones: superlevel sets
    // must be products of cones, which is exactly simultaneous decomposability
    bool combined = [&]() {
      std::vector<Rat> levels;
      for (const Rat& r : vp)
        if (r > 0) levels.push_back(r);
      for (const Rat& r : vq)
        if (r > 0) levels.push_back(r);
      std::sort(levels.begin(), levels.end(), std::greater<>());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      if (levels.empty() || levels.front() != 1) return false;
      // the (p,q) with cone pair equal to the superlevel pair must exist and
      // form a chain in the product
      std::vector<int> chain;
      for (const Rat& lam : levels) {
        int cp = -1, cq = -1;
        for (int e = 0; e < p.n(); ++e) {
          std::vector<uint8_t> cone_set(p.n(), 0);
          for (int s : cone_of(p, e)) cone_set[s] = 1;
          bool match = true;
          for (int s = 0; s < p.n(); ++s)
            if ((vp[s] >= lam) != (cone_set[s] != 0)) match = false;
          if (match) { cp = e; break; }
        }
        for (int e = 0; e < q2.n(); ++e) {
          std::vector<uint8_t> cone_set(q2.n(), 0);
          for (int s : cone_of(q2, e)) cone_set[s] = 1;
          bool match = true;
          for (int s = 0; s < q2.n(); ++s)
            if ((vq[s] >= lam) != (cone_set[s] != 0)) match = false;
          if (match) { cq = e; break; }
        }
        if (cp < 0 || cq < 0) return false;
        int pe = prod.index_of("(" + p.labels[cp] + "," + q2.labels[cq] + ")");
        chain.push_back(pe);
      }
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!prod.leq(chain[i], chain[i + 1])) return false;
      return true;
    }();
    CHECK(both == combined);
    if (both) ++decomposable;
  }
  CHECK(decomposable > 10);
}

TEST_CASE("map_point: identity, constants, merges") {
  Poset c3 = chain_poset(3);
  BasePtr base = make_base(c3);
  RPoint x = make_rpoint_labels(base, {"c1", "c2", "c3"}, {q("1/2"), q("1/4"), q("1/4")});
  RPoint ix = map_point(identity_map(c3), x);
  CHECK(coords(ix) == coords(x));

  Poset pt = chain_poset(1, "p");
  RPoint cx = map_point(make_monotone_map(c3, pt, {0, 0, 0}), x);
  CHECK(cx.chain.size() == 1);
  CHECK(cx.weights[0] == 1);

  // collapse c2 ~ c3: weights merge
  Poset c2 = chain_poset(2, "d");
  RPoint mx = map_point(make_monotone_map(c3, c2, {0, 1, 1}), x);
  REQUIRE(mx.chain.size() == 2);
  CHECK(mx.weights[1] == q("1/2"));
}

TEST_CASE("dual relabelling is an isometry") {
  Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    Rng trial = rng.fork(t);
    Poset p = random_poset(trial, 1 + static_cast<int>(trial.below(6)));
    BasePtr base = make_base(p);
    BasePtr dual_base = make_base(dual(p));
    RPoint x = random_point(trial, base);
    RPoint y = random_point(trial, base);
    CHECK(dist(dual_point(x, dual_base), dual_point(y, dual_base)) == dist(x, y));
  }
}

TEST_CASE("subposet transport preserves distances") {
  // a chain inside a bigger poset: the standard coordinates differ but the
  // metric does not (subposet realization embeds isometrically)
  Poset big = validate_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
  Poset small = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  BasePtr sb = make_base(small), bb = make_base(big);
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    Rng trial = rng.fork(t);
    RPoint x = random_point(trial, sb);
    RPoint y = random_point(trial, sb);
    CHECK(dist(rebase_subposet(x, bb), rebase_subposet(y, bb)) == dist(x, y));
  }
}

TEST_CASE("h_down on the 2-chain subdivision hits vertices and midpoints") {
  Subdivision sd = canonical(chain_poset(2));
  BasePtr sub_base = make_base(sd.sub);
  RPoint mid = h_down(sd, vertex_point(sub_base, sd.sub.index_of("[c1,c2]")));
  auto v = coords(mid);
  CHECK(v[0] == 1);
  CHECK(v[1] == q("1/2"));
  RPoint va = h_down(sd, vertex_point(sub_base, sd.sub.index_of("[c1,c1]")));
  CHECK(coords(va) == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("h_up inverts h_down everywhere") {
  Rng rng(67);
  for (int t = 0; t < 60; ++t) {
    Rng trial = rng.fork(t);
    Poset p = random_poset(trial, 1 + static_cast<int>(trial.below(6)));
    Subdivision sd = canonical(p);
    BasePtr sub_base = make_base(sd.sub);
    RPoint up = random_point(trial, sub_base);
    RPoint down = h_down(sd, up);
    RPoint again = h_up(sd, down);
    CHECK(coords(again) == coords(up));
    RPoint base_pt = random_point(trial, make_base(p));
    CHECK(coords(h_down(sd, h_up(sd, base_pt))) == coords(base_pt));
  }
}

TEST_CASE("rpoint validation") {
  BasePtr base = make_base(antichain_poset(2));
  CHECK_THROWS_AS(make_rpoint(base, {0, 1}, {q("1/2"), q("1/2")}), Error);  // not a chain
  BasePtr c2 = make_base(chain_poset(2));
  CHECK_THROWS_AS(make_rpoint(c2, {0, 1}, {q("1/2"), q("1/3")}), Error);  // sum != 1
  CHECK_THROWS_AS(make_rpoint(c2, {0, 0}, {q("1/2"), q("1/2")}), Error);  // repeat
  CHECK_THROWS_AS(make_rpoint(c2, {0}, {q("0"), }), Error);               // zero weight
  // preposet base: chains are cliques of the generating digraph
  Preposet box = codeleted_prejoin(as_preposet(chain_poset(2)));
  BasePtr bb = make_base(box);
  int x = box.index_of("c1");
  int ystar = box.index_of("c1*");
  CHECK_NOTHROW(make_rpoint(bb, {x, ystar}, {q("1/2"), q("1/2")}));
  Poset v = validate_poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  Preposet vbox = codeleted_prejoin(as_preposet(v));
  BasePtr vb = make_base(vbox);
  // x <= y* holds in the closure but is not an edge: not a clique chain
  CHECK_THROWS_AS(
      make_rpoint(vb, {vbox.index_of("x"), vbox.index_of("y*")}, {q("1/2"), q("1/2")}),
      Error);
}

TEST_CASE("base mismatch raises") {
  BasePtr a = make_base(chain_poset(2));
  BasePtr b = make_base(chain_poset(3));
  RPoint x = vertex_point(a, 0);
  RPoint y = vertex_point(b, 0);
  CHECK_THROWS_AS(dist(x, y), Error);
}
