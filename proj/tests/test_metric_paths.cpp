#include "doctest.h"
#include "orderscope/build.hpp"
#include "orderscope/metric_paths.hpp"
#include "orderscope/random_gen.hpp"

using namespace osc;

namespace {

Rat q(const char* s) { return parse_rat(s); }

}  // namespace

TEST_CASE("chain-pair formula: same-chain pairs reduce to the coordinate gap") {
  BasePtr base = make_base(chain_poset(4));
  Rng rng(71);
  for (int t = 0; t < 40; ++t) {
    Rng trial = rng.fork(t);
    std::vector<int> full{0, 1, 2, 3};
    RPoint x = random_point_on_chain(trial, base, full);
    RPoint y = random_point_on_chain(trial, base, full);
    auto [d, w] = dist_chain_formula(x, y);
    CHECK(d == dist(x, y));
  }
}

TEST_CASE("chain-pair formula reproduces the worked example with a witness") {
  Poset p = validate_poset({"0", "a", "ab", "abc", "c"},
                           {{"0", "a"}, {"a", "ab"}, {"ab", "abc"}, {"0", "c"}, {"c", "abc"}});
  BasePtr base = make_base(p);
  RPoint x = make_rpoint_labels(base, {"0", "a", "ab", "abc"},
                                {q("1/4"), q("1/4"), q("1/4"), q("1/4")});
  RPoint y = make_rpoint_labels(base, {"0", "c", "abc"}, {q("1/4"), q("1/4"), q("1/2")});
  auto [d, w] = dist_chain_formula(x, y);
  CHECK(d == q("1/2"));
  CHECK(d == dist(x, y));
  // the interleaving data is recorded
  CHECK(w.pairs.size() >= 2);
  CHECK(!w.delta.empty());
  CHECK(!w.delta_primed.empty());
  // pair positions strictly increase in both coordinates
  for (size_t i = 0; i + 1 < w.pairs.size(); ++i) {
    CHECK(w.pairs[i].first < w.pairs[i + 1].first);
    CHECK(w.pairs[i].second < w.pairs[i + 1].second);
  }
}

TEST_CASE("chain-pair formula equals the coordinate metric on random pairs") {
  Rng rng(73);
  for (int t = 0; t < 300; ++t) {
    Rng trial = rng.fork(t);
    BasePtr base = trial.chance(1, 4)
                       ? make_base(random_preposet(trial, 2 + static_cast<int>(trial.below(7))))
                       : make_base(random_poset(trial, 2 + static_cast<int>(trial.below(7))));
    RPoint x = random_point(trial, base);
    RPoint y = random_point(trial, base);
    CHECK(dist_chain_formula(x, y).first == dist(x, y));
  }
}

TEST_CASE("three-leg bound: degenerate and same-chain cases") {
  BasePtr base = make_base(chain_poset(3));
  RPoint x = make_rpoint_labels(base, {"c1", "c2", "c3"}, {q("1/2"), q("1/4"), q("1/4")});
  D3Result same = d3_upper(x, x);
  CHECK(same.value == 0);

  // same-chain pair: the three-leg path collapses to the direct distance
  RPoint y = make_rpoint_labels(base, {"c1", "c2", "c3"}, {q("1/4"), q("1/2"), q("1/4")});
  D3Result r = d3_upper(x, y);
  CHECK(r.value == dist(x, y));
  // golden value for this fixture: coordinates differ by 1/4 at c2
  CHECK(r.value == q("1/4"));
}

TEST_CASE("three-leg bound: incomparable vertices go through the cone point") {
  BasePtr base = make_base(antichain_poset(2));
  RPoint x = vertex_point(base, 0);
  RPoint y = vertex_point(base, 1);
  D3Result r = d3_upper(x, y);
  CHECK(dist(x, y) == 1);
  CHECK(r.value == 2);  // down to the adjoined bottom and back up
  CHECK(same_chain_hull(r.x_hat, r.x_prime));
  CHECK(same_chain_hull(r.x_prime, r.y_prime));
  CHECK(same_chain_hull(r.y_prime, r.y_hat));
}

TEST_CASE("three-leg bound sandwich on random pairs") {
  Rng rng(79);
  for (int t = 0; t < 200; ++t) {
    Rng trial = rng.fork(t);
    BasePtr base = make_base(random_poset(trial, 2 + static_cast<int>(trial.below(7))));
    RPoint x = random_point(trial, base);
    RPoint y = random_point(trial, base);
    Rat d = dist(x, y);
    D3Result r = d3_upper(x, y);
    CHECK(r.value >= d);
    CHECK(r.value <= 9 * d);
    CHECK(same_chain_hull(r.x_hat, r.x_prime));
    CHECK(same_chain_hull(r.x_prime, r.y_prime));
    CHECK(same_chain_hull(r.y_prime, r.y_hat));
    // the intermediary chain is a chain of the hatted poset
    CHECK(is_chain(r.hat_base->closed, r.mid_chain));
  }
}

TEST_CASE("staircase pair: grid and closeness requirements") {
  BasePtr base = make_base(chain_poset(4));
  RPoint x = make_rpoint_labels(base, {"c1", "c2", "c3", "c4"},
                                {q("1/4"), q("1/4"), q("1/4"), q("1/4")});
  CHECK_THROWS_AS(lcu_pair(x, x, q("1/5")), Error);  // 1/(4 delta) = 5/4 not integral
  try {
    lcu_pair(x, x, q("1/5"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DeltaNotGrid);
  }
  RPoint far = vertex_point(base, 3);
  CHECK_THROWS_AS(lcu_pair(x, far, q("1/4")), Error);
  try {
    lcu_pair(x, far, q("1/4"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFar);
  }
}

TEST_CASE("staircase of grid-aligned equal points is the shared staircase") {
  // on the grid {1 - 4 i delta} both value maps are the identity, so equal
  // inputs give equal outputs
  BasePtr base = make_base(chain_poset(3));
  RPoint x = make_rpoint_labels(base, {"c1", "c2"}, {q("1/2"), q("1/2")});
  // coordinates (1, 1/2, 0): aligned with the delta = 1/8 grid
  LcuResult r = lcu_pair(x, x, q("1/8"));
  CHECK(coords(r.x_prime) == coords(r.y_prime));
  CHECK(coords(r.x_prime) == coords(x));
}

TEST_CASE("golden staircase on the 4-chain") {
  BasePtr base = make_base(chain_poset(4));
  // x with coordinates (1, 7/8, 1/2, 1/8), y with (1, 13/16, 1/2, 3/16)
  RPoint x = make_rpoint_labels(base, {"c1", "c2", "c3", "c4"},
                                {q("1/8"), q("3/8"), q("3/8"), q("1/8")});
  RPoint y = make_rpoint_labels(base, {"c1", "c2", "c3", "c4"},
                                {q("3/16"), q("5/16"), q("5/16"), q("3/16")});
  REQUIRE(dist(x, y) < q("1/4"));
  LcuResult r = lcu_pair(x, y, q("1/4"));
  // frozen from the coordinatewise value maps F and G at delta = 1/4:
  // F ramps [3/4,1) onto [0,1) and collapses [0,3/4); G collapses [1/2,1]
  // to 1 and [0,1/4) to 0
  CHECK(coords(r.x_prime) == std::vector<Rat>{q("1"), q("1/2"), q("0"), q("0")});
  CHECK(coords(r.y_prime) == std::vector<Rat>{q("1"), q("1"), q("1"), q("0")});
  CHECK(dist(x, r.x_prime) <= q("3/4"));
  CHECK(dist(y, r.y_prime) <= q("3/4"));
  CHECK(same_chain_hull(r.x_prime, r.y_prime));
}

TEST_CASE("staircase legs share hulls across different witness chains") {
  // diamond: two parallel maximal chains through incomparable midpoints;
  // close points on the two branches still produce a common-hull pair
  Poset diamond = validate_poset({"0", "a", "b", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  BasePtr base = make_base(diamond);
  RPoint x = make_rpoint_labels(base, {"0", "a", "1"}, {q("7/16"), q("1/16"), q("1/2")});
  RPoint y = make_rpoint_labels(base, {"0", "b", "1"}, {q("7/16"), q("1/16"), q("1/2")});
  REQUIRE_FALSE(same_chain_hull(x, y));
  Rat delta = q("1/8");
  REQUIRE(dist(x, y) < delta);
  LcuResult r = lcu_pair(x, y, delta);
  CHECK(dist(x, r.x_prime) <= 3 * delta);
  CHECK(dist(y, r.y_prime) <= 3 * delta);
  CHECK(same_chain_hull(x, r.x_prime));
  CHECK(same_chain_hull(r.x_prime, r.y_prime));
  CHECK(same_chain_hull(r.y_prime, y));
}

TEST_CASE("monotone images never exceed the three-leg bound") {
  // dist(f x, f y) <= d3_upper(x, y): the realized map contracts the path
  // metric, and the three-leg value dominates it
  Rng rng(89);
  for (int t = 0; t < 120; ++t) {
    Rng trial = rng.fork(t);
    Poset p = random_poset(trial, 2 + static_cast<int>(trial.below(5)));
    Poset q2 = random_poset(trial, 1 + static_cast<int>(trial.below(5)));
    MonotoneMap f = random_monotone_map(trial, p, q2);
    BasePtr base = make_base(p);
    RPoint x = random_point(trial, base);
    RPoint y = random_point(trial, base);
    CHECK(dist(map_point(f, x), map_point(f, y)) <= d3_upper(x, y).value);
  }
}

TEST_CASE("staircase values follow the two coordinatewise maps") {
  // oracle: F collapses [1-4id, 1-(4i-3)d) and stretches [1-(4i+1)d, 1-4id);
  // G is shifted two grid steps
  auto F = [](const Rat& v, const Rat& d) -> Rat {
    for (long i = 0;; ++i) {
      Rat level = Rat(1 - 4 * i * d);
      if (v >= level) return level;
      if (v >= level - d) return Rat(level - 4 * (level - v));
    }
  };
  auto G = [](const Rat& v, const Rat& d) -> Rat {
    for (long i = 0;; ++i) {
      Rat level = Rat(1 - 4 * i * d);
      if (v >= level - 2 * d) return level;
      if (v >= level - 3 * d) return Rat(level - 4 * ((level - 2 * d) - v));
    }
  };
  Rng rng(83);
  for (int t = 0; t < 120; ++t) {
    Rng trial = rng.fork(t);
    Rat delta = trial.chance(1, 2) ? q("1/4") : q("1/8");
    Poset p = random_poset(trial, 2 + static_cast<int>(trial.below(5)));
    BasePtr base = make_base(p);
    auto chain = random_maximal_chain(trial, p);
    RPoint x = random_point_on_chain(trial, base, chain);
    RPoint y = x;
    LcuResult r = lcu_pair(x, y, delta);
    auto vx = coords(x);
    auto vpx = coords(r.x_prime);
    auto vpy = coords(r.y_prime);
    for (size_t s = 0; s < vx.size(); ++s) {
      CHECK(vpx[s] == F(vx[s], delta));
      CHECK(vpy[s] == G(vx[s], delta));
    }
  }
}
