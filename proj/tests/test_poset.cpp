#include "doctest.h"
#include "orderscope/build.hpp"
#include "orderscope/poset.hpp"
#include "orderscope/random_gen.hpp"

using namespace osc;

namespace {

// exhaustive-subset oracle for conditional completeness
bool cc_subset_oracle(const Poset& p) {
  for (uint32_t mask = 1; mask < (1u << p.n()); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < p.n(); ++i)
      if (mask & (1u << i)) subset.push_back(i);
    bool bounded = false;
    for (int u = 0; u < p.n() && !bounded; ++u) {
      bool ok = true;
      for (int s : subset)
        if (!p.leq(s, u)) { ok = false; break; }
      bounded = ok;
    }
    if (bounded && !least_upper_bound(p, subset)) return false;
  }
  return true;
}

Poset bowtie() {
  return validate_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

Poset vee() { return validate_poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}}); }

Poset powerset3() {
  std::vector<std::string> labels;
  for (int m = 0; m < 8; ++m) {
    std::string l = "{";
    for (int b = 0; b < 3; ++b)
      if (m & (1 << b)) l += std::string(1, static_cast<char>('x' + b));
    labels.push_back(l + "}");
  }
  Poset p;
  p.labels = labels;
  p.le.assign(64, 0);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if ((a & ~b) == 0) p.le[a * 8 + b] = 1;
  return p;
}

}  // namespace

TEST_CASE("preposet validation accepts chains and rejects cycles") {
  Preposet two = validate_preposet({"a", "b"}, {{"a", "b"}});
  CHECK(two.edge(0, 1));
  CHECK_FALSE(two.edge(1, 0));
  CHECK_THROWS_AS(validate_preposet({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  try {
    validate_preposet({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DirectedCycle);
    CHECK(std::string(e.what()).find("witness") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_preposet({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(validate_preposet({"a"}, {{"a", "a"}}), Error);
}

TEST_CASE("the cylinder of the identity on a 2-chain is a valid preposet") {
  Poset c2 = chain_poset(2);
  MonotoneMap id = identity_map(c2);
  Preposet mc = mapping_cylinder(id, CylinderVariant::Lower);
  // oracle: a fresh depth-first cycle search accepts the edge set
  CHECK_NOTHROW(validate_preposet(mc.labels, edge_pairs(mc)));
}

TEST_CASE("transitive closure adds the composite relations and is idempotent") {
  Preposet p = validate_preposet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Poset q = transitive_closure(p);
  CHECK(q.leq(0, 2));
  // idempotence: a poset's own strict pairs close to the same poset
  CHECK(transitive_closure(as_preposet(q)) == q);
}

TEST_CASE("transitive closure is monotone in the edge set") {
  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    Rng trial = rng.fork(t);
    Preposet small = random_preposet(trial, 2 + static_cast<int>(trial.below(6)), 1, 4);
    Preposet big = small;
    // add edges while keeping acyclicity (respect the closure order)
    Poset closed = transitive_closure(small);
    for (int i = 0; i < big.n(); ++i)
      for (int j = 0; j < big.n(); ++j)
        if (closed.lt(i, j) && trial.chance(1, 2))
          big.adj[static_cast<size_t>(i) * big.n() + j] = 1;
    Poset closed_big = transitive_closure(big);
    for (int i = 0; i < big.n(); ++i)
      for (int j = 0; j < big.n(); ++j)
        if (closed.leq(i, j)) CHECK(closed_big.leq(i, j));
  }
}

TEST_CASE("codeleted prejoin of the vee needs the closure to relate x and y*") {
  Poset v = vee();
  Preposet box = codeleted_prejoin(as_preposet(v));
  int x = box.index_of("x"), ystar = box.index_of("y*"), zstar = box.index_of("z*");
  CHECK(box.edge(x, zstar));
  CHECK(box.edge(zstar, ystar));
  CHECK_FALSE(box.edge(x, ystar));
  // oracle: Warshall closure reaches x <= y*
  Poset closed = transitive_closure(box);
  CHECK(closed.leq(x, ystar));
}

TEST_CASE("chains of a generated preposet are chains of its closure") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Rng trial = rng.fork(t);
    Preposet p = random_preposet(trial, 2 + static_cast<int>(trial.below(5)));
    Poset q = transitive_closure(p);
    for (const auto& chain : all_chains(p)) CHECK(is_chain(q, chain));
  }
}

TEST_CASE("atoms, cones and stars") {
  Poset b = bowtie();
  auto at = atoms(b);
  REQUIRE(at.size() == 2);
  CHECK(b.labels[at[0]] == "a");
  CHECK(b.labels[at[1]] == "b");
  Poset c2 = chain_poset(2);
  auto cone_b = cone_of(c2, 1);
  CHECK(cone_b.size() == 2);
  auto star_a = star_of(bowtie(), 0);
  CHECK(star_a.size() == 4);  // everything: a is below both tops
}

TEST_CASE("conditional completeness: lattice yes, bowtie no, chains yes") {
  CHECK(is_conditionally_complete(powerset3()));
  CHECK_FALSE(is_conditionally_complete(bowtie()));
  for (int k = 1; k <= 5; ++k) CHECK(is_conditionally_complete(chain_poset(k)));
}

TEST_CASE("pairwise conditional completeness equals the subset-exhaustive oracle") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Rng trial = rng.fork(t);
    Poset p = random_poset(trial, 2 + static_cast<int>(trial.below(6)));
    CHECK(is_conditionally_complete(p) == cc_subset_oracle(p));
  }
}

TEST_CASE("atomicity needs least upper bounds of atom sets") {
  // nonempty subsets of a 3-set: atoms are the singletons
  Poset simplex = validate_poset(
      {"x", "y", "z", "xy", "xz", "yz", "xyz"},
      {{"x", "xy"}, {"x", "xz"}, {"y", "xy"}, {"y", "yz"}, {"z", "xz"}, {"z", "yz"},
       {"xy", "xyz"}, {"xz", "xyz"}, {"yz", "xyz"}});
  CHECK(is_atomic(simplex));
  CHECK(is_atomic(antichain_poset(4)));
  CHECK(is_atomic(vee()));
  CHECK_FALSE(is_atomic(bowtie()));  // {a,b} has two incomparable upper bounds
  // a poset with a global bottom has a single atom, so it is not atomic
  CHECK_FALSE(is_atomic(powerset3()));
}

TEST_CASE("embedding predicate accepts the standard cone embedding") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Rng trial = rng.fork(t);
    Poset p = random_poset(trial, 2 + static_cast<int>(trial.below(6)));
    CHECK(is_embedding(p, standard_embedding(p)));
  }
}

TEST_CASE("the two worked injections are not embeddings") {
  // P = {0, {a}, {a,b}, {a,b,c}, {c}} with {c} sent to {b}
  Poset p = validate_poset({"0", "a", "ab", "abc", "c"},
                           {{"0", "a"}, {"a", "ab"}, {"ab", "abc"}, {"0", "c"}, {"c", "abc"}});
  std::vector<std::set<std::string>> j(5);
  j[0] = {};
  j[1] = {"a"};
  j[2] = {"a", "b"};
  j[3] = {"a", "b", "c"};
  j[4] = {"b"};  // re-embedded
  CHECK_FALSE(is_embedding(p, j));

  // P = {0, {a}, {b}} with {a} sent to {a,b}
  Poset q = validate_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  std::vector<std::set<std::string>> k(3);
  k[0] = {};
  k[1] = {"a", "b"};  // re-embedded
  k[2] = {"b"};
  CHECK_FALSE(is_embedding(q, k));
}

TEST_CASE("non-injective maps are rejected") {
  Poset q = validate_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  std::vector<std::set<std::string>> k(3);
  k[0] = {"z"};
  k[1] = {"z"};
  k[2] = {"b"};
  CHECK_THROWS_AS(is_embedding(q, k), Error);
}

TEST_CASE("monotone map validation") {
  Poset c2 = chain_poset(2);
  Poset a2 = antichain_poset(2);
  CHECK_THROWS_AS(make_monotone_map(c2, a2, {0, 1}), Error);
  CHECK_NOTHROW(make_monotone_map(c2, a2, {1, 1}));
  MonotoneMap f = make_monotone_map(c2, chain_poset(3), {{"c1", "c1"}, {"c2", "c3"}});
  CHECK(f.assign == std::vector<int>{0, 2});
}

TEST_CASE("isomorphism checks") {
  CHECK(is_isomorphic(bowtie(), dual(dual(bowtie()))));
  CHECK_FALSE(is_isomorphic(chain_poset(3), vee()));
  CHECK(is_isomorphic(vee(), dual(validate_poset({"p", "q", "r"}, {{"p", "q"}, {"p", "r"}}))));
}
