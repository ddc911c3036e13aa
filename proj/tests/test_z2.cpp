#include "doctest.h"
#include "orderscope/build.hpp"
#include "orderscope/z2.hpp"

using namespace osc;

TEST_CASE("boundary of a triangle is a circle") {
  SimplicialComplex k =
      complex_from_simplices({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  auto b = betti_z2(k);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 1);
  CHECK(b[1] == 1);
}

TEST_CASE("a full simplex has zero reduced homology") {
  SimplicialComplex k = complex_from_simplices({"a", "b", "c", "d"}, {{0, 1, 2, 3}});
  CHECK(reduced_betti_z2(k).empty());
}

TEST_CASE("the order complex of the co-deleted square ground is a circle") {
  Preposet k0 = validate_preposet({"a", "b", "c", "d"},
                                  {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto b = betti_z2(order_complex(k0));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 1);
  CHECK(b[1] == 1);
}

TEST_CASE("octahedron sphere") {
  Poset p3 = ordinal_sum(ordinal_sum(antichain_poset(2, "a"), antichain_poset(2, "b")),
                         antichain_poset(2, "c"));
  auto b = betti_z2(order_complex(p3));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == 1);
  CHECK(b[1] == 0);
  CHECK(b[2] == 1);
}

TEST_CASE("two components") {
  SimplicialComplex k = complex_from_simplices({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  auto b = betti_z2(k);
  CHECK(b[0] == 2);
}

TEST_CASE("cycle and boundary queries") {
  SimplicialComplex circle =
      complex_from_simplices({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::vector<int>> loop{{0, 1}, {1, 2}, {0, 2}};
  CHECK(is_cycle_z2(circle, 1, loop));
  CHECK_FALSE(is_boundary_z2(circle, 1, loop));
  std::vector<std::vector<int>> path{{0, 1}, {1, 2}};
  CHECK_FALSE(is_cycle_z2(circle, 1, path));

  SimplicialComplex disk = complex_from_simplices({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(is_cycle_z2(disk, 1, loop));
  CHECK(is_boundary_z2(disk, 1, loop));
}

TEST_CASE("torus-free sanity: the 2-sphere boundary query") {
  // boundary of the 3-simplex: every 2-cycle bounds nothing (H2 generator)
  SimplicialComplex sphere = complex_from_simplices(
      {"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto b = betti_z2(sphere);
  REQUIRE(b.size() == 3);
  CHECK(b[2] == 1);
  std::vector<std::vector<int>> shell{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(is_cycle_z2(sphere, 2, shell));
  CHECK_FALSE(is_boundary_z2(sphere, 2, shell));
}
