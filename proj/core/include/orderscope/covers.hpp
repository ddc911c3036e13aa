#pragma once

#include <optional>

#include "orderscope/poset.hpp"
#include "orderscope/rat.hpp"
#include "orderscope/realization.hpp"

namespace osc {

/// Finite point set with an exact rational distance matrix. Validated:
/// symmetric, zero diagonal, positive off diagonal, triangle inequality.
struct FiniteMetric {
  std::vector<std::string> points;
  std::vector<Rat> d;  // n*n

  int n() const { return static_cast<int>(points.size()); }
  const Rat& dist(int i, int j) const { return d[static_cast<size_t>(i) * points.size() + j]; }
  int index_of(const std::string& label) const;

  bool operator==(const FiniteMetric&) const = default;
};

FiniteMetric validate_metric(std::vector<std::string> points, std::vector<Rat> d);

/// Indexed family of subsets of a finite ground set (repeats allowed).
/// The family must cover the ground; index names are unique. Optionally the
/// ground carries a metric (then metric->points == ground).
struct Cover {
  std::vector<std::string> ground;
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> sets;  // per index, bitmask over ground
  std::optional<FiniteMetric> metric;

  int n_ground() const { return static_cast<int>(ground.size()); }
  int n_sets() const { return static_cast<int>(names.size()); }
  bool contains(int set_idx, int pt) const { return sets[set_idx][pt] != 0; }
  bool subset_of(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) const;
};

Cover make_cover(std::vector<std::string> ground, std::vector<std::string> names,
                 std::vector<std::vector<uint8_t>> sets,
                 std::optional<FiniteMetric> metric = std::nullopt);
Cover make_cover_labels(const std::vector<std::string>& ground,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                        std::optional<FiniteMetric> metric = std::nullopt);

/// Cover of an atomic poset's own ground set by the dual cones of its atoms,
/// indexed by atom labels. The combinatorial stand-in for the cover of |P|
/// by open stars of vertices.
Cover dual_cone_cover(const Poset& p);

/// A family of index subsets of a cover, as a poset under inclusion plus the
/// member subsets themselves (sorted index lists, aligned with the poset).
struct SubsetPoset {
  Poset poset;
  std::vector<std::vector<int>> members;

  int index_of_member(const std::vector<int>& m) const;
};

/// Nerve: index subsets with nonempty intersection, ordered by inclusion.
SubsetPoset nerve(const Cover& c, size_t max_simplices = 4000000);

/// Delta_C(T) = {i : T ⊆ U_i}; NotCovered when empty (T in no element).
std::vector<int> delta(const Cover& c, const std::vector<int>& point_set);
std::vector<int> delta_point(const Cover& c, int point);

/// st(U_i, C) = union of members meeting U_i.
std::vector<uint8_t> star_of_set(const Cover& c, int set_idx);
/// st(x, C) = union of members containing x.
std::vector<uint8_t> star_of_point(const Cover& c, int point);

/// Plain: every point star is inside a member of D.
bool star_refines(const Cover& c, const Cover& d);
/// Strong: every set star is inside a member of D.
bool strongly_star_refines(const Cover& c, const Cover& d);
/// For every E ⊆ D, C ∩ (∪E) star-refines E as covers of ∪E.
bool hereditarily_star_refines(const Cover& c, const Cover& d);
/// For every F ⊆ D with ∩F ⊆ ∪(D\F), C ∩ (∩F) star-refines (D\F) ∩ (∩F).
bool weakly_hereditarily_star_refines(const Cover& c, const Cover& d);

/// Strict shrinking: U_D = X \ st(X\U, D), same index set. Requires D to
/// star-refine C (NotStarRefinement otherwise); the result still covers and
/// satisfies st(U_D, D) ⊆ U.
Cover shrink(const Cover& c, const Cover& d);

/// Intersection poset: nonempty B with ∩B nonempty and contained in no
/// single member outside B.
SubsetPoset ip(const Cover& c);
/// Venn diagram: nonempty B with ∩B not inside the union of the others.
SubsetPoset vd(const Cover& c);

/// Canonical bonding map N(C) -> N(D)^#, sigma -> [Delta_D(∪sigma),
/// Delta_D(∩sigma)]. Requires C to star-refine D (checked).
struct Bonding {
  SubsetPoset nerve_c;
  SubsetPoset nerve_d;
  Subdivision nerve_d_sub;  // canonical(N(D))
  MonotoneMap map;          // N(C) -> N(D)^#
  // For each element of N(C): the image interval's endpoints as members of N(D).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> endpoints;
};

Bonding bonding(const Cover& c, const Cover& d);

/// Do both endpoints of every image interval land in the given family
/// (e.g. ip(D) or vd(D))? The "image inside F^#" certificate.
bool bonding_lands_in(const Bonding& b, const SubsetPoset& family);

/// Largest lambda such that every open ball B(x,lambda) lies in some member;
/// nullopt when some member is the whole ground (every radius works).
/// Requires a metric on the cover's ground.
std::optional<Rat> lebesgue(const Cover& c);

/// Partition-of-unity nerve map f_U(x) = min(d(x, X\U)/lambda, 1) with
/// lambda a Lebesgue number of D. Requires D to star-refine C and carries
/// the target nerve along. Coordinates of the returned points, read through
/// the atomic injection of N(C), are positive exactly on Delta_C(x) and 1 on
/// Delta_{shrink(C,D)}(x).
struct NervePou {
  SubsetPoset nerve_c;
  BasePtr nerve_base;
  std::vector<RPoint> points;  // per ground point
};

NervePou nerve_pou(const Cover& c, const Cover& d);

}  // namespace osc
