#pragma once

#include "orderscope/covers.hpp"
#include "orderscope/metric_paths.hpp"
#include "orderscope/realization.hpp"

namespace osc {

/// A map sampled on a finite metric space, with values in a realization and
/// a certified continuity modulus: d(x,y) < gamma implies
/// dist(f x, f y) < delta on the sample (validated on construction).
struct SampledMap {
  FiniteMetric domain;
  BasePtr codomain;
  std::vector<RPoint> values;  // aligned with domain.points
  Rat gamma, delta;
};

SampledMap make_sampled_map(FiniteMetric domain, BasePtr codomain,
                            std::vector<RPoint> values, Rat gamma, Rat delta);

/// Per-sample-point certificate of the pipeline output:
///   phi      — the replacement value, a point of |Q|
///   q_top    — the element of Q^{#n} whose cone hosts both phi and f(x)
///   contained_f / contained_phi — the two membership checks
///   closeness — dist(phi, f(x)), guaranteed <= 2^{1-n}
struct HahnCert {
  int sample;
  RPoint phi;
  int q_top;
  bool contained_f = false;
  bool contained_phi = false;
  Rat closeness;
};

struct HahnResult {
  int n;
  Rat bound;  // 2^{1-n}
  Ladder q_ladder;
  std::vector<HahnCert> certs;
};

/// The nerve pipeline that replaces a (gamma,delta)-continuous sampled map
/// into |Q| by a certified-close one:
///   X -> |N(E)| -> |IP(D)^#| ⊆ |IP(C)^#| -> |IP(C)| ≅ |Q^{#n}| -> |Q|
/// with E the gamma/4-ball cover of the domain, C the dual-cone-of-atoms
/// cover of Q^{#n} and D its pullback under f. Preconditions (checked,
/// PreconditionFailed names the violated one): Q conditionally complete,
/// n >= 1, delta <= 2^{-n-1}, E star-refines D.
HahnResult hahn_phi(const SampledMap& f, const Poset& q, int n);

struct MonotoneApproxResult {
  MonotoneMap g;  // P^{#m} -> Q^{#(n+1)}  (the pipeline's honest target)
  Ladder p_ladder;
  Ladder q_ladder;  // depth n+1
  Rat bound;        // 2^{1-n}
  std::vector<HahnCert> certs;
};

/// Monotone approximation g : P^{#m} -> Q^{#(n+1)} of a sampled map
/// |P| -> |Q|, with the realized composite h ∘ |g| ∘ h^{-1} certified
/// 2^{1-n}-close to f on the sample. `sample` gives the domain points as
/// points of |P| (aligned with f.domain); it must contain every vertex of
/// P^{#m}. Moduli bookkeeping (checked): delta < 2^{-n-1}, 2^{-m+1} < gamma/4.
MonotoneApproxResult monotone_approx(const SampledMap& f, const std::vector<RPoint>& sample,
                                     const Poset& p, const Poset& q, int m, int n);

/// Inverse tower of nerves over a finite metric space: covers, their nerves,
/// canonical bonding maps one level down, and the table of thread points.
struct Tower {
  FiniteMetric space;
  std::vector<Cover> covers;
  std::vector<SubsetPoset> nerves;
  std::vector<BasePtr> nerve_bases;
  std::vector<Bonding> bondings;          // level i+1 -> i
  std::vector<std::vector<RPoint>> lambda;  // lambda[i][x]: level-i thread point
};

/// Requires each C_{i+1} to star-refine C_i (NotStarRefinement names the
/// level). lambda[i][x] is the top-level simplex point of x pushed down to
/// level i; its distance to the true thread point is at most 2^{1-(top-i)}.
Tower nerve_tower(const FiniteMetric& x, const std::vector<Cover>& basis);

/// Push a point of |N(C_{level})| down one level.
RPoint tower_push(const Tower& t, int level, const RPoint& pt);

/// Certified diameter of p^{i+n}_i(|s_{i+n}(x)|): images of all faces of the
/// level-(i+n) simplex of x, pushed down to level i, max pairwise distance.
Rat tower_simplex_image_diameter(const Tower& t, int i, int n, int point);

}  // namespace osc
