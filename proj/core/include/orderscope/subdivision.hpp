#pragma once

#include <memory>

#include "orderscope/poset.hpp"

namespace osc {

/// Interval [lo,hi] of a base poset, lo <= hi.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool operator==(const Interval&) const = default;
};

/// Canonical subdivision P^# together with the bookkeeping that relates it
/// to its base: element i of `sub` is the interval `iv[i]` of `base`.
///
/// Order orientation: [s,t] <= [s',t'] iff s' <= s and t <= t' (interval
/// containment, smaller interval below). Atoms are exactly the [p,p].
struct Subdivision {
  std::shared_ptr<const Poset> base;
  Poset sub;
  std::vector<Interval> iv;

  int index_of_interval(int lo, int hi) const;
};

Subdivision canonical(const Poset& p);
Subdivision canonical(std::shared_ptr<const Poset> p);

/// Canonical subdivision of a preposet: the subposet of canonical(⟨P⟩) on
/// intervals whose endpoints are related in P itself (equal or an edge).
/// For a transitively closed input this is all of canonical(⟨P⟩).
Subdivision canonical_preposet(const Preposet& p);

/// Barycentric subdivision: poset of nonempty chains (cliques, for a
/// preposet) ordered by inclusion. Labels are "{a,b,...}" in base order.
Poset barycentric(const Preposet& p);
Poset barycentric(const Poset& p);

/// (P^#)*: the dual of the canonical subdivision.
Poset h_dual(const Poset& p);

/// n-fold canonical subdivision. The ladder records every stage so that
/// realization maps can walk down or up one stage at a time.
struct Ladder {
  std::shared_ptr<const Poset> bottom;
  std::vector<Subdivision> steps;  // steps[k]: base = stage k, sub = stage k+1

  const Poset& top() const;
  int depth() const { return static_cast<int>(steps.size()); }
};

Ladder iterate_canonical(const Poset& p, int n, size_t max_elements = 200000);

/// Functor on maps: [s,t] -> [f s, f t] between canonical subdivisions.
/// Output's source/target are canonical(f.source).sub / canonical(f.target).sub.
MonotoneMap subdiv_map(const MonotoneMap& f);

}  // namespace osc
