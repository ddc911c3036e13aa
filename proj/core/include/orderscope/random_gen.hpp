#pragma once

#include <functional>

#include "orderscope/covers.hpp"
#include "orderscope/realization.hpp"
#include "orderscope/rng.hpp"

namespace osc {

/// Random poset: Erdos-Renyi edges oriented along a random permutation
/// (hence acyclic), then transitive closure. edge_num/edge_den is the edge
/// probability.
Poset random_poset(Rng& rng, int n, uint64_t edge_num = 2, uint64_t edge_den = 5);

/// Random preposet: as above but keeping the generating digraph.
Preposet random_preposet(Rng& rng, int n, uint64_t edge_num = 2, uint64_t edge_den = 5);

/// Random maximal chain through a random element.
std::vector<int> random_maximal_chain(Rng& rng, const Poset& p);

/// Random point supported on a random subchain of a random maximal chain.
RPoint random_point(Rng& rng, BasePtr base, int weight_den = 64);

/// Random point whose support is contained in the given chain.
RPoint random_point_on_chain(Rng& rng, BasePtr base, const std::vector<int>& chain,
                             int weight_den = 64);

/// Random order embedding j : P -> 2^S. Every element gets a private label
/// plus inherited ones, which forces the embedding property; shared noise
/// labels are sprinkled on top.
Injection random_embedding(Rng& rng, const Poset& p);

/// Random monotone map between the two posets (greedy repair).
MonotoneMap random_monotone_map(Rng& rng, const Poset& src, const Poset& tgt);

/// Random finite metric: shortest-path closure of a random positive
/// symmetric matrix; exact rationals with denominator `den`.
FiniteMetric random_metric(Rng& rng, int n, int den = 8);

/// Random cover of the metric's points (member sets grown from random
/// seeds; always covers).
Cover random_cover(Rng& rng, const FiniteMetric& m, int n_sets);

/// Enumerate every poset on n labelled elements, presented with a fixed
/// topological labelling (each isomorphism class appears at least once).
/// Calls `fn` for each; n <= 7 is intended.
void for_each_poset(int n, const std::function<void(const Poset&)>& fn);

}  // namespace osc
