#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "orderscope/poset.hpp"
#include "orderscope/rat.hpp"
#include "orderscope/subdivision.hpp"

namespace osc {

/// Substrate of a geometric realization. For a preposet the original edge
/// digraph is kept (chains are its cliques) and all coordinates are taken in
/// the transitive closure, as in the embedding definition of |P|.
struct Base {
  std::optional<Preposet> pre;
  Poset closed;

  bool operator==(const Base&) const = default;
  int n() const { return closed.n(); }
};

using BasePtr = std::shared_ptr<const Base>;

BasePtr make_base(Poset p);
BasePtr make_base(Preposet p);
BasePtr make_base(const Subdivision& s);  // base over s.sub

/// A point of |P|: a strictly increasing chain with positive rational
/// weights summing to 1. Canonical form: no zero weights, no repeats.
struct RPoint {
  BasePtr base;
  std::vector<int> chain;    // ascending in base->closed (a clique when preposet)
  std::vector<Rat> weights;  // positive, sum 1
};

/// Validates and canonicalizes (sorts by the closure order, checks clique
/// membership for preposet bases, positivity, and total weight 1).
RPoint make_rpoint(BasePtr base, std::vector<int> chain, std::vector<Rat> weights);
RPoint make_rpoint_labels(BasePtr base, const std::vector<std::string>& chain,
                          const std::vector<Rat>& weights);
RPoint vertex_point(BasePtr base, int element);

/// An injection of the base's elements into subsets of an ambient set.
using Injection = std::vector<std::set<std::string>>;

Injection standard_injection(const Base& b);          // p -> ⌊p⌋ in ⟨P⟩
Injection atomic_injection(const Poset& p);           // p -> atoms below p
Injection dual_injection(const Poset& p);             // p -> complement of ⌈p⌉

/// Characteristic-function coordinates v_s = sum of weights of chain
/// elements whose cone contains s. Dense over the base's elements.
std::vector<Rat> coords(const RPoint& x);
/// Coordinates through an explicit injection, as a sparse label -> value map.
std::map<std::string, Rat> coords_j(const RPoint& x, const Injection& j);

/// Exact l-infinity distance of coordinate vectors. BaseMismatch when the
/// two points live over different bases.
Rat dist(const RPoint& x, const RPoint& y);
Rat dist_j(const RPoint& x, const RPoint& y, const Injection& j);

/// Witness data of the chain-pair distance formula: the interleaving pairs
/// of the two hatted chains, the equality index sets, and the Delta index
/// pairs the maximum ranges over.
struct ChainPairWitness {
  std::vector<std::pair<int, int>> pairs;         // (k_i, l_i)
  std::vector<std::pair<int, int>> primed_pairs;  // (k'_i, l'_i)
  std::vector<int> z, z_primed;                   // equality positions
  std::vector<std::pair<int, int>> delta;         // (k_i+1, l_{i+1})
  std::vector<std::pair<int, int>> delta_primed;  // (k'_{i+1}, l'_i+1)
};

/// Distance via the chain-pair formula
///   d(x,y) = max over Delta ∪ Delta' of |alpha_k - beta_l|
/// over the chains of x and y extended by a fresh bottom and top.
/// Agrees with dist() exactly.
std::pair<Rat, ChainPairWitness> dist_chain_formula(const RPoint& x, const RPoint& y);

/// Invert the coordinate embedding. Succeeds iff every positive superlevel
/// set is the cone of an element and those elements form a chain with top
/// value 1; otherwise throws NotInRealization naming the offending level.
RPoint decompose(BasePtr base, const std::vector<Rat>& v);
/// Non-throwing form.
std::optional<RPoint> try_decompose(BasePtr base, const std::vector<Rat>& v);

/// Realization of a monotone map: affine on chain hulls. Image chain merges
/// equal images and adds their weights. x must live over f's source poset.
RPoint map_point(const MonotoneMap& f, const RPoint& x);

/// The point of |P*| corresponding to x under the dual isometry (same chain
/// and per-element weights, order reversed). `dual_base` must be dual(P).
RPoint dual_point(const RPoint& x, BasePtr dual_base);

/// Transport a point along a subposet inclusion (chains and weights are kept;
/// elements are matched by label). Throws BadInput when a chain label is
/// missing or the inclusion does not preserve the chain's order.
RPoint rebase_subposet(const RPoint& x, BasePtr bigger);

// ---------------------------------------------------------------------------
// Subdivision homeomorphism h : |P^#| -> |P|
// ---------------------------------------------------------------------------

/// h on points: [s,s] -> vertex s, [s,t] -> midpoint of the segment s-t,
/// extended affinely over chain hulls. x lives over sd.sub.
RPoint h_down(const Subdivision& sd, const RPoint& x);

/// Exact inverse of h_down. Locates the containing cell by enumerating
/// maximal chains of D^# for the point's support chain D and solving exact
/// affine systems; ties on cell boundaries take the first cell in canonical
/// order (the result point is the same either way since h is a bijection).
RPoint h_up(const Subdivision& sd, const RPoint& x);

/// h_down / h_up through every stage of a ladder.
RPoint ladder_down(const Ladder& ld, const RPoint& x_over_top);
RPoint ladder_up(const Ladder& ld, const RPoint& x_over_bottom);

}  // namespace osc
