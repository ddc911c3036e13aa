#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orderscope/error.hpp"

namespace osc {

/// Finite preposet: an acyclic relation digraph on a labelled ground set.
/// Chains are the cliques of the underlying undirected graph; acyclicity
/// forces a unique total order on each clique.
struct Preposet {
  std::vector<std::string> labels;
  std::vector<uint8_t> adj;  // n*n, adj[i*n+j] != 0 iff labels[i] ≺ labels[j]

  int n() const { return static_cast<int>(labels.size()); }
  bool edge(int i, int j) const { return adj[static_cast<size_t>(i) * labels.size() + j] != 0; }
  /// i and j comparable (equal, or an edge either way): the clique relation.
  bool related(int i, int j) const { return i == j || edge(i, j) || edge(j, i); }
  int index_of(const std::string& label) const;

  bool operator==(const Preposet&) const = default;
};

/// Finite poset: reflexive, antisymmetric, transitive boolean matrix.
struct Poset {
  std::vector<std::string> labels;
  std::vector<uint8_t> le;  // n*n, le[i*n+j] != 0 iff labels[i] <= labels[j]

  int n() const { return static_cast<int>(labels.size()); }
  bool leq(int i, int j) const { return le[static_cast<size_t>(i) * labels.size() + j] != 0; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  int index_of(const std::string& label) const;

  bool operator==(const Poset&) const = default;
};

/// Build a preposet from labels and edge pairs. Throws LabelClash on
/// duplicate labels, BadInput on unknown labels or self-edges, and
/// DirectedCycle (message carries a witness path) when the digraph has one.
Preposet validate_preposet(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& edges);

/// Smallest poset containing all edges of P (reflexive-transitive closure).
Poset transitive_closure(const Preposet& p);

/// Read a poset from a generating relation: closure of the edges, with the
/// same acyclicity check. Equivalent to transitive_closure(validate_preposet).
Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

/// The strict pairs of a poset, viewed as a (transitively closed) preposet.
Preposet as_preposet(const Poset& p);

/// All edge pairs (generators) of a preposet, by label.
std::vector<std::pair<std::string, std::string>> edge_pairs(const Preposet& p);
/// Covering pairs (transitive reduction) of a poset, by label.
std::vector<std::pair<std::string, std::string>> hasse_pairs(const Poset& p);

// ---------------------------------------------------------------------------
// Order-theoretic predicates
// ---------------------------------------------------------------------------

std::vector<int> minimal_elements(const Poset& p);
std::vector<int> maximal_elements(const Poset& p);

/// Atoms = minimal elements.
std::vector<int> atoms(const Poset& p);

/// ⌊p⌋ = {q : q <= p}
std::vector<int> cone_of(const Poset& p, int e);
/// ⌈p⌉ = {q : q >= p}
std::vector<int> dual_cone_of(const Poset& p, int e);
/// st(p) = ⌊⌈p⌉⌋
std::vector<int> star_of(const Poset& p, int e);

/// Least upper bound of a nonempty subset, if it exists.
std::optional<int> least_upper_bound(const Poset& p, const std::vector<int>& subset);
std::optional<int> greatest_lower_bound(const Poset& p, const std::vector<int>& subset);

/// Every element is the least upper bound of the atoms below it. This is the
/// hypothesis under which the atom map p -> A(p) is an order embedding and
/// star covers of |P| are faithfully described by atom sets.
bool is_atomic(const Poset& p);

/// Every nonempty subset with an upper bound has a least upper bound.
/// Computed via bounded pairs, which is equivalent on finite posets (the
/// exhaustive-subset form is kept as a test oracle).
bool is_conditionally_complete(const Poset& p);

/// Does the set of indices form a chain (totally ordered)?
bool is_chain(const Poset& p, const std::vector<int>& subset);

/// Is `chain` a chain of the preposet, i.e. a clique of its edge graph?
bool is_clique_chain(const Preposet& p, const std::vector<int>& subset);

/// All nonempty chains of a preposet (cliques), each sorted by the closure
/// order. Intended for small inputs; throws SizeBound past `bound` chains.
std::vector<std::vector<int>> all_chains(const Preposet& p, size_t bound = 2000000);
std::vector<std::vector<int>> all_chains(const Poset& p, size_t bound = 2000000);

/// Is j (aligned with p's elements, values subsets of an ambient set) an
/// order embedding: x <= y iff j(x) ⊆ j(y)? Throws NotInjective when j is
/// not injective.
bool is_embedding(const Poset& p, const std::vector<std::set<std::string>>& j);

/// Standard embedding j_P : p -> ⌊p⌋ (as label sets).
std::vector<std::set<std::string>> standard_embedding(const Poset& p);

// ---------------------------------------------------------------------------
// Monotone maps
// ---------------------------------------------------------------------------

/// Element map between posets; monotone on construction. Preposet sources or
/// targets take part through their transitive closures.
struct MonotoneMap {
  Poset source;
  Poset target;
  std::vector<int> assign;  // index in target per source element

  bool operator==(const MonotoneMap&) const = default;
};

bool is_monotone(const Poset& src, const Poset& tgt, const std::vector<int>& assign);

/// Throws NotMonotone when the assignment violates u <= v => f(u) <= f(v).
MonotoneMap make_monotone_map(Poset src, Poset tgt, std::vector<int> assign);
MonotoneMap make_monotone_map(Poset src, Poset tgt,
                              const std::vector<std::pair<std::string, std::string>>& assign);

MonotoneMap identity_map(const Poset& p);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);  // g ∘ f

/// Order isomorphism check via backtracking; intended for small posets.
bool is_isomorphic(const Poset& a, const Poset& b);

}  // namespace osc
