#pragma once

#include "orderscope/poset.hpp"

namespace osc {

/// k-element chain c1 < c2 < ... < ck.
Poset chain_poset(int k, const std::string& prefix = "c");
/// k incomparable elements.
Poset antichain_poset(int k, const std::string& prefix = "a");

/// Componentwise order on pairs; labels "(a,b)".
Poset product(const Poset& p, const Poset& q);
Preposet preposet_product(const Preposet& p, const Preposet& q);

/// P + Q: every element of P below every element of Q. Label sets must be
/// disjoint (LabelClash otherwise).
Poset ordinal_sum(const Poset& p, const Poset& q);

/// Coproduct: side-by-side, no cross relations. LabelClash on collision.
Poset disjoint_union(const Poset& p, const Poset& q);

/// Adjoin a new top; LabelClash if the label exists.
Poset cone(const Poset& p, const std::string& top_label = "<1>");
/// Adjoin a new bottom.
Poset dual_cone(const Poset& p, const std::string& bottom_label = "<0>");

/// Reverse the order. Labels unchanged.
Poset dual(const Poset& p);
Preposet dual(const Preposet& p);

/// Join P*Q: the subpreposet C*P x Q ∪ P x C*Q of C*P x C*Q, i.e. all pairs
/// except (0,0).
Preposet join_preposet(const Preposet& p, const Preposet& q);

/// Co-deleted prejoin P ⊞ P*. Ground set P ⊔ P*; relations read the
/// preposet's own relation (edge or equal): p ⪯ q iff p <= q; p* ⪯ q* iff
/// p >= q; p* ⪯ q never; p ⪯ q* iff p <= q or p >= q.
Preposet codeleted_prejoin(const Preposet& p);

/// Star suffix the prejoin appends to the copied labels ("*" unless the
/// input already carries trailing stars, as iterated prejoins do).
std::string codeleted_star_marker(const Preposet& p);

enum class CylinderVariant { Lower, Upper };

/// Mapping cylinder of f. Ground set = source ⊔ target; edges are the two
/// copies' edges plus f(p) ≺ p (Lower: range below domain) or p ≺ f(p)
/// (Upper). Domain labels get a prime suffix when the label sets collide.
Preposet mapping_cylinder(const MonotoneMap& f, CylinderVariant variant);

/// Huge mapping cylinder: transitive closure of MC(F) where
/// F : P x 2^S -> Q x 2^S, F(p,T) = (f(p), ⌊p⌋), S the ground set of P.
/// Exponential in |P|; throws SizeBound past `max_elements`.
Poset hmc(const MonotoneMap& f, size_t max_elements = 4096);

/// Does f send infima to infima (checked over all subsets of the source
/// that have one)? Used as the hypothesis of the hmc completeness law.
bool preserves_infima(const MonotoneMap& f);

}  // namespace osc
