#pragma once

#include <string>
#include <vector>

#include "orderscope/poset.hpp"

namespace osc {

/// Finite simplicial complex, all faces listed per dimension.
/// Simplices are sorted vertex-index lists.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::vector<int>>> faces;  // faces[k] = k-simplices

  int dim() const { return static_cast<int>(faces.size()) - 1; }
  int index_of_face(int k, const std::vector<int>& f) const;
};

/// Close a set of simplices downward and sort everything.
SimplicialComplex complex_from_simplices(std::vector<std::string> vertices,
                                         const std::vector<std::vector<int>>& simplices);

/// Order complex: vertices are the elements, simplices the nonempty chains
/// (cliques for a preposet).
SimplicialComplex order_complex(const Poset& p);
SimplicialComplex order_complex(const Preposet& p);

/// Betti numbers over the 2-element field (ranks of boundary-matrix
/// homology), index k = rank H_k. Unreduced: a point has betti = {1}.
std::vector<long> betti_z2(const SimplicialComplex& k);
/// Reduced: subtracts 1 from b_0.
std::vector<long> reduced_betti_z2(const SimplicialComplex& k);

/// Is the given k-chain (list of k-simplices, mod-2 multiset) a cycle?
bool is_cycle_z2(const SimplicialComplex& k, int dim,
                 const std::vector<std::vector<int>>& chain);
/// Does the k-cycle bound, i.e. is it in the image of the (k+1)-boundary?
bool is_boundary_z2(const SimplicialComplex& k, int dim,
                    const std::vector<std::vector<int>>& chain);

}  // namespace osc
