#pragma once

// Internal machinery shared by the chain-pair distance formula, the
// three-leg path bound and the staircase pair: the two support chains
// extended by a common fresh bottom and top, their coordinate profiles, and
// the interleaving pairs of the extended chains. Not installed.

#include <vector>

#include "orderscope/realization.hpp"

namespace osc::detail {

constexpr int kBot = -1;
constexpr int kTop = -2;

struct Hatted {
  // Positions are 1-based: a[1] = kBot, a[m] = kTop, a[k] = chain element id.
  std::vector<int> a, b;        // size m+1 / n+1; index 0 unused
  std::vector<Rat> alpha, beta; // alpha[k] for 2..m (alpha[m] = 0); index 0,1 unused
  int m = 0, n = 0;
  // Interleaving pairs (positions), sorted by k; z marks equality pairs.
  std::vector<std::pair<int, int>> pairs, primed;
  std::vector<int> z, zp;
};

Hatted make_hatted(const RPoint& x, const RPoint& y);

/// Same with explicit witness chains (each must contain the point's support).
Hatted make_hatted_chains(const RPoint& x, const RPoint& y, const std::vector<int>& chain_a,
                          const std::vector<int>& chain_b);

}  // namespace osc::detail
