#pragma once

#include "orderscope/realization.hpp"

namespace osc {

/// Output of the certified three-leg path bound for the quotient path
/// metric. The quotient metric itself is an infimum over unbounded path
/// lengths and is never computed; the library exposes the exact sandwich
///   dist(x,y) <= d_infinity(x,y) <= d3_upper(x,y) <= 9 dist(x,y).
///
/// x_prime and y_prime live over the hat base P^ = C*CP (fresh bottom and
/// top adjoined); x_hat / y_hat are x and y transported there. Each of
/// {x,x'}, {x',y'}, {y',y} lies in the hull of a single chain of P^.
struct D3Result {
  Rat value;  // dist(x,x') + dist(x',y') + dist(y',y)
  BasePtr hat_base;
  RPoint x_hat, y_hat;
  RPoint x_prime, y_prime;
  std::vector<int> mid_chain;  // the intermediary chain C in P^, ascending
};

D3Result d3_upper(const RPoint& x, const RPoint& y);

/// The LCU staircase pair (x', y'). Requires 1/(4*delta) integral
/// (DeltaNotGrid) and dist(x,y) < delta (TooFar). The outputs do not depend
/// on which chains witness x and y, satisfy dist(x,x') <= 3*delta and
/// dist(y,y') <= 3*delta, and each of {x,x'}, {x',y'}, {y',y} lies in a
/// single chain hull. Built from the proof's index construction; a
/// coordinatewise value map is kept in the tests as the oracle.
struct LcuResult {
  RPoint x_prime, y_prime;
};

LcuResult lcu_pair(const RPoint& x, const RPoint& y, const Rat& delta);

/// Staircase pair computed over explicit witness chains (each containing the
/// point's support). Output equals lcu_pair's regardless of the chains; the
/// verification suites recompute through enlarged chains to check it.
LcuResult lcu_pair_chains(const RPoint& x, const RPoint& y, const Rat& delta,
                          const std::vector<int>& chain_a, const std::vector<int>& chain_b);

/// Is the union of the two points' supports a chain of the base's closure?
bool same_chain_hull(const RPoint& x, const RPoint& y);

}  // namespace osc
