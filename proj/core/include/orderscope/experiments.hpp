#pragma once

#include "orderscope/approx.hpp"
#include "orderscope/report.hpp"

namespace osc {

/// Skew n-simplex boundary coverage: sup distance from |[n+1-chain]| to the
/// union X_n of proper-subchain hulls is exactly 1/(2n), attained at the
/// equal-gap point; sampled points never exceed it.
Report experiment_pigeonhole(int n, long samples = 64, uint64_t seed = 1);

/// Iterated co-deleted prejoin: the essential circle pushed through n
/// subdivisions has image of diameter <= 2^{-n}; at n = 1 the image cycle
/// is certified nonzero in mod-2 homology of the ambient order complex.
Report experiment_codeleted(int n);

/// Sphere versus nerve: for the triple ordinal sum of 2-antichains, the
/// star-of-atoms cover of Q_1 = P_3^# has a contractible nerve while the
/// Venn-diagram complex is a 2-sphere; the deformation retractions R_k are
/// verified simplicial step by step.
Report experiment_sphere_nerve(int n = 1);

Report experiment_isometry_fuzz(long trials, uint64_t seed);
Report experiment_chain_formula_fuzz(long trials, uint64_t seed);
Report experiment_metric_bounds(long trials, uint64_t seed);
Report experiment_factor2(long trials, uint64_t seed);
Report experiment_ipvd(int max_size);
Report experiment_bonding_fuzz(long trials, uint64_t seed);
Report experiment_lcu_fuzz(long trials, uint64_t seed);
Report experiment_hmc_fuzz(long trials, uint64_t seed);
Report experiment_hahn_fixture();
Report experiment_tower(const FiniteMetric& space, const std::vector<Cover>& covers);
/// The 8-point circle fixture used by the acceptance suite.
Report experiment_tower_circle();

}  // namespace osc
