#pragma once

#include <cstdint>

#include "plab/permutation.hpp"
#include "plab/process.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// Outcome of comparing a discretized process against its source ensemble.
/// sup_deviation is the empirical A_n = sup over particles and grid times of
/// |2 pos_t(i)/n - 1 - X_{pi(i)}(t)|; bound is the in-probability estimate
/// 2 n^{-1/4} + 2 n^{-1}; hold tests the summable event A_n <= 4 n^{-1/4}.
struct DeviationReport {
    int n = 0;
    double sup_deviation = 0.0;
    double bound = 0.0;
    bool hold = false;
    std::uint64_t seed = 0;
};

/// Rank discretizer together with the time-0 ordering permutation pi
/// (pi(i) = index of the path that is i-th smallest at time 0, 1-based),
/// materialized so callers can re-align source paths with particles.
struct DiscretizeResult {
    PermutationProcess process;
    Permutation pi;
};

/// Turns an ensemble of n i.i.d. sample paths on the uniform grid {i/n} into
/// a permutation process: particle i is the path that is i-th smallest at
/// time 0, and snapshot t arranges particles by their path values at t/n.
/// Rank ties are broken by a seed-deterministic per-path uniform, constant
/// across slices, so constant ensembles discretize to the identity process.
/// Requires path count = grid intervals = n; throws std::invalid_argument
/// otherwise and std::runtime_error if tie-breaking collides.
DiscretizeResult discretize(const TrajectoryEnsemble& source, std::uint64_t seed);

/// Deviation of a discretized process from its source over the grid.
/// Recomputes pi from the source's time-0 slice; use the overload when the
/// DiscretizeResult is at hand.
DeviationReport deviation_report(const PermutationProcess& proc,
                                 const TrajectoryEnsemble& source);
DeviationReport deviation_report(const DiscretizeResult& d, const TrajectoryEnsemble& source);

/// Resamples an ensemble onto the uniform n-grid with linear interpolation
/// (the Lin(n, .) operator). Sup distance to the original is at most twice
/// the modulus of continuity at 1/n.
TrajectoryEnsemble linearize(const TrajectoryEnsemble& e, int n);

} // namespace plab
