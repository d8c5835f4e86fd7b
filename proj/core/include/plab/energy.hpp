#pragma once

#include <functional>
#include <vector>

#include "plab/partition.hpp"
#include "plab/permuton.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// Discrete Dirichlet energy over an explicit partition: per-interval terms
/// d^2/gap and their sum. The continuum energy is the supremum over all
/// partitions; refinement monotonicity makes any fixed grid a certified
/// lower bound.
struct EnergyReport {
    Partition partition = Partition::uniform(1);
    std::vector<double> per_interval;
    double total = 0.0;
};

/// L^2 energy of a trajectory ensemble over pi, with expectations replaced by
/// ensemble averages: per_interval[i] = avg_paths (X(t_i)-X(t_{i-1}))^2 / gap.
/// Paths are evaluated by linear interpolation between ensemble grid times.
EnergyReport ensemble_energy(const TrajectoryEnsemble& e, const Partition& pi);

/// Squared-distance oracle between two discrete permutons. Must be symmetric
/// and non-negative.
using SquaredDistanceFn =
    std::function<double(const DiscretePermuton&, const DiscretePermuton&)>;

/// Energy of a permuton-valued path sampled at pi's times:
/// per_interval[i] = dist(ms[i-1], ms[i]) / gap. ms.size() must equal the
/// number of partition times.
EnergyReport permuton_path_energy(const std::vector<DiscretePermuton>& ms,
                                  const Partition& pi, const SquaredDistanceFn& dist);

struct SigmaEnergyBound {
    double energy = 0.0;       ///< recentered ensemble energy over pi
    double sigma_energy = 0.0; ///< energy of t -> sqrt(avg X(t)^2) after recentering
};

/// Empirical form of the one-dimensional lower bound L(X) >= L(sigma) for
/// centered processes. The ensemble is recentered at each partition time
/// (subtract the empirical mean) before both quantities are computed, so the
/// inequality energy >= sigma_energy holds exactly (Cauchy-Schwarz on the
/// empirical averages), up to float roundoff.
SigmaEnergyBound sigma_energy_bound(const TrajectoryEnsemble& e, const Partition& pi);

} // namespace plab
