#pragma once

#include <vector>

#include "plab/stats.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// Empirical second-moment curve avg (X(t)-X(0))^2 over the ensemble grid
/// against the Archimedean target (2/3)(1 - cos(pi t)).
struct ConjectureReport {
    std::vector<double> t_values;
    std::vector<double> empirical;
    std::vector<double> target;
    double sup_gap = 0.0;
};

ConjectureReport second_moment_curve(const TrajectoryEnsemble& e);

/// Averages several equally-sized curve reports (same grid), e.g. one per
/// sampled process.
ConjectureReport average_curves(const std::vector<ConjectureReport>& reports);

/// Counts (pair, path) combinations violating the Holder envelope
/// |T(t)-T(s)| <= sqrt(8) |t-s|^{1/2} + delta over all grid pairs. Linearize
/// onto a coarse grid first when the ensemble grid is huge.
struct HolderCheck {
    long long violations = 0;
    long long total_pairs = 0;
};
HolderCheck holder_check(const TrajectoryEnsemble& e, double delta);

/// One-sample KS of the interpolated ensemble values at time t against
/// Uniform[-1,1].
KsResult marginal_uniformity(const TrajectoryEnsemble& e, double t);

/// The periodic reversing shift: Y(t) = (-1)^floor(eps+t) X(eps+t mod 1),
/// resampled on the source grid. Diagnostic fixture for shift invariance of
/// stationary trajectory processes.
TrajectoryEnsemble shift_ensemble(const TrajectoryEnsemble& e, double eps);

} // namespace plab
