#pragma once

#include <span>
#include <vector>

#include "plab/partition.hpp"

namespace plab {

/// m sample paths on a shared time grid, values in [-1,1], linear
/// interpolation between grid times. Storage is a flat row-major m x (k+1)
/// matrix so that large ensembles stay allocation-friendly.
class TrajectoryEnsemble {
public:
    /// Validating constructor: values.size() must equal m*(k+1) and every
    /// value must lie in [-1,1].
    static TrajectoryEnsemble create(Partition grid, int paths, std::vector<double> values);

    const Partition& grid() const { return grid_; }
    int path_count() const { return paths_; }
    int grid_size() const { return static_cast<int>(grid_.times().size()); }

    std::span<const double> path(int i) const {
        const std::size_t k = static_cast<std::size_t>(grid_size());
        return {values_.data() + static_cast<std::size_t>(i) * k, k};
    }

    std::span<const double> values() const { return values_; }

private:
    Partition grid_ = Partition::uniform(1);
    int paths_ = 0;
    std::vector<double> values_;
};

/// Linear interpolation of path path_index at time t in [0,1]; exact at grid
/// times. Throws std::invalid_argument for t outside [0,1] or a bad index.
double eval_path(const TrajectoryEnsemble& e, int path_index, double t);

/// Ensemble average over paths of sup_{|s-t| <= delta} |Y(s)-Y(t)|. For
/// piecewise-linear paths the supremum is attained with s,t on the grid or
/// at distance exactly delta from a grid point, and that is what is scanned,
/// so the value is exact. Non-decreasing in delta and bounded by 2.
double modulus_of_continuity(const TrajectoryEnsemble& e, double delta);

} // namespace plab
