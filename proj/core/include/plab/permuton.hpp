#pragma once

#include <span>
#include <vector>

#include "plab/partition.hpp"
#include "plab/permutation.hpp"

namespace plab {

/// Plain planar point set (structure-of-arrays), no invariants.
struct PointSet {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

/// Equal-weight point set in [-1,1]^2; the empirical stand-in for a
/// permuton. Each point carries weight 1/m.
class DiscretePermuton {
public:
    /// Throws std::invalid_argument if the set is empty, sizes mismatch, or
    /// any coordinate falls outside [-1,1].
    static DiscretePermuton from_points(PointSet ps);

    std::size_t size() const { return pts_.size(); }
    std::span<const double> xs() const { return pts_.x; }
    std::span<const double> ys() const { return pts_.y; }
    const PointSet& points() const { return pts_; }

private:
    PointSet pts_;
};

/// m planar paths over a shared grid, coordinates in [-1,1]^2. Flat
/// row-major storage like TrajectoryEnsemble, one matrix per coordinate.
class PlanarEnsemble {
public:
    static PlanarEnsemble create(Partition grid, int paths,
                                 std::vector<double> xs, std::vector<double> ys);

    const Partition& grid() const { return grid_; }
    int path_count() const { return paths_; }
    int grid_size() const { return static_cast<int>(grid_.times().size()); }

    std::span<const double> path_x(int i) const {
        const std::size_t k = static_cast<std::size_t>(grid_size());
        return {xs_.data() + static_cast<std::size_t>(i) * k, k};
    }
    std::span<const double> path_y(int i) const {
        const std::size_t k = static_cast<std::size_t>(grid_size());
        return {ys_.data() + static_cast<std::size_t>(i) * k, k};
    }

    /// Point set of all paths at grid index j.
    PointSet slice(int j) const;

private:
    Partition grid_ = Partition::uniform(1);
    int paths_ = 0;
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// Empirical measure of a permutation: n points (2i/n - 1, 2p(i)/n - 1).
DiscretePermuton empirical_permuton(const Permutation& p);

/// Pointwise rotation by pi/4: ((x-y)/sqrt2, (x+y)/sqrt2). The result is a
/// plain point set since coordinates may leave [-1,1]; re-validate with
/// DiscretePermuton::from_points when the rotation is claimed to be a
/// permuton again.
PointSet rotate_45(const DiscretePermuton& p);

} // namespace plab
