#pragma once

#include <vector>

#include "plab/permutation.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// Sequence of t_max+1 arrangements of S_n with snapshots[0] = identity.
/// snapshot words are read position -> particle label, so consecutive
/// snapshots of swap-generated processes differ by exchanging two adjacent
/// entries.
class PermutationProcess {
public:
    /// Throws std::invalid_argument unless snapshots is nonempty, all of one
    /// size, and snapshots[0] is the identity.
    static PermutationProcess from_snapshots(std::vector<Permutation> snapshots);

    int n() const { return snapshots_.front().size(); }
    int t_max() const { return static_cast<int>(snapshots_.size()) - 1; }
    const Permutation& snapshot(int t) const { return snapshots_[static_cast<std::size_t>(t)]; }
    const std::vector<Permutation>& snapshots() const { return snapshots_; }

private:
    std::vector<Permutation> snapshots_;
};

/// Applies the word's swaps one at a time starting from the identity;
/// t_max = word length (the empty word gives the single identity snapshot).
PermutationProcess process_from_word(const SwapWord& w);

/// Rescaled particle trajectories on the uniform grid {t/t_max}: path i at
/// grid time t/t_max is 2*pos_t(i)/n - 1 where pos_t(i) is the position of
/// particle i in snapshot t. At every grid time the path values form the set
/// {2i/n - 1 : i in [n]}. Throws for degenerate processes (t_max = 0).
TrajectoryEnsemble trajectories(const PermutationProcess& proc);

} // namespace plab
