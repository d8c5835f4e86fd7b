#include "plab/process.hpp"

#include <stdexcept>
#include <utility>

namespace plab {

PermutationProcess PermutationProcess::from_snapshots(std::vector<Permutation> snapshots) {
    if (snapshots.empty())
        throw std::invalid_argument("PermutationProcess: no snapshots");
    const int n = snapshots.front().size();
    if (snapshots.front() != Permutation::identity(n))
        throw std::invalid_argument("PermutationProcess: snapshots[0] must be the identity");
    for (const auto& s : snapshots)
        if (s.size() != n)
            throw std::invalid_argument("PermutationProcess: mixed permutation sizes");
    PermutationProcess p;
    p.snapshots_ = std::move(snapshots);
    return p;
}

PermutationProcess process_from_word(const SwapWord& w) {
    w.validate();
    std::vector<Permutation> snaps;
    snaps.reserve(w.positions.size() + 1);
    snaps.push_back(Permutation::identity(w.n));
    for (int pos : w.positions)
        snaps.push_back(apply_swap(snaps.back(), pos));
    return PermutationProcess::from_snapshots(std::move(snaps));
}

TrajectoryEnsemble trajectories(const PermutationProcess& proc) {
    const int t_max = proc.t_max();
    if (t_max < 1)
        throw std::invalid_argument("trajectories: degenerate process (t_max = 0)");
    const int n = proc.n();
    std::vector<double> values(static_cast<std::size_t>(n) * (static_cast<std::size_t>(t_max) + 1));
    const std::size_t stride = static_cast<std::size_t>(t_max) + 1;
    for (int t = 0; t <= t_max; ++t) {
        const auto word = proc.snapshot(t).word();
        for (int pos = 1; pos <= n; ++pos) {
            const int particle = word[static_cast<std::size_t>(pos) - 1];
            values[static_cast<std::size_t>(particle - 1) * stride + static_cast<std::size_t>(t)] =
                2.0 * pos / n - 1.0;
        }
    }
    return TrajectoryEnsemble::create(Partition::uniform(t_max), n, std::move(values));
}

} // namespace plab
