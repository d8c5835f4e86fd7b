#include "plab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "plab/rng.hpp"

namespace plab {

namespace {

void check_uniform_square(const TrajectoryEnsemble& e) {
    const int n = e.path_count();
    if (e.grid().intervals() != n)
        throw std::invalid_argument("discretize: need path count = grid intervals = n");
    const auto ts = e.grid().times();
    for (int i = 0; i <= n; ++i)
        if (std::fabs(ts[static_cast<std::size_t>(i)] - static_cast<double>(i) / n) > 1e-12)
            throw std::invalid_argument("discretize: grid must be the uniform {i/n} grid");
}

// Slice-major copy of the ensemble values (blocked transpose; per-slice
// ranking on the path-major layout would stride by the whole grid).
std::vector<double> slice_major(const TrajectoryEnsemble& e) {
    const std::size_t n = static_cast<std::size_t>(e.path_count());
    const std::size_t k = static_cast<std::size_t>(e.grid_size());
    std::vector<double> sv(n * k);
    constexpr std::size_t B = 64;
    for (std::size_t t0 = 0; t0 < k; t0 += B) {
        const std::size_t t1 = std::min(t0 + B, k);
        for (std::size_t i = 0; i < n; ++i) {
            const auto path = e.path(static_cast<int>(i));
            for (std::size_t t = t0; t < t1; ++t) sv[t * n + i] = path[t];
        }
    }
    return sv;
}

struct RankKey {
    double value;
    float tiebreak;
    int idx;
};

// Path indices sorted by (value at slice, per-path tiebreak).
void rank_order(const double* slice_vals, int n, const std::vector<float>& tiebreak,
                std::vector<RankKey>& keys) {
    for (int i = 0; i < n; ++i)
        keys[static_cast<std::size_t>(i)] = {slice_vals[i], tiebreak[static_cast<std::size_t>(i)], i};
    std::sort(keys.begin(), keys.end(), [](const RankKey& a, const RankKey& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.tiebreak < b.tiebreak;
    });
    for (int i = 1; i < n; ++i)
        if (keys[static_cast<std::size_t>(i)].value == keys[static_cast<std::size_t>(i - 1)].value &&
            keys[static_cast<std::size_t>(i)].tiebreak == keys[static_cast<std::size_t>(i - 1)].tiebreak)
            throw std::runtime_error("discretize: duplicate values persist after tie perturbation");
}

} // namespace

DiscretizeResult discretize(const TrajectoryEnsemble& source, std::uint64_t seed) {
    check_uniform_square(source);
    const int n = source.path_count();

    // Per-path jitter, constant across slices: tied values rank in a fixed
    // random order, so ranks never churn inside tie groups and constant
    // ensembles discretize to the identity process.
    Rng rng(seed);
    std::vector<float> tiebreak(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tiebreak[static_cast<std::size_t>(i)] = static_cast<float>(rng.uniform01());

    const std::vector<double> sv = slice_major(source);
    std::vector<RankKey> keys(static_cast<std::size_t>(n));

    rank_order(sv.data(), n, tiebreak, keys);
    std::vector<int> order0(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) order0[static_cast<std::size_t>(r)] = keys[static_cast<std::size_t>(r)].idx;
    // label_of_path[j] = i when path j is the i-th smallest at time 0.
    std::vector<int> label_of_path(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        label_of_path[static_cast<std::size_t>(order0[static_cast<std::size_t>(r)])] = r + 1;

    std::vector<Permutation> snaps;
    snaps.reserve(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        if (t > 0) rank_order(sv.data() + static_cast<std::size_t>(t) * n, n, tiebreak, keys);
        std::vector<int> word(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            word[static_cast<std::size_t>(r)] =
                label_of_path[static_cast<std::size_t>(keys[static_cast<std::size_t>(r)].idx)];
        snaps.emplace_back(std::move(word), Permutation::unchecked_t{});
    }

    std::vector<int> pi(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) pi[static_cast<std::size_t>(r)] = order0[static_cast<std::size_t>(r)] + 1;
    return {PermutationProcess::from_snapshots(std::move(snaps)),
            Permutation::from_one_line(std::move(pi))};
}

namespace {

DeviationReport deviation_impl(const PermutationProcess& proc,
                               const TrajectoryEnsemble& source, const Permutation& pi) {
    const int n = proc.n();
    if (source.path_count() != n || proc.t_max() != source.grid().intervals())
        throw std::invalid_argument("deviation_report: process and source shapes mismatch");
    // path_at[i-1] = source path index of particle i.
    std::vector<int> path_at(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) path_at[static_cast<std::size_t>(i) - 1] = pi(i) - 1;

    const std::vector<double> sv = slice_major(source);
    double sup = 0.0;
    for (int t = 0; t <= proc.t_max(); ++t) {
        const auto word = proc.snapshot(t).word();
        const double* slice = sv.data() + static_cast<std::size_t>(t) * n;
        for (int pos = 1; pos <= n; ++pos) {
            const int particle = word[static_cast<std::size_t>(pos) - 1];
            const double traj = 2.0 * pos / n - 1.0;
            const double x = slice[path_at[static_cast<std::size_t>(particle) - 1]];
            sup = std::max(sup, std::fabs(traj - x));
        }
    }
    DeviationReport r;
    r.n = n;
    r.sup_deviation = sup;
    r.bound = 2.0 * std::pow(n, -0.25) + 2.0 / n;
    r.hold = sup <= 4.0 * std::pow(n, -0.25);
    return r;
}

} // namespace

DeviationReport deviation_report(const PermutationProcess& proc,
                                 const TrajectoryEnsemble& source) {
    // Recover pi from the time-0 ordering; plain value order (the
    // discretizer's tie jitter is irrelevant when values are distinct).
    const int n = source.path_count();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return source.path(a)[0] < source.path(b)[0];
    });
    for (int r = 1; r < n; ++r)
        if (source.path(idx[static_cast<std::size_t>(r)])[0] ==
            source.path(idx[static_cast<std::size_t>(r - 1)])[0])
            throw std::invalid_argument(
                "deviation_report: tied time-0 values; pass the DiscretizeResult overload");
    std::vector<int> pi(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) pi[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r)] + 1;
    return deviation_impl(proc, source, Permutation::from_one_line(std::move(pi)));
}

DeviationReport deviation_report(const DiscretizeResult& d, const TrajectoryEnsemble& source) {
    return deviation_impl(d.process, source, d.pi);
}

TrajectoryEnsemble linearize(const TrajectoryEnsemble& e, int n) {
    if (n < 1) throw std::invalid_argument("linearize: n must be >= 1");
    const Partition grid = Partition::uniform(n);
    std::vector<double> values(static_cast<std::size_t>(e.path_count()) *
                               (static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < e.path_count(); ++i)
        for (int j = 0; j <= n; ++j)
            values[static_cast<std::size_t>(i) * (static_cast<std::size_t>(n) + 1) +
                   static_cast<std::size_t>(j)] =
                eval_path(e, i, grid.times()[static_cast<std::size_t>(j)]);
    return TrajectoryEnsemble::create(grid, e.path_count(), std::move(values));
}

} // namespace plab
