#include "plab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plab {

namespace {

CostMatrix pointset_costs(const DiscretePermuton& p, const DiscretePermuton& q) {
    const int m = static_cast<int>(p.size());
    CostMatrix c = CostMatrix::zero(m);
    for (int i = 0; i < m; ++i) {
        const double xi = p.xs()[static_cast<std::size_t>(i)];
        const double yi = p.ys()[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) {
            const double dx = xi - q.xs()[static_cast<std::size_t>(j)];
            const double dy = yi - q.ys()[static_cast<std::size_t>(j)];
            c.at(i, j) = dx * dx + dy * dy;
        }
    }
    return c;
}

// sum_{i,j} max(a_i, a_j) over all ordered pairs including i == j, computed
// exactly as sum_k (2k-1) a_(k) on the sorted values.
double pairwise_max_sum(std::vector<double> a) {
    std::sort(a.begin(), a.end());
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += (2.0 * static_cast<double>(k + 1) - 1.0) * a[k];
    return s;
}

} // namespace

double w2sq_permutations(const Permutation& s, const Permutation& t) {
    const int n = s.size();
    if (t.size() != n)
        throw std::invalid_argument("w2sq_permutations: permutation sizes differ");
    CostMatrix c = CostMatrix::zero(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const double a = i - j;
            const double b = s(i) - t(j);
            c.at(i - 1, j - 1) = a * a + b * b;
        }
    const AssignmentResult r = assignment_solve(c);
    return 4.0 * r.cost / (static_cast<double>(n) * n * n);
}

double w2sq_pointsets(const DiscretePermuton& p, const DiscretePermuton& q) {
    return match_pointsets(p, q).w2sq;
}

PointMatching match_pointsets(const DiscretePermuton& p, const DiscretePermuton& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("w2sq_pointsets: point sets must have equal size");
    AssignmentResult r = assignment_solve(pointset_costs(p, q));
    return {std::move(r.assignment), r.cost / static_cast<double>(p.size())};
}

double identity_distance_sq(const DiscretePermuton& p) {
    const std::size_t m = p.size();
    std::vector<double> s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = p.xs()[i] + p.ys()[i];
    const double mm = static_cast<double>(m);
    return 4.0 / 3.0 - 2.0 * pairwise_max_sum(std::move(s)) / (mm * mm);
}

double sum_distance_squared(const DiscretePermuton& p) {
    const std::size_t m = p.size();
    std::vector<double> s(m), d(m);
    for (std::size_t i = 0; i < m; ++i) {
        s[i] = p.xs()[i] + p.ys()[i];
        d[i] = p.xs()[i] - p.ys()[i];
    }
    const double mm = static_cast<double>(m);
    return 8.0 / 3.0 -
           2.0 * (pairwise_max_sum(std::move(s)) + pairwise_max_sum(std::move(d))) / (mm * mm);
}

double w2sq_identity_maxsum(const Permutation& s) {
    const int n = s.size();
    std::vector<long long> a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i) - 1] = i + s(i);
    std::sort(a.begin(), a.end());
    long long pair_max = 0;
    for (int k = 1; k <= n; ++k)
        pair_max += (2LL * k - 1) * a[static_cast<std::size_t>(k) - 1];
    long long sum_sq = 0;
    for (long long i = 1; i <= n; ++i) sum_sq += i * i;
    const long long display = 4 * sum_sq - static_cast<long long>(n) * (n + 1) - pair_max;
    return 4.0 * static_cast<double>(display) / (static_cast<double>(n) * n * n);
}

double closed_form_arch_dist(double s, double t) {
    if (!(0.0 <= s && s <= t && t <= 1.0))
        throw std::invalid_argument("closed_form_arch_dist: need 0 <= s <= t <= 1");
    return std::sqrt(8.0 / 3.0) * std::sin(std::numbers::pi * (t - s) / 4.0);
}

double uniform_interval_dist_sq(double a, double b) {
    if (a < 0.0 || b < 0.0)
        throw std::invalid_argument("uniform_interval_dist_sq: half-widths must be >= 0");
    return (b - a) * (b - a) / 3.0;
}

double archimedean_path_energy_closed_form(const Partition& pi) {
    const auto t = pi.times();
    double total = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double d = closed_form_arch_dist(t[i - 1], t[i]);
        total += d * d / (t[i] - t[i - 1]);
    }
    return total;
}

PlanarEnsemble realize_discrete_path(const std::vector<DiscretePermuton>& ms,
                                     const Partition& grid) {
    if (ms.size() != grid.times().size())
        throw std::invalid_argument("realize_discrete_path: slice count must match grid times");
    const std::size_t m = ms.front().size();
    for (const auto& slice : ms)
        if (slice.size() != m)
            throw std::invalid_argument("realize_discrete_path: slices must have equal size");

    const std::size_t k = ms.size();
    std::vector<double> xs(m * k), ys(m * k);
    // pos[j] = index within the current slice of the path that started at
    // point j of ms[0].
    std::vector<int> pos(m);
    for (std::size_t j = 0; j < m; ++j) pos[j] = static_cast<int>(j);

    for (std::size_t sidx = 0; sidx < k; ++sidx) {
        if (sidx > 0) {
            const PointMatching pm = match_pointsets(ms[sidx - 1], ms[sidx]);
            for (std::size_t j = 0; j < m; ++j)
                pos[j] = pm.matching(pos[j] + 1) - 1;
        }
        const auto& slice = ms[sidx];
        for (std::size_t j = 0; j < m; ++j) {
            xs[j * k + sidx] = slice.xs()[static_cast<std::size_t>(pos[j])];
            ys[j * k + sidx] = slice.ys()[static_cast<std::size_t>(pos[j])];
        }
    }
    return PlanarEnsemble::create(grid, static_cast<int>(m), std::move(xs), std::move(ys));
}

} // namespace plab
