#include "plab/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace plab {

CostMatrix::CostMatrix(int n, std::vector<double> entries) : n_(n), c_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("CostMatrix: n must be positive");
    if (c_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("CostMatrix: entry count must be n*n");
}

CostMatrix CostMatrix::zero(int n) {
    return CostMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
}

AssignmentResult assignment_solve(const CostMatrix& cost) {
    const int n = cost.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(cost.at(i, j)))
                throw std::invalid_argument("assignment_solve: non-finite cost entry");

    constexpr double kInf = std::numeric_limits<double>::infinity();
    // 1-based working arrays; p[j] = row matched to column j, column 0 is the
    // virtual source of the current augmenting search.
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
    std::vector<double> minv(static_cast<std::size_t>(n) + 1);
    std::vector<char> used(static_cast<std::size_t>(n) + 1);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            const double* crow = cost.row(i0 - 1);
            const double ui0 = u[static_cast<std::size_t>(i0)];
            double delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = crow[j - 1] - ui0 - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        // Unwind the augmenting path.
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        row_to_col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)]) - 1] = j;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += cost.at(i, row_to_col[static_cast<std::size_t>(i)] - 1);
    return {Permutation::from_one_line(std::move(row_to_col)), total};
}

} // namespace plab
