#pragma once

#include <vector>

#include "plab/permutation.hpp"

namespace plab {

/// Dense square cost matrix, row-major.
class CostMatrix {
public:
    CostMatrix(int n, std::vector<double> entries);
    static CostMatrix zero(int n);

    int n() const { return n_; }
    double at(int i, int j) const { return c_[static_cast<std::size_t>(i) * n_ + j]; }
    double& at(int i, int j) { return c_[static_cast<std::size_t>(i) * n_ + j]; }
    const double* row(int i) const { return c_.data() + static_cast<std::size_t>(i) * n_; }

private:
    int n_;
    std::vector<double> c_;
};

/// Optimal assignment and its total cost. The permutation maps row i to
/// column assignment(i) (1-based). cost is the unscaled sum of matrix
/// entries along the assignment, and is a global minimum over all
/// permutations (Birkhoff-von Neumann: the linear program over doubly
/// stochastic matrices is resolved at a permutation matrix).
struct AssignmentResult {
    Permutation assignment;
    double cost = 0.0;
};

/// Exact O(n^3) Hungarian solver (shortest augmenting paths with row/column
/// potentials). Ties among optimal assignments resolve by lowest-index
/// augmenting order, so runs are reproducible. Throws std::invalid_argument
/// on non-finite entries.
AssignmentResult assignment_solve(const CostMatrix& cost);

} // namespace plab
