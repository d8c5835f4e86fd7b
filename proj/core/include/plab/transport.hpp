#pragma once

#include <vector>

#include "plab/assignment.hpp"
#include "plab/partition.hpp"
#include "plab/permutation.hpp"
#include "plab/permuton.hpp"

namespace plab {

/// Exact squared Wasserstein-2 distance between the empirical measures of
/// two permutations of common order n, via an n x n assignment with cost
/// (i-j)^2 + (s(i)-t(j))^2, scaled by 4/n^3.
double w2sq_permutations(const Permutation& s, const Permutation& t);

/// Exact squared W2 between equal-size equal-weight point sets:
/// (1/m) * min over matchings of the summed squared Euclidean distances.
double w2sq_pointsets(const DiscretePermuton& p, const DiscretePermuton& q);

/// Optimal matching between equal-size point sets together with the attained
/// squared distance (already divided by m).
struct PointMatching {
    Permutation matching; ///< point i of p pairs with point matching(i) of q (1-based)
    double w2sq = 0.0;
};
PointMatching match_pointsets(const DiscretePermuton& p, const DiscretePermuton& q);

/// Squared W2 distance of a point set from the identity permuton via the
/// max-sum identity 4/3 - (2/m^2) sum_{i,j} max{x_i+y_i, x_j+y_j}. The double
/// sum is evaluated exactly through the sorted-rank form
/// sum_{i,j} max(a_i,a_j) = sum_k (2k-1) a_(k), so large m stays cheap.
double identity_distance_sq(const DiscretePermuton& p);

/// W2^2(id, P) + W2^2(P, rev) through the same device:
/// 8/3 - (2/m^2) sum_{i,j} [max{s_i,s_j} + max{d_i,d_j}] with s = x+y, d = x-y.
double sum_distance_squared(const DiscretePermuton& p);

/// Exact finite-n max-sum route for W2^2(id_n, mu_s), independent of the
/// assignment solver:
///   (4/n^3) [4 sum i^2 - n(n+1) - sum_{i,j} max{i+s(i), j+s(j)}],
/// evaluated in exact integer arithmetic. Equals w2sq_permutations(id, s)
/// identically. (The n(n+1) term restores sum_i (i+s(i)) lost when the
/// rank sum is rewritten through pairwise maxima; without it the display is
/// off by 4(n+1)/n^2, as the n = 1 self-distance shows.)
double w2sq_identity_maxsum(const Permutation& s);

/// Closed-form W2 distance between Archimedean path marginals at times s,t:
/// sqrt(8/3) * sin(pi (t-s)/4). Requires 0 <= s <= t <= 1.
double closed_form_arch_dist(double s, double t);

/// W2^2 between the centered uniform laws on [-a,a] and [-b,b]: (b-a)^2/3.
/// Requires a,b >= 0.
double uniform_interval_dist_sq(double a, double b);

/// Closed-form energy of the Archimedean path over pi in the Wasserstein
/// metric: sum closed_form_arch_dist^2 / gap. Increases to pi^2/6 under
/// refinement.
double archimedean_path_energy_closed_form(const Partition& pi);

/// Chains optimal matchings along a sequence of equal-size slices into an
/// ensemble of planar paths: path j starts at point j of ms[0] and follows
/// the optimal matching between consecutive slices, so every adjacent pair of
/// slices attains exactly its W2^2. The freedom in gluing consecutive
/// couplings is fixed deterministically by composing matchings, which is
/// valid at equal weights where optimal couplings are permutation matrices.
PlanarEnsemble realize_discrete_path(const std::vector<DiscretePermuton>& ms,
                                     const Partition& grid);

} // namespace plab
