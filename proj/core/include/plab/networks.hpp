#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plab/permutation.hpp"
#include "plab/permuton.hpp"
#include "plab/process.hpp"

namespace plab {

using BigInt = boost::multiprecision::cpp_int;

/// Standard Young tableau of staircase shape (n-1, n-2, ..., 1): rows
/// increase left to right, columns top to bottom, entries a bijection with
/// [n(n-1)/2]. The Edelman-Greene domain for sorting networks.
class StaircaseTableau {
public:
    /// Throws std::invalid_argument unless rows form the staircase shape and
    /// the filling is standard.
    static StaircaseTableau from_rows(std::vector<std::vector<int>> rows);

    int n() const { return static_cast<int>(rows_.size()) + 1; }
    int cells() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Internal unchecked constructor for trusted callers.
    struct unchecked_t {};
    StaircaseTableau(std::vector<std::vector<int>> rows, unchecked_t)
        : rows_(std::move(rows)) {}

private:
    std::vector<std::vector<int>> rows_;
};

/// Number of sorting networks of S_n:
/// N! / (1^{n-1} 3^{n-2} 5^{n-3} ... (2n-3)^1) with N = n(n-1)/2.
/// Requires n >= 2 (big-integer arithmetic; fine up to n = 30 and beyond).
BigInt stanley_count(int n);

/// All sorting-network words of S_n by depth-first search over
/// inversion-increasing swaps. Guarded to n <= 5.
std::vector<SwapWord> enumerate_networks(int n);

/// Uniform random staircase tableau via complementary hook walks
/// (Greene-Nijenhuis-Wilf): entries N, N-1, ..., 1 are placed at corners
/// reached by hook walks started from uniform cells of the shrinking shape.
StaircaseTableau sample_staircase_tableau(int n, std::uint64_t seed);

/// Reads the sorting-network word of a staircase tableau through the inverse
/// Edelman-Greene (Coxeter-Knuth) correspondence: the insertion tableau of
/// every reduced word of the reverse permutation is the superstandard
/// staircase P(i,j) = i+j-1, so reverse-bumping the recording tableau's
/// cells in entry order N..1 recovers the inserted letters. The word is
/// emitted in insertion order.
SwapWord edelman_greene_word(const StaircaseTableau& q);

/// A uniformly distributed sorting network of S_n. Uniformity is certified
/// by the tableau sampler's uniformity together with bijectivity of the
/// Edelman-Greene reading (exact support match against enumerate_networks at
/// small n lives in the tests).
SwapWord sample_rsn(int n, std::uint64_t seed);

/// Discrete-time interchange process: each step composes one uniformly
/// random adjacent transposition. steps >= 1.
PermutationProcess sample_interchange(int n, int steps, std::uint64_t seed);

/// Cycle-rotation process: each snapshot is a cyclic shift of the previous
/// one by +-1 positions (uniform signs), so pairwise circular gaps between
/// particles stay fixed. steps >= 1.
PermutationProcess sample_cycle_rotation(int n, int steps, std::uint64_t seed);

/// Deterministic bubble-sort sorting network: passes (1..n-1)(1..n-2)...(1).
SwapWord bubble_network(int n);

/// Thrown by stretchable_network when some pair of target points never
/// crosses while rotating through [0, pi/2]; carries the offending pair
/// (0-based point indices).
struct NotANetworkError : std::invalid_argument {
    NotANetworkError(std::string msg, int first, int second)
        : std::invalid_argument(std::move(msg)), i(first), j(second) {}
    int i;
    int j;
};

struct StretchableResult {
    SwapWord word;
    int tie_warnings = 0; ///< number of crossing-angle ties broken by pair index
};

/// Stretchable sorting network of a planar sample: rotate the points through
/// angles in [0, pi/2]; every pairwise exchange of x-order is one adjacent
/// swap, emitted in increasing crossing-angle order. Requires every pair in
/// crossing position (x_i < x_j iff y_i > y_j), e.g. samples of the reverse
/// permuton; otherwise throws NotANetworkError. Simultaneous crossings are
/// tie-broken by pair index (counted in tie_warnings).
StretchableResult stretchable_network(const DiscretePermuton& p);

/// Counts of swap positions with step index in [t0*N, t1*N). Window must be
/// nonempty within [0,1]. Result has n-1 entries, index pos-1.
std::vector<long long> swap_histogram(const SwapWord& w, double t0, double t1);

} // namespace plab
