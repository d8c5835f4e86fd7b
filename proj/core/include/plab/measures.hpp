#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plab/partition.hpp"
#include "plab/permuton.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// Canonical permuton families available to the samplers.
enum class PermutonKind { identity, reverse, lebesgue, archimedean };

/// Parses one of "identity"/"id", "reverse"/"rev", "lebesgue", "archimedean"/
/// "arch". Throws std::invalid_argument on anything else.
PermutonKind parse_permuton_kind(const std::string& name);
std::string permuton_kind_name(PermutonKind kind);

/// m i.i.d. samples of the chosen permuton, deterministic given seed.
///   identity     -> (U, U)
///   reverse      -> (U, -U)
///   lebesgue     -> (U, U') independent
///   archimedean  -> first two coordinates of a uniform point on the unit
///                   2-sphere (three independent normals, normalized)
DiscretePermuton sample_permuton(PermutonKind kind, int m, std::uint64_t seed);

/// m sample paths of the Archimedean process cos(pi t) Ax + sin(pi t) Ay on
/// the given grid.
TrajectoryEnsemble archimedean_process(int m, const Partition& grid, std::uint64_t seed);

/// m independent samples of the Archimedean path marginal at time t: points
/// (A(0), A(t)). Requires 0 <= t <= 1.
DiscretePermuton archimedean_path_marginal(double t, int m, std::uint64_t seed);

/// Optimal coupling of the Archimedean path:
///   Px(t) = cos(pi t/2) Ax + sin(pi t/2) Ay
///   Py(t) = cos(pi t/2) Ax - sin(pi t/2) Ay
PlanarEnsemble archimedean_coupling(int m, const Partition& grid, std::uint64_t seed);

/// Exact grid energy of the Archimedean process over pi using the closed-form
/// increment moment E(X(t)-X(s))^2 = (4/3) sin^2(pi (t-s)/2).
double archimedean_process_energy_exact(const Partition& pi);

/// Empirical distributional transform, rescaled to [-1,1]: element i maps to
/// (2 r_i - 1)/m - 1 where r_i is its rank in the total order by (value,
/// tie-break uniform). The output multiset is exactly the uniform midpoint
/// grid regardless of the input law; ties are randomized by the seed-driven
/// uniforms, faithful to F(z,u) = P(Z<z) + u P(Z=z).
std::vector<double> distributional_transform(std::span<const double> values,
                                             std::uint64_t seed);

/// Rank path from the identity permuton towards p: at each grid time t,
/// Z_i(t) = cos(pi t/2) x_i + sin(pi t/2) y_i is re-uniformized by the
/// distributional transform and paired with x_i. Slices are exact permuton
/// samples in the second coordinate by construction.
struct RankPathResult {
    PlanarEnsemble ensemble;
    /// Largest fraction of points involved in exact Z-ties at any slice.
    /// Targets without the negative-plank property (e.g. the reverse
    /// permuton) degenerate to all-tied slices; the construction still
    /// returns, with ties broken randomly.
    double max_tie_fraction = 0.0;
    bool degenerate = false; ///< true when max_tie_fraction > 1/2
};
RankPathResult rotation_rank_path(const DiscretePermuton& p, const Partition& grid,
                                  std::uint64_t seed);

/// Scanned ratio sup over planks R(theta, a, a+w) of (point fraction)/w.
/// Planks have slope theta <= 0 (normal direction theta + pi/2) and the
/// offsets a step by w/2 across [-sqrt2, sqrt2]. Widths below the resolution
/// floor 2/sqrt(m) throw. The threshold interpretation is left to callers.
double plank_mass_ratio(const DiscretePermuton& p, std::span<const double> slopes,
                        std::span<const double> widths);

} // namespace plab
