#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "plab/energy.hpp"
#include "plab/limits.hpp"
#include "plab/permutation.hpp"
#include "plab/permuton.hpp"
#include "plab/trajectory.hpp"

namespace plab {

/// {"n": int, "one_line": [int...]}
std::string permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const std::string& text);

/// {"n": int, "positions": [int...]}
std::string swap_word_to_json(const SwapWord& w);
SwapWord swap_word_from_json(const std::string& text);

/// CSV with header "path_id,t_0,...,t_k" (grid times at 12 significant
/// digits) and one row per path.
void write_trajectory_csv(std::ostream& os, const TrajectoryEnsemble& e);

/// CSV with header "x,y", one row per point, 12 significant digits.
void write_permuton_csv(std::ostream& os, const DiscretePermuton& p);

/// Long-format CSV "path_id,t,x,y".
void write_planar_csv(std::ostream& os, const PlanarEnsemble& e);

/// CSV "position,count" over swap positions 1..n-1.
void write_histogram_csv(std::ostream& os, std::span<const long long> counts);

/// {"times": [...], "per_interval": [...], "total": real}
std::string energy_report_to_json(const EnergyReport& r);

/// {"n", "sup_deviation", "bound", "hold", "seed"}
std::string deviation_report_to_json(const DeviationReport& r);

/// {"method": "assignment"|"formula"|"maxsum", "n_or_m": int, "value": real,
///  "seed": int|null}
struct DistanceReport {
    std::string method;
    int n_or_m = 0;
    double value = 0.0;
    std::optional<std::uint64_t> seed;
};
std::string distance_report_to_json(const DistanceReport& r);

/// Formats one double with 12 significant digits (the CSV convention).
std::string format_sig12(double v);

} // namespace plab
