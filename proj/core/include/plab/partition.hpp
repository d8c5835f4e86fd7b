#pragma once

#include <span>
#include <vector>

namespace plab {

/// Ordered time grid on [0,1]: strictly increasing times with endpoints
/// exactly 0 and 1. Energies and trajectory grids are evaluated over these.
class Partition {
public:
    /// Throws std::invalid_argument unless times are strictly increasing
    /// with times.front()==0 and times.back()==1.
    static Partition from_times(std::vector<double> times);

    /// Uniform grid {i/k : 0 <= i <= k}.
    static Partition uniform(int intervals);

    std::span<const double> times() const { return times_; }
    int intervals() const { return static_cast<int>(times_.size()) - 1; }

    /// Maximum consecutive gap.
    double mesh() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<double> times_;
};

/// Union of pi's times and extra_times (deduplicated). extra_times must lie
/// in [0,1]; values outside throw std::invalid_argument.
Partition refine(const Partition& pi, std::span<const double> extra_times);

} // namespace plab
