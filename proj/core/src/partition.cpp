#include "plab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace plab {

Partition Partition::from_times(std::vector<double> times) {
    if (times.size() < 2)
        throw std::invalid_argument("Partition: need at least the two endpoints");
    if (times.front() != 0.0 || times.back() != 1.0)
        throw std::invalid_argument("Partition: endpoints must be exactly 0 and 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("Partition: times must be strictly increasing");
    Partition p;
    p.times_ = std::move(times);
    return p;
}

Partition Partition::uniform(int intervals) {
    if (intervals < 1) throw std::invalid_argument("Partition: intervals must be >= 1");
    std::vector<double> t(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i)
        t[static_cast<std::size_t>(i)] = static_cast<double>(i) / intervals;
    t.back() = 1.0;
    return from_times(std::move(t));
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 1; i < times_.size(); ++i)
        m = std::max(m, times_[i] - times_[i - 1]);
    return m;
}

Partition refine(const Partition& pi, std::span<const double> extra_times) {
    std::vector<double> t(pi.times().begin(), pi.times().end());
    for (double x : extra_times) {
        if (x < 0.0 || x > 1.0)
            throw std::invalid_argument("refine: extra time outside [0,1]");
        t.push_back(x);
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return Partition::from_times(std::move(t));
}

} // namespace plab
