#include "plab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plab {

TrajectoryEnsemble TrajectoryEnsemble::create(Partition grid, int paths,
                                              std::vector<double> values) {
    if (paths < 1) throw std::invalid_argument("TrajectoryEnsemble: need at least one path");
    const std::size_t expect =
        static_cast<std::size_t>(paths) * grid.times().size();
    if (values.size() != expect)
        throw std::invalid_argument("TrajectoryEnsemble: value count does not match m*(k+1)");
    for (double v : values)
        if (!(v >= -1.0 && v <= 1.0))
            throw std::invalid_argument("TrajectoryEnsemble: value outside [-1,1]");
    TrajectoryEnsemble e;
    e.grid_ = std::move(grid);
    e.paths_ = paths;
    e.values_ = std::move(values);
    return e;
}

namespace {

// Interpolate one path (grid times ts, values vs) at time t.
double interp(std::span<const double> ts, std::span<const double> vs, double t) {
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - ts.begin());
    if (j < ts.size() && ts[j] == t) return vs[j];
    const double t0 = ts[j - 1], t1 = ts[j];
    const double lam = (t - t0) / (t1 - t0);
    return vs[j - 1] * (1.0 - lam) + vs[j] * lam;
}

} // namespace

double eval_path(const TrajectoryEnsemble& e, int path_index, double t) {
    if (path_index < 0 || path_index >= e.path_count())
        throw std::invalid_argument("eval_path: path index out of range");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("eval_path: t outside [0,1]");
    return interp(e.grid().times(), e.path(path_index), t);
}

double modulus_of_continuity(const TrajectoryEnsemble& e, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("modulus_of_continuity: delta must be > 0");
    delta = std::min(delta, 1.0);
    const auto ts = e.grid().times();
    const std::size_t k = ts.size();
    double acc = 0.0;
    for (int p = 0; p < e.path_count(); ++p) {
        const auto vs = e.path(p);
        double sup = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k && ts[j] - ts[i] <= delta; ++j)
                sup = std::max(sup, std::fabs(vs[j] - vs[i]));
            // Window edges of width exactly delta, one endpoint on the grid.
            if (ts[i] + delta <= 1.0)
                sup = std::max(sup, std::fabs(interp(ts, vs, ts[i] + delta) - vs[i]));
            if (ts[i] - delta >= 0.0)
                sup = std::max(sup, std::fabs(vs[i] - interp(ts, vs, ts[i] - delta)));
        }
        acc += sup;
    }
    return acc / e.path_count();
}

} // namespace plab
