#include "plab/lab.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plab {

ConjectureReport second_moment_curve(const TrajectoryEnsemble& e) {
    const auto ts = e.grid().times();
    const std::size_t k = ts.size();
    ConjectureReport r;
    r.t_values.assign(ts.begin(), ts.end());
    r.empirical.assign(k, 0.0);
    r.target.resize(k);
    for (int i = 0; i < e.path_count(); ++i) {
        const auto vs = e.path(i);
        const double x0 = vs[0];
        for (std::size_t j = 0; j < k; ++j) {
            const double d = vs[j] - x0;
            r.empirical[j] += d * d;
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        r.empirical[j] /= e.path_count();
        r.target[j] = 2.0 / 3.0 * (1.0 - std::cos(std::numbers::pi * ts[j]));
        r.sup_gap = std::max(r.sup_gap, std::fabs(r.empirical[j] - r.target[j]));
    }
    return r;
}

ConjectureReport average_curves(const std::vector<ConjectureReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("average_curves: no reports");
    ConjectureReport out = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].empirical.size() != out.empirical.size())
            throw std::invalid_argument("average_curves: mismatched grids");
        for (std::size_t j = 0; j < out.empirical.size(); ++j)
            out.empirical[j] += reports[i].empirical[j];
    }
    out.sup_gap = 0.0;
    for (std::size_t j = 0; j < out.empirical.size(); ++j) {
        out.empirical[j] /= static_cast<double>(reports.size());
        out.sup_gap = std::max(out.sup_gap, std::fabs(out.empirical[j] - out.target[j]));
    }
    return out;
}

HolderCheck holder_check(const TrajectoryEnsemble& e, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("holder_check: delta must be > 0");
    const auto ts = e.grid().times();
    const std::size_t k = ts.size();
    const double sqrt8 = std::sqrt(8.0);
    HolderCheck out;
    for (int p = 0; p < e.path_count(); ++p) {
        const auto vs = e.path(p);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const double envelope = sqrt8 * std::sqrt(ts[j] - ts[i]) + delta;
                if (std::fabs(vs[j] - vs[i]) > envelope) out.violations += 1;
            }
    }
    out.total_pairs = static_cast<long long>(e.path_count()) *
                      static_cast<long long>(k * (k - 1) / 2);
    return out;
}

KsResult marginal_uniformity(const TrajectoryEnsemble& e, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("marginal_uniformity: t outside [0,1]");
    std::vector<double> values(static_cast<std::size_t>(e.path_count()));
    for (int i = 0; i < e.path_count(); ++i)
        values[static_cast<std::size_t>(i)] = eval_path(e, i, t);
    return ks_test_uniform(values);
}

TrajectoryEnsemble shift_ensemble(const TrajectoryEnsemble& e, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw std::invalid_argument("shift_ensemble: eps outside [0,1]");
    const auto ts = e.grid().times();
    const std::size_t k = ts.size();
    std::vector<double> values(static_cast<std::size_t>(e.path_count()) * k);
    for (int i = 0; i < e.path_count(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double s = eps + ts[j];
            double sign = 1.0;
            if (s >= 1.0) {
                s -= 1.0;
                sign = -1.0;
                if (s > 1.0) { // eps + t can reach 2 only at eps = t = 1
                    s -= 1.0;
                    sign = 1.0;
                }
            }
            values[static_cast<std::size_t>(i) * k + j] = sign * eval_path(e, i, s);
        }
    return TrajectoryEnsemble::create(e.grid(), e.path_count(), std::move(values));
}

} // namespace plab
