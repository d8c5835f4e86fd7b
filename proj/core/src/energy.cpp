#include "plab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plab {

namespace {

// Kahan accumulator; keeps per-interval sums independent of summation
// batching.
struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Precomputed interpolation stencil for one partition time against the
// ensemble grid: value = v[idx]*(1-lam) + v[idx+1]*lam (lam = 0 at grid hits).
struct Stencil {
    std::size_t idx;
    double lam;
};

std::vector<Stencil> make_stencils(const Partition& grid, const Partition& pi) {
    const auto gt = grid.times();
    std::vector<Stencil> st;
    st.reserve(pi.times().size());
    for (double t : pi.times()) {
        auto it = std::lower_bound(gt.begin(), gt.end(), t);
        std::size_t j = static_cast<std::size_t>(it - gt.begin());
        if (j < gt.size() && gt[j] == t) {
            st.push_back({j, 0.0});
        } else {
            const double lam = (t - gt[j - 1]) / (gt[j] - gt[j - 1]);
            st.push_back({j - 1, lam});
        }
    }
    return st;
}

inline double eval_stencil(std::span<const double> vs, const Stencil& s) {
    if (s.lam == 0.0) return vs[s.idx];
    return vs[s.idx] * (1.0 - s.lam) + vs[s.idx + 1] * s.lam;
}

} // namespace

EnergyReport ensemble_energy(const TrajectoryEnsemble& e, const Partition& pi) {
    const auto pt = pi.times();
    if (pt.size() < 2)
        throw std::invalid_argument("ensemble_energy: need at least 2 partition times");
    const auto st = make_stencils(e.grid(), pi);
    const std::size_t k = pt.size() - 1;
    std::vector<Kahan> acc(k);
    for (int p = 0; p < e.path_count(); ++p) {
        const auto vs = e.path(p);
        double prev = eval_stencil(vs, st[0]);
        for (std::size_t i = 1; i <= k; ++i) {
            const double cur = eval_stencil(vs, st[i]);
            const double d = cur - prev;
            acc[i - 1].add(d * d);
            prev = cur;
        }
    }
    EnergyReport r;
    r.partition = pi;
    r.per_interval.resize(k);
    Kahan total;
    for (std::size_t i = 0; i < k; ++i) {
        r.per_interval[i] = acc[i].sum / e.path_count() / (pt[i + 1] - pt[i]);
        total.add(r.per_interval[i]);
    }
    r.total = total.sum;
    return r;
}

EnergyReport permuton_path_energy(const std::vector<DiscretePermuton>& ms,
                                  const Partition& pi, const SquaredDistanceFn& dist) {
    const auto pt = pi.times();
    if (ms.size() != pt.size())
        throw std::invalid_argument("permuton_path_energy: slice count must match partition times");
    EnergyReport r;
    r.partition = pi;
    r.per_interval.resize(pt.size() - 1);
    Kahan total;
    for (std::size_t i = 1; i < pt.size(); ++i) {
        const double d2 = dist(ms[i - 1], ms[i]);
        r.per_interval[i - 1] = d2 / (pt[i] - pt[i - 1]);
        total.add(r.per_interval[i - 1]);
    }
    r.total = total.sum;
    return r;
}

SigmaEnergyBound sigma_energy_bound(const TrajectoryEnsemble& e, const Partition& pi) {
    const auto pt = pi.times();
    if (pt.size() < 2)
        throw std::invalid_argument("sigma_energy_bound: need at least 2 partition times");
    const auto st = make_stencils(e.grid(), pi);
    const std::size_t kt = pt.size();
    const int m = e.path_count();

    // Empirical means per partition time.
    std::vector<Kahan> mean(kt);
    for (int p = 0; p < m; ++p) {
        const auto vs = e.path(p);
        for (std::size_t i = 0; i < kt; ++i) mean[i].add(eval_stencil(vs, st[i]));
    }
    std::vector<double> mu(kt);
    for (std::size_t i = 0; i < kt; ++i) mu[i] = mean[i].sum / m;

    std::vector<Kahan> sq(kt);       // avg of centered X(t)^2
    std::vector<Kahan> inc(kt - 1);  // avg of centered increment^2
    for (int p = 0; p < m; ++p) {
        const auto vs = e.path(p);
        double prev = eval_stencil(vs, st[0]) - mu[0];
        sq[0].add(prev * prev);
        for (std::size_t i = 1; i < kt; ++i) {
            const double cur = eval_stencil(vs, st[i]) - mu[i];
            sq[i].add(cur * cur);
            const double d = cur - prev;
            inc[i - 1].add(d * d);
            prev = cur;
        }
    }

    SigmaEnergyBound out;
    Kahan energy, sigma_energy;
    double prev_sigma = std::sqrt(sq[0].sum / m);
    for (std::size_t i = 1; i < kt; ++i) {
        const double gap = pt[i] - pt[i - 1];
        energy.add(inc[i - 1].sum / m / gap);
        const double sigma = std::sqrt(sq[i].sum / m);
        const double ds = sigma - prev_sigma;
        sigma_energy.add(ds * ds / gap);
        prev_sigma = sigma;
    }
    out.energy = energy.sum;
    out.sigma_energy = sigma_energy.sum;
    return out;
}

} // namespace plab
