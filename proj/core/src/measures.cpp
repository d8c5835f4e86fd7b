#include "plab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "plab/rng.hpp"

namespace plab {

namespace {

constexpr double kPi = std::numbers::pi;

// One Archimedean draw: project a uniform point of the unit 2-sphere onto
// its first two coordinates.
inline void archimedean_draw(Rng& rng, double& ax, double& ay) {
    double gx, gy, gz, norm2;
    do {
        gx = rng.normal();
        gy = rng.normal();
        gz = rng.normal();
        norm2 = gx * gx + gy * gy + gz * gz;
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    ax = gx * inv;
    ay = gy * inv;
}

} // namespace

PermutonKind parse_permuton_kind(const std::string& name) {
    if (name == "identity" || name == "id") return PermutonKind::identity;
    if (name == "reverse" || name == "rev") return PermutonKind::reverse;
    if (name == "lebesgue") return PermutonKind::lebesgue;
    if (name == "archimedean" || name == "arch") return PermutonKind::archimedean;
    throw std::invalid_argument("unknown permuton kind: " + name);
}

std::string permuton_kind_name(PermutonKind kind) {
    switch (kind) {
        case PermutonKind::identity: return "identity";
        case PermutonKind::reverse: return "reverse";
        case PermutonKind::lebesgue: return "lebesgue";
        case PermutonKind::archimedean: return "archimedean";
    }
    throw std::invalid_argument("unknown permuton kind tag");
}

DiscretePermuton sample_permuton(PermutonKind kind, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample_permuton: m must be >= 1");
    Rng rng(seed);
    PointSet ps;
    ps.x.resize(static_cast<std::size_t>(m));
    ps.y.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double x, y;
        switch (kind) {
            case PermutonKind::identity:
                x = rng.uniform(-1.0, 1.0);
                y = x;
                break;
            case PermutonKind::reverse:
                x = rng.uniform(-1.0, 1.0);
                y = -x;
                break;
            case PermutonKind::lebesgue:
                x = rng.uniform(-1.0, 1.0);
                y = rng.uniform(-1.0, 1.0);
                break;
            case PermutonKind::archimedean:
                archimedean_draw(rng, x, y);
                break;
            default:
                throw std::invalid_argument("sample_permuton: unknown kind");
        }
        ps.x[static_cast<std::size_t>(i)] = x;
        ps.y[static_cast<std::size_t>(i)] = y;
    }
    return DiscretePermuton::from_points(std::move(ps));
}

TrajectoryEnsemble archimedean_process(int m, const Partition& grid, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("archimedean_process: m must be >= 1");
    Rng rng(seed);
    const auto ts = grid.times();
    const std::size_t k = ts.size();
    std::vector<double> cs(k), sn(k);
    for (std::size_t j = 0; j < k; ++j) {
        cs[j] = std::cos(kPi * ts[j]);
        sn[j] = std::sin(kPi * ts[j]);
    }
    std::vector<double> values(static_cast<std::size_t>(m) * k);
    for (int i = 0; i < m; ++i) {
        double ax, ay;
        archimedean_draw(rng, ax, ay);
        double* row = values.data() + static_cast<std::size_t>(i) * k;
        for (std::size_t j = 0; j < k; ++j) row[j] = cs[j] * ax + sn[j] * ay;
    }
    return TrajectoryEnsemble::create(grid, m, std::move(values));
}

DiscretePermuton archimedean_path_marginal(double t, int m, std::uint64_t seed) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("archimedean_path_marginal: t outside [0,1]");
    if (m < 1) throw std::invalid_argument("archimedean_path_marginal: m must be >= 1");
    Rng rng(seed);
    const double c = std::cos(kPi * t), s = std::sin(kPi * t);
    PointSet ps;
    ps.x.resize(static_cast<std::size_t>(m));
    ps.y.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double ax, ay;
        archimedean_draw(rng, ax, ay);
        ps.x[static_cast<std::size_t>(i)] = ax;
        ps.y[static_cast<std::size_t>(i)] = c * ax + s * ay;
    }
    return DiscretePermuton::from_points(std::move(ps));
}

PlanarEnsemble archimedean_coupling(int m, const Partition& grid, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("archimedean_coupling: m must be >= 1");
    Rng rng(seed);
    const auto ts = grid.times();
    const std::size_t k = ts.size();
    std::vector<double> cs(k), sn(k);
    for (std::size_t j = 0; j < k; ++j) {
        cs[j] = std::cos(kPi * ts[j] / 2.0);
        sn[j] = std::sin(kPi * ts[j] / 2.0);
    }
    std::vector<double> xs(static_cast<std::size_t>(m) * k), ys(static_cast<std::size_t>(m) * k);
    for (int i = 0; i < m; ++i) {
        double ax, ay;
        archimedean_draw(rng, ax, ay);
        double* rx = xs.data() + static_cast<std::size_t>(i) * k;
        double* ry = ys.data() + static_cast<std::size_t>(i) * k;
        for (std::size_t j = 0; j < k; ++j) {
            rx[j] = cs[j] * ax + sn[j] * ay;
            ry[j] = cs[j] * ax - sn[j] * ay;
        }
    }
    return PlanarEnsemble::create(grid, m, std::move(xs), std::move(ys));
}

double archimedean_process_energy_exact(const Partition& pi) {
    const auto t = pi.times();
    double total = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double s = std::sin(kPi * (t[i] - t[i - 1]) / 2.0);
        total += (4.0 / 3.0) * s * s / (t[i] - t[i - 1]);
    }
    return total;
}

std::vector<double> distributional_transform(std::span<const double> values,
                                             std::uint64_t seed) {
    if (values.empty())
        throw std::invalid_argument("distributional_transform: empty input");
    const std::size_t m = values.size();
    Rng rng(seed);
    std::vector<double> tie(m);
    for (std::size_t i = 0; i < m; ++i) tie[i] = rng.uniform01();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] < values[b];
        if (tie[a] != tie[b]) return tie[a] < tie[b];
        return a < b;
    });
    std::vector<double> out(m);
    const double mm = static_cast<double>(m);
    for (std::size_t r = 0; r < m; ++r)
        out[order[r]] = (2.0 * static_cast<double>(r + 1) - 1.0) / mm - 1.0;
    return out;
}

RankPathResult rotation_rank_path(const DiscretePermuton& p, const Partition& grid,
                                  std::uint64_t seed) {
    if (p.size() < 2)
        throw std::invalid_argument("rotation_rank_path: need at least two points");
    const std::size_t m = p.size();
    const auto ts = grid.times();
    const std::size_t k = ts.size();
    std::vector<double> xs(m * k), ys(m * k);
    std::vector<double> z(m);
    double max_tie_fraction = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double c = std::cos(kPi * ts[j] / 2.0), s = std::sin(kPi * ts[j] / 2.0);
        for (std::size_t i = 0; i < m; ++i) z[i] = c * p.xs()[i] + s * p.ys()[i];

        std::vector<double> sorted(z);
        std::sort(sorted.begin(), sorted.end());
        std::size_t tied = 0;
        for (std::size_t i = 0; i < m;) {
            std::size_t e = i + 1;
            while (e < m && sorted[e] == sorted[i]) ++e;
            if (e - i > 1) tied += e - i;
            i = e;
        }
        max_tie_fraction = std::max(max_tie_fraction, static_cast<double>(tied) / static_cast<double>(m));

        const std::vector<double> u = distributional_transform(z, mix_seed(seed, j));
        for (std::size_t i = 0; i < m; ++i) {
            xs[i * k + j] = p.xs()[i];
            ys[i * k + j] = u[i];
        }
    }
    RankPathResult out{PlanarEnsemble::create(grid, static_cast<int>(m), std::move(xs), std::move(ys)),
                       max_tie_fraction, max_tie_fraction > 0.5};
    return out;
}

double plank_mass_ratio(const DiscretePermuton& p, std::span<const double> slopes,
                        std::span<const double> widths) {
    if (slopes.empty() || widths.empty())
        throw std::invalid_argument("plank_mass_ratio: empty slope or width grid");
    const double floor = 2.0 / std::sqrt(static_cast<double>(p.size()));
    for (double w : widths)
        if (!(w >= floor))
            throw std::invalid_argument("plank_mass_ratio: width below resolution floor 2/sqrt(m)");
    for (double th : slopes)
        if (th > 0.0)
            throw std::invalid_argument("plank_mass_ratio: slopes must be <= 0");

    const double sqrt2 = std::sqrt(2.0);
    const double mm = static_cast<double>(p.size());
    double best = 0.0;
    std::vector<double> proj(p.size());
    for (double theta : slopes) {
        const double c = std::cos(theta + kPi / 2.0), s = std::sin(theta + kPi / 2.0);
        for (std::size_t i = 0; i < p.size(); ++i)
            proj[i] = c * p.xs()[i] + s * p.ys()[i];
        std::sort(proj.begin(), proj.end());
        for (double w : widths) {
            for (double a = -sqrt2; a + w <= sqrt2 + 1e-12; a += w / 2.0) {
                const auto lo = std::lower_bound(proj.begin(), proj.end(), a);
                const auto hi = std::upper_bound(proj.begin(), proj.end(), a + w);
                const double frac = static_cast<double>(hi - lo) / mm;
                best = std::max(best, frac / w);
            }
        }
    }
    return best;
}

} // namespace plab
