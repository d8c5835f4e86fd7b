#include "plab/permuton.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace plab {

DiscretePermuton DiscretePermuton::from_points(PointSet ps) {
    if (ps.x.size() != ps.y.size())
        throw std::invalid_argument("DiscretePermuton: coordinate arrays differ in length");
    if (ps.x.empty())
        throw std::invalid_argument("DiscretePermuton: need at least one point");
    for (std::size_t i = 0; i < ps.x.size(); ++i)
        if (!(ps.x[i] >= -1.0 && ps.x[i] <= 1.0 && ps.y[i] >= -1.0 && ps.y[i] <= 1.0))
            throw std::invalid_argument("DiscretePermuton: coordinate outside [-1,1]");
    DiscretePermuton p;
    p.pts_ = std::move(ps);
    return p;
}

PlanarEnsemble PlanarEnsemble::create(Partition grid, int paths,
                                      std::vector<double> xs, std::vector<double> ys) {
    if (paths < 1) throw std::invalid_argument("PlanarEnsemble: need at least one path");
    const std::size_t expect = static_cast<std::size_t>(paths) * grid.times().size();
    if (xs.size() != expect || ys.size() != expect)
        throw std::invalid_argument("PlanarEnsemble: value count does not match m*(k+1)");
    for (std::size_t i = 0; i < expect; ++i)
        if (!(xs[i] >= -1.0 && xs[i] <= 1.0 && ys[i] >= -1.0 && ys[i] <= 1.0))
            throw std::invalid_argument("PlanarEnsemble: coordinate outside [-1,1]");
    PlanarEnsemble e;
    e.grid_ = std::move(grid);
    e.paths_ = paths;
    e.xs_ = std::move(xs);
    e.ys_ = std::move(ys);
    return e;
}

PointSet PlanarEnsemble::slice(int j) const {
    PointSet ps;
    ps.x.resize(static_cast<std::size_t>(paths_));
    ps.y.resize(static_cast<std::size_t>(paths_));
    const std::size_t k = static_cast<std::size_t>(grid_size());
    for (int i = 0; i < paths_; ++i) {
        ps.x[static_cast<std::size_t>(i)] = xs_[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)];
        ps.y[static_cast<std::size_t>(i)] = ys_[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)];
    }
    return ps;
}

DiscretePermuton empirical_permuton(const Permutation& p) {
    const int n = p.size();
    PointSet ps;
    ps.x.resize(static_cast<std::size_t>(n));
    ps.y.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        ps.x[static_cast<std::size_t>(i) - 1] = 2.0 * i / n - 1.0;
        ps.y[static_cast<std::size_t>(i) - 1] = 2.0 * p(i) / n - 1.0;
    }
    return DiscretePermuton::from_points(std::move(ps));
}

PointSet rotate_45(const DiscretePermuton& p) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    PointSet out;
    out.x.resize(p.size());
    out.y.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.x[i] = (p.xs()[i] - p.ys()[i]) * inv_sqrt2;
        out.y[i] = (p.xs()[i] + p.ys()[i]) * inv_sqrt2;
    }
    return out;
}

} // namespace plab
