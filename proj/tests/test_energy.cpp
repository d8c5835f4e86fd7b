#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "plab/energy.hpp"
#include "plab/measures.hpp"
#include "plab/transport.hpp"

using namespace plab;

namespace {

constexpr double kPi = std::numbers::pi;

// Paths X_i(t) = scale_i * g(t) sampled on a uniform grid.
TrajectoryEnsemble separable_ensemble(int n, int grid, double (*g)(double)) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(grid) + 1));
    for (int i = 1; i <= n; ++i) {
        const double x = 2.0 * i / n - 1.0;
        for (int j = 0; j <= grid; ++j) values.push_back(x * g(static_cast<double>(j) / grid));
    }
    return TrajectoryEnsemble::create(Partition::uniform(grid), n, std::move(values));
}

TrajectoryEnsemble random_ensemble(std::mt19937_64& gen, int paths, int grid) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> values;
    for (int i = 0; i < paths * (grid + 1); ++i) values.push_back(U(gen));
    return TrajectoryEnsemble::create(Partition::uniform(grid), paths, std::move(values));
}

Partition random_partition(std::mt19937_64& gen, int interior) {
    std::uniform_real_distribution<double> U(0.01, 0.99);
    std::vector<double> t{0.0, 1.0};
    for (int i = 0; i < interior; ++i) t.push_back(U(gen));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return Partition::from_times(std::move(t));
}

} // namespace

TEST_CASE("ensemble_energy basics") {
    const auto constant = TrajectoryEnsemble::create(
        Partition::uniform(3), 2, {0.4, 0.4, 0.4, 0.4, -0.2, -0.2, -0.2, -0.2});
    CHECK(ensemble_energy(constant, Partition::uniform(5)).total == doctest::Approx(0.0));
    CHECK(ensemble_energy(constant, Partition::from_times({0.0, 0.37, 1.0})).total ==
          doctest::Approx(0.0));
    // Partitions with fewer than two times are unrepresentable by
    // construction, so the argument-error path lives in Partition itself.
    CHECK_THROWS_AS(Partition::from_times({0.0}), std::invalid_argument);
}

TEST_CASE("linear collapse ensemble has energy 4 avg(x^2) for every partition") {
    const int n = 10;
    const auto e = separable_ensemble(n, 4, [](double t) { return 1.0 - 2.0 * t; });
    // avg x^2 over the grid {2i/n - 1}.
    double avg = 0.0;
    for (int i = 1; i <= n; ++i) avg += (2.0 * i / n - 1.0) * (2.0 * i / n - 1.0);
    avg /= n;
    for (const auto& pi :
         {Partition::uniform(1), Partition::uniform(4), Partition::from_times({0.0, 0.3, 0.8, 1.0})}) {
        const auto r = ensemble_energy(e, pi);
        CHECK(r.total == doctest::Approx(4.0 * avg).epsilon(1e-12));
        double sum = 0.0;
        for (double term : r.per_interval) {
            CHECK(term >= 0.0);
            sum += term;
        }
        CHECK(r.total == doctest::Approx(sum).epsilon(1e-12));
    }
    // The continuum value 4/3 emerges as n grows.
    const auto big = separable_ensemble(2000, 1, [](double t) { return 1.0 - 2.0 * t; });
    CHECK(ensemble_energy(big, Partition::uniform(1)).total == doctest::Approx(4.0 / 3.0).epsilon(2e-3));
}

TEST_CASE("archimedean grid energy: exact-moment value and Monte Carlo agreement") {
    const auto pi100 = Partition::uniform(100);
    const double exact = archimedean_process_energy_exact(pi100);
    const double s = std::sin(kPi / 200.0);
    CHECK(exact == doctest::Approx(4.0 * 100.0 * 100.0 / 3.0 * s * s).epsilon(1e-14));
    CHECK(std::fabs(exact - 3.2896) < 5e-5);

    const auto e = archimedean_process(20000, pi100, 2024);
    const double mc = ensemble_energy(e, pi100).total;
    CHECK(mc == doctest::Approx(exact).epsilon(0.02));
}

TEST_CASE("permuton_path_energy") {
    const auto slice = sample_permuton(PermutonKind::archimedean, 50, 5);
    const std::vector<DiscretePermuton> constant{slice, slice, slice};
    const auto zero = permuton_path_energy(constant, Partition::uniform(2),
                                           [](const DiscretePermuton& a, const DiscretePermuton& b) {
                                               return w2sq_pointsets(a, b);
                                           });
    CHECK(zero.total == doctest::Approx(0.0));

    // Closed-form distances on {0, 1/2, 1}: (32/3) sin^2(pi/8).
    const auto pi3 = Partition::from_times({0.0, 0.5, 1.0});
    std::vector<DiscretePermuton> dummies{slice, slice, slice};
    std::size_t call = 0;
    const std::vector<std::pair<double, double>> spans{{0.0, 0.5}, {0.5, 1.0}};
    const auto r = permuton_path_energy(
        dummies, pi3, [&](const DiscretePermuton&, const DiscretePermuton&) {
            const auto [s, t] = spans[call++];
            const double d = closed_form_arch_dist(s, t);
            return d * d;
        });
    const double want = 32.0 / 3.0 * std::sin(kPi / 8.0) * std::sin(kPi / 8.0);
    CHECK(r.total == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(1.5621).epsilon(1e-4));
    CHECK(want < kPi * kPi / 6.0); // coarse partitions stay below the limit

    CHECK_THROWS_AS(permuton_path_energy(dummies, Partition::uniform(5),
                                         [](const DiscretePermuton&, const DiscretePermuton&) {
                                             return 0.0;
                                         }),
                    std::invalid_argument);
}

TEST_CASE("archimedean path energy closed form approaches pi^2/6") {
    const double coarse = archimedean_path_energy_closed_form(Partition::from_times({0.0, 0.5, 1.0}));
    CHECK(coarse == doctest::Approx(32.0 / 3.0 * std::pow(std::sin(kPi / 8.0), 2)).epsilon(1e-12));
    const double fine = archimedean_path_energy_closed_form(Partition::uniform(100));
    CHECK(fine == doctest::Approx(kPi * kPi / 6.0).epsilon(0.005));
    CHECK(fine <= kPi * kPi / 6.0 + 1e-12);
    // Monotone under refinement.
    CHECK(coarse <= archimedean_path_energy_closed_form(Partition::uniform(4)) + 1e-12);
    CHECK(archimedean_path_energy_closed_form(Partition::uniform(4)) <= fine + 1e-12);
}

TEST_CASE("refinement monotonicity on random triples") {
    std::mt19937_64 gen(31337);
    std::uniform_real_distribution<double> U(0.01, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_ensemble(gen, 4, 6);
        const auto pi = random_partition(gen, 3);
        std::vector<double> extra;
        for (int i = 0; i < 3; ++i) extra.push_back(U(gen));
        const auto fine = refine(pi, extra);
        const double coarse_total = ensemble_energy(e, pi).total;
        const double fine_total = ensemble_energy(e, fine).total;
        CHECK(fine_total >= coarse_total - 1e-12);
    }
}

TEST_CASE("superadditivity over sub-intervals") {
    std::mt19937_64 gen(55);
    const auto e = random_ensemble(gen, 5, 8);
    const auto pi = Partition::from_times({0.0, 0.125, 0.25, 0.5, 0.625, 0.75, 1.0});
    const auto r = ensemble_energy(e, pi);
    // Identical partition points: energy over [0,1] equals the sum of the
    // restrictions to [0, 0.5] and [0.5, 1].
    double left = 0.0, right = 0.0;
    for (std::size_t i = 0; i < r.per_interval.size(); ++i) {
        const double mid = (pi.times()[i] + pi.times()[i + 1]) / 2.0;
        (mid < 0.5 ? left : right) += r.per_interval[i];
    }
    CHECK(r.total == doctest::Approx(left + right).epsilon(1e-12));
    // Dropping interior points can only decrease each side.
    const double chord_left = ensemble_energy(e, Partition::from_times({0.0, 0.5, 1.0})).per_interval[0];
    CHECK(chord_left <= left + 1e-12);
}

TEST_CASE("sigma_energy_bound") {
    const auto constant = TrajectoryEnsemble::create(Partition::uniform(2), 2,
                                                     {0.1, 0.1, 0.1, -0.6, -0.6, -0.6});
    const auto c = sigma_energy_bound(constant, Partition::uniform(2));
    CHECK(c.energy == doctest::Approx(0.0));
    CHECK(c.sigma_energy == doctest::Approx(0.0));

    // Equality case: all centered paths are a common multiple of one
    // positive profile.
    const auto eq = separable_ensemble(10, 5, [](double t) { return (1.0 + t) / 2.0; });
    const auto b = sigma_energy_bound(eq, Partition::uniform(5));
    CHECK(b.energy == doctest::Approx(b.sigma_energy).epsilon(1e-12));
    CHECK(b.energy > 0.0);

    // Archimedean: sigma is constant 1/sqrt(3), so sigma energy is tiny
    // while the energy approaches pi^2/3.
    const auto arch = archimedean_process(20000, Partition::uniform(50), 11);
    const auto a = sigma_energy_bound(arch, Partition::uniform(50));
    CHECK(a.energy == doctest::Approx(kPi * kPi / 3.0).epsilon(0.03));
    CHECK(a.sigma_energy < 0.05);
    CHECK(a.energy >= a.sigma_energy - 1e-12);

    // Inequality on random ensembles.
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 100; ++trial) {
        const auto e = random_ensemble(gen, 6, 5);
        const auto pi = random_partition(gen, 4);
        const auto s = sigma_energy_bound(e, pi);
        CHECK(s.energy >= s.sigma_energy - 1e-12);
    }
}
