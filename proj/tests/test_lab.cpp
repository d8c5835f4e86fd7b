#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plab/lab.hpp"
#include "plab/limits.hpp"
#include "plab/measures.hpp"
#include "plab/networks.hpp"
#include "plab/process.hpp"
#include "plab/stats.hpp"

using namespace plab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("kolmogorov and chi-square tails") {
    CHECK(kolmogorov_q(1e-9) == doctest::Approx(1.0));
    CHECK(kolmogorov_q(10.0) == doctest::Approx(0.0));
    CHECK(kolmogorov_q(1.358) == doctest::Approx(0.05).epsilon(0.02));
    CHECK(chi_square_pvalue(3.841, 1) == doctest::Approx(0.05).epsilon(0.01));
    CHECK(chi_square_pvalue(30.578, 15) == doctest::Approx(0.01).epsilon(0.02));
    CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);

    const std::vector<long long> flat{250, 250, 250, 250};
    CHECK(tv_distance_uniform(flat) == doctest::Approx(0.0));
    CHECK(chi_square_uniform(flat).p_value == doctest::Approx(1.0));
    const std::vector<long long> point{1000, 0, 0, 0};
    CHECK(tv_distance_uniform(point) == doctest::Approx(0.75));
    CHECK(chi_square_uniform(point).p_value < 1e-6);
}

TEST_CASE("second_moment_curve") {
    const auto e = archimedean_process(100000, Partition::uniform(50), 70);
    const auto r = second_moment_curve(e);
    CHECK(r.empirical[0] == doctest::Approx(0.0));
    CHECK(r.target[0] == doctest::Approx(0.0));
    CHECK(r.target.back() == doctest::Approx(4.0 / 3.0));
    CHECK(r.sup_gap <= 0.01);

    // Averaging replica curves equals pooling them.
    const auto e1 = archimedean_process(500, Partition::uniform(10), 1);
    const auto e2 = archimedean_process(500, Partition::uniform(10), 2);
    const auto avg = average_curves({second_moment_curve(e1), second_moment_curve(e2)});
    for (std::size_t j = 0; j <= 10; ++j) {
        const double pooled = (second_moment_curve(e1).empirical[j] +
                               second_moment_curve(e2).empirical[j]) / 2.0;
        CHECK(avg.empirical[j] == doctest::Approx(pooled));
    }
}

TEST_CASE("holder_check") {
    const auto constant = TrajectoryEnsemble::create(Partition::uniform(3), 1,
                                                     {0.2, 0.2, 0.2, 0.2});
    const auto hc = holder_check(constant, 0.1);
    CHECK(hc.violations == 0);
    CHECK(hc.total_pairs == 6);

    // A jump of 2 over one step of length 1/100 breaks the envelope
    // (2 > sqrt(8) * 0.1 + 0.1).
    std::vector<double> jump(101, -1.0);
    for (int j = 50; j <= 100; ++j) jump[static_cast<std::size_t>(j)] = 1.0;
    const auto spiky = TrajectoryEnsemble::create(Partition::uniform(100), 1, std::move(jump));
    CHECK(holder_check(spiky, 0.1).violations > 0);

    // RSN trajectories respect the envelope (checked on a linearized grid).
    const auto w = sample_rsn(60, 424242);
    const auto traj = linearize(trajectories(process_from_word(w)), 100);
    const auto hr = holder_check(traj, 0.1);
    CHECK(hr.violations == 0);
    CHECK(hr.total_pairs == 60LL * (101 * 100 / 2));

    CHECK_THROWS_AS(holder_check(constant, 0.0), std::invalid_argument);
}

TEST_CASE("marginal_uniformity") {
    // Permutation-derived ensembles sit on the exact grid: KS distance 1/n.
    const auto proc = sample_interchange(40, 80, 9);
    const auto e = trajectories(proc);
    const auto k0 = marginal_uniformity(e, 0.5);
    CHECK(k0.statistic <= 1.0 / 40.0 + 1e-12);

    const auto arch = archimedean_process(100000, Partition::uniform(20), 71);
    CHECK(marginal_uniformity(arch, 0.0).p_value > 0.01);
    CHECK(marginal_uniformity(arch, 0.37).p_value > 0.01);
    CHECK(marginal_uniformity(arch, 1.0).p_value > 0.01);

    const auto zeros = TrajectoryEnsemble::create(
        Partition::uniform(1), 200, std::vector<double>(400, 0.0));
    const auto kz = marginal_uniformity(zeros, 0.5);
    CHECK(kz.statistic == doctest::Approx(0.5));
    CHECK(kz.p_value < 0.01);

    CHECK_THROWS_AS(marginal_uniformity(arch, 1.0001), std::invalid_argument);
}

TEST_CASE("shift_ensemble") {
    // On a grid closed under the shift, the Archimedean ensemble transforms
    // exactly into phase-advanced sine curves.
    const auto e = archimedean_process(200, Partition::uniform(10), 72);
    const double eps = 0.2;
    const auto s = shift_ensemble(e, eps);
    for (int i = 0; i < 200; ++i) {
        const double ax = e.path(i)[0];                       // cos(0) Ax
        const double ay = e.path(i)[static_cast<std::size_t>(5)]; // value at t = 1/2 is Ay
        for (int j = 0; j <= 10; ++j) {
            const double t = static_cast<double>(j) / 10.0;
            const double want = std::cos(kPi * (t + eps)) * ax + std::sin(kPi * (t + eps)) * ay;
            CHECK(s.path(i)[static_cast<std::size_t>(j)] == doctest::Approx(want).epsilon(1e-12));
        }
    }

    // Shift invariance of the second-moment statistic, up to Monte Carlo.
    const auto big = archimedean_process(60000, Partition::uniform(40), 73);
    const auto shifted = shift_ensemble(big, 1.0 / 40.0);
    const auto a = second_moment_curve(big);
    const auto b = second_moment_curve(shifted);
    CHECK(b.sup_gap <= a.sup_gap + 0.02);

    CHECK_THROWS_AS(shift_ensemble(big, 1.5), std::invalid_argument);
}
