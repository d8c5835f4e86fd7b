#include "plab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace plab {

namespace {

double ks_pvalue(double d, double effective_n) {
    const double sq = std::sqrt(effective_n);
    return kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
}

} // namespace

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) {
        // Alternating series stalls for tiny lambda; use the Jacobi dual form
        // of the CDF instead.
        constexpr double pi = 3.141592653589793238462643;
        const double a = pi * pi / (8.0 * lambda * lambda);
        double cdf = 0.0;
        for (int k = 1; k <= 99; k += 2) {
            const double term = std::exp(-static_cast<double>(k) * k * a);
            cdf += term;
            if (term < 1e-300) break;
        }
        cdf *= std::sqrt(2.0 * pi) / lambda;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 1000; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test_uniform(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("ks_test_uniform: empty sample");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double cdf = std::clamp((v[i] + 1.0) / 2.0, 0.0, 1.0);
        d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - cdf));
    }
    return {d, ks_pvalue(d, n)};
}

KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_test_two_sample: empty sample");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= v) ++i;
        while (j < y.size() && y[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    const double ne = nx * ny / (nx + ny);
    return {d, ks_pvalue(d, ne)};
}

double chi_square_pvalue(double statistic, int df) {
    if (df < 1) throw std::invalid_argument("chi_square_pvalue: df must be >= 1");
    if (statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_uniform(std::span<const long long> counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need >= 2 cells");
    long long total = 0;
    for (long long c : counts) total += c;
    if (total <= 0) throw std::invalid_argument("chi_square_uniform: empty counts");
    const double expect = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (long long c : counts) {
        const double d = static_cast<double>(c) - expect;
        stat += d * d / expect;
    }
    const int df = static_cast<int>(counts.size()) - 1;
    return {stat, df, chi_square_pvalue(stat, df)};
}

ChiSquareResult chi_square_homogeneity(const std::vector<std::vector<long long>>& table) {
    if (table.size() < 2 || table.front().size() < 2)
        throw std::invalid_argument("chi_square_homogeneity: need >= 2 rows and columns");
    const std::size_t rows = table.size(), cols = table.front().size();
    std::vector<double> rowsum(rows, 0.0), colsum(cols, 0.0);
    double total = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (table[r].size() != cols)
            throw std::invalid_argument("chi_square_homogeneity: ragged table");
        for (std::size_t c = 0; c < cols; ++c) {
            rowsum[r] += static_cast<double>(table[r][c]);
            colsum[c] += static_cast<double>(table[r][c]);
            total += static_cast<double>(table[r][c]);
        }
    }
    double stat = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const double expect = rowsum[r] * colsum[c] / total;
            if (expect > 0.0) {
                const double d = static_cast<double>(table[r][c]) - expect;
                stat += d * d / expect;
            }
        }
    const int df = static_cast<int>((rows - 1) * (cols - 1));
    return {stat, df, chi_square_pvalue(stat, df)};
}

double tv_distance_uniform(std::span<const long long> counts) {
    long long total = 0;
    for (long long c : counts) total += c;
    if (total <= 0 || counts.empty())
        throw std::invalid_argument("tv_distance_uniform: empty counts");
    const double uniform = 1.0 / static_cast<double>(counts.size());
    double tv = 0.0;
    for (long long c : counts)
        tv += std::fabs(static_cast<double>(c) / static_cast<double>(total) - uniform);
    return tv / 2.0;
}

} // namespace plab
