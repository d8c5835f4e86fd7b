#pragma once

#include <span>
#include <vector>

namespace plab {

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

/// One-sample Kolmogorov-Smirnov test against Uniform[-1,1]; asymptotic
/// p-value with the usual small-sample correction to the effective size.
KsResult ks_test_uniform(std::span<const double> values);

/// Two-sample Kolmogorov-Smirnov test.
KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b);

/// Survival function of the Kolmogorov distribution, Q(lambda) =
/// 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
double chi_square_pvalue(double statistic, int df);

/// Pearson statistic and p-value of observed counts against uniform cell
/// probabilities.
struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 0.0;
};
ChiSquareResult chi_square_uniform(std::span<const long long> counts);

/// Homogeneity test of an r x c contingency table (rows = groups).
ChiSquareResult chi_square_homogeneity(const std::vector<std::vector<long long>>& table);

/// Total variation distance between empirical counts and the uniform law on
/// the same support.
double tv_distance_uniform(std::span<const long long> counts);

} // namespace plab
