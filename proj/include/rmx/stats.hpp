#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rmx/quadrature.hpp"

namespace rmx {

struct TestStat {
  double statistic = 0.0;
  double p_value = 1.0;
  int dof = 0;
};

// Upper tail of the chi-square distribution.
double chi2_sf(double x, double dof);
// Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2), the limiting
// Kolmogorov tail.
double kolmogorov_sf(double lambda);

// KS against a continuous cdf, with the small-sample correction
// lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) D.
TestStat ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf);
TestStat ks_two_sample(std::vector<double> a, std::vector<double> b);

// Pearson chi-square of counts against cell probabilities. Cells with
// expected count below `min_expected` are pooled into one cell; the
// probability not covered by `prob` (1 - sum) forms another cell when it is
// large enough, otherwise it is ignored.
TestStat chi_square_gof(std::span<const long> observed, std::span<const double> prob, long total,
                        double min_expected = 5.0);

// Interior bin edges at empirical quantiles (bins - 1 values, strictly
// increasing; duplicates dropped).
std::vector<double> quantile_edges(std::vector<double> x, int bins);

// Index of the bin containing v given interior edges.
int bin_index(std::span<const double> edges, double v);

struct MeanEstimate {
  double mean = 0.0;
  double se = 0.0;
};
MeanEstimate mean_with_se(std::span<const double> x);

}  // namespace rmx
