#include "rmx/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

namespace rmx {

double chi2_sf(double x, double dof) {
  if (!(x > 0)) return 1.0;
  if (!std::isfinite(x)) return 0.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x));
}

double kolmogorov_sf(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0, sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double t = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * t;
    if (t < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {
double ks_p(double d, double ne) {
  double s = std::sqrt(ne);
  return kolmogorov_sf((s + 0.12 + 0.11 / s) * d);
}
}  // namespace

TestStat ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double f = cdf(x[i]);
    d = std::max({d, std::abs((i + 1) / n - f), std::abs(f - i / n)});
  }
  return {d, ks_p(d, n), 0};
}

TestStat ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return {d, ks_p(d, na * nb / (na + nb)), 0};
}

TestStat chi_square_gof(std::span<const long> observed, std::span<const double> prob, long total,
                        double min_expected) {
  double stat = 0.0, pool_e = 0.0, covered = 0.0;
  long pool_o = 0, observed_sum = 0;
  int cells = 0;
  for (size_t k = 0; k < observed.size(); ++k) {
    double e = prob[k] * total;
    covered += prob[k];
    observed_sum += observed[k];
    if (e < min_expected) {
      pool_e += e;
      pool_o += observed[k];
      continue;
    }
    stat += (observed[k] - e) * (observed[k] - e) / e;
    ++cells;
  }
  double rest_e = (1.0 - covered) * total;
  long rest_o = total - observed_sum;
  if (rest_e >= min_expected) {
    stat += (rest_o - rest_e) * (rest_o - rest_e) / rest_e;
    ++cells;
  } else {
    pool_e += std::max(rest_e, 0.0);
    pool_o += rest_o;
  }
  if (pool_e >= min_expected || pool_o > 0) {
    double e = std::max(pool_e, 1e-300);
    stat += (pool_o - e) * (pool_o - e) / e;
    ++cells;
  }
  int dof = std::max(cells - 1, 1);
  return {stat, chi2_sf(stat, dof), dof};
}

std::vector<double> quantile_edges(std::vector<double> x, int bins) {
  std::sort(x.begin(), x.end());
  std::vector<double> edges;
  if (x.empty()) return edges;
  for (int k = 1; k < bins; ++k) {
    double e = x[static_cast<size_t>(static_cast<double>(k) / bins * (x.size() - 1))];
    if (edges.empty() || e > edges.back()) edges.push_back(e);
  }
  return edges;
}

int bin_index(std::span<const double> edges, double v) {
  return static_cast<int>(std::upper_bound(edges.begin(), edges.end(), v) - edges.begin());
}

MeanEstimate mean_with_se(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / n, ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1) / n)};
}

}  // namespace rmx
