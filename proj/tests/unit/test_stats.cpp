#include <doctest.h>

#include <cmath>

#include "rmx/rng.hpp"
#include "rmx/stats.hpp"

using namespace rmx;

TEST_CASE("chi-square tail") {
  CHECK(chi2_sf(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi2_sf(2.0, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("Kolmogorov tail") {
  CHECK(kolmogorov_sf(1.3580986) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(kolmogorov_sf(0.0) == doctest::Approx(1.0));
  CHECK(kolmogorov_sf(5.0) < 1e-15);
}

TEST_CASE("KS detects a shift and accepts the truth") {
  RngStream rng(3);
  std::vector<double> u, v;
  for (int i = 0; i < 5000; ++i) {
    u.push_back(rng.uniform());
    v.push_back(0.9 * rng.uniform());
  }
  auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_one_sample(u, cdf).p_value > 1e-3);
  CHECK(ks_one_sample(v, cdf).p_value < 1e-6);
  CHECK(ks_two_sample(u, v).p_value < 1e-6);
}

TEST_CASE("chi-square goodness of fit pools sparse cells") {
  std::vector<long> obs = {50, 48, 2, 0};
  std::vector<double> prob = {0.5, 0.48, 0.015, 0.005};
  TestStat t = chi_square_gof(obs, prob, 100);
  CHECK(t.dof == 2);
  CHECK(t.p_value > 0.5);

  std::vector<long> bad = {90, 10};
  std::vector<double> even = {0.5, 0.5};
  CHECK(chi_square_gof(bad, even, 100).p_value < 1e-10);
}

TEST_CASE("quantile edges and bins") {
  std::vector<double> x;
  for (int i = 0; i < 100; ++i) x.push_back(i);
  auto edges = quantile_edges(x, 4);
  REQUIRE(edges.size() == 3u);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(bin_index(edges, -1.0) == 0);
  CHECK(bin_index(edges, 50.0) == 2);
  CHECK(bin_index(edges, 1e9) == 3);
  // Ties collapse.
  CHECK(quantile_edges(std::vector<double>(50, 1.0), 5).size() <= 1u);
}

TEST_CASE("mean with standard error") {
  std::vector<double> x = {1, 2, 3, 4};
  MeanEstimate e = mean_with_se(x);
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.se == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}
