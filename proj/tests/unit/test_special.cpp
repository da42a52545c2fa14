#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rmx/rng.hpp"
#include "rmx/errors.hpp"
#include "rmx/special.hpp"

using namespace rmx;

namespace {

const double kPi = std::numbers::pi;

// Direct product form, written independently of the library.
double mv_gamma_direct(int m, int beta, double a) {
  double s = m * (m - 1) * beta / 4.0 * std::log(kPi);
  for (int i = 1; i <= m; ++i) s += std::lgamma(a - (i - 1) * beta / 2.0);
  return s;
}

}  // namespace

TEST_CASE("tau per algebra") {
  CHECK(tau(1, 3) == 0);
  CHECK(tau(2, 3) == -3);
  CHECK(tau(4, 3) == -6);
  CHECK(tau(8, 3) == -12);
}

TEST_CASE("multivariate gamma") {
  CHECK(mv_gamma_log(2, 2, 2.0).value() == doctest::Approx(std::log(kPi)).epsilon(1e-15));
  CHECK(mv_gamma_log(1, 1, 3.7).value() == doctest::Approx(std::lgamma(3.7)).epsilon(1e-15));
  for (int beta : {1, 2, 4, 8})
    for (int m : {2, 3, 5}) {
      double a = (m - 1) * beta / 2.0 + 0.75;
      CHECK(mv_gamma_log(m, beta, a).value() == doctest::Approx(mv_gamma_direct(m, beta, a)).epsilon(1e-13));
    }
  // Large arguments stay finite in log space.
  CHECK(std::isfinite(mv_gamma_log(10, 4, 500.0).value()));
  CHECK_THROWS_AS(mv_gamma_log(2, 2, 1.0), DomainError);
}

TEST_CASE("multivariate beta is the gamma ratio") {
  for (int beta : {1, 2, 4}) {
    int m = 3;
    double a = (m - 1) * beta / 2.0 + 0.5, b = (m - 1) * beta / 2.0 + 1.25;
    double ref = mv_gamma_direct(m, beta, a) + mv_gamma_direct(m, beta, b) - mv_gamma_direct(m, beta, a + b);
    CHECK(mv_beta_log(m, beta, a, b).value() == doctest::Approx(ref).epsilon(1e-13));
  }
  CHECK(mv_beta_log(1, 1, 2.0, 3.0).value() == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-14));
}

TEST_CASE("Stiefel volume") {
  CHECK(stiefel_log_volume(1, 2, 1).value() == doctest::Approx(std::log(2 * kPi)).epsilon(1e-15));
  // Unit sphere S^3 has area 2 pi^2.
  CHECK(stiefel_log_volume(1, 2, 2).value() == doctest::Approx(std::log(2 * kPi * kPi)).epsilon(1e-15));
  for (int beta : {1, 2, 4}) {
    double ref = 3 * std::log(2.0) + 3 * 5 * beta / 2.0 * std::log(kPi) - mv_gamma_direct(3, beta, 5 * beta / 2.0);
    CHECK(stiefel_log_volume(3, 5, beta).value() == doctest::Approx(ref).epsilon(1e-13));
  }
  CHECK(stiefel_log_volume(2, 2, 1).value() == doctest::Approx(std::log(4 * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(stiefel_log_volume(3, 2, 1), DomainError);
}

TEST_CASE("Stiefel volume of a sphere against a Monte Carlo ball volume") {
  // Vol(V_{1,n}) is the area of the unit sphere in R^{beta n}, which is N
  // times the volume of the unit ball.
  const int beta = 2, n = 2, dim = beta * n;
  RngStream rng(20240601);
  const long trials = 400000;
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    double r2 = 0.0;
    for (int k = 0; k < dim; ++k) {
      double u = 2.0 * rng.uniform() - 1.0;
      r2 += u * u;
    }
    hits += r2 < 1.0;
  }
  double p = static_cast<double>(hits) / trials;
  double ball = p * std::pow(2.0, dim);
  double se = std::sqrt(p * (1 - p) / trials) * std::pow(2.0, dim);
  double expected = std::exp(stiefel_log_volume(1, n, beta).value()) / dim;
  CHECK(std::abs(ball - expected) < 4 * se);
}

TEST_CASE("Fourier constants") {
  CHECK(std::exp(fourier_constant_log(2, 1).value()) == doctest::Approx(4.0 / kPi).epsilon(1e-14));
  CHECK(std::exp(fourier_constant_log(2, 2).value()) == doctest::Approx(2.0).epsilon(1e-14));
  // beta = 2: m! for any m.
  CHECK(std::exp(fourier_constant_log(4, 2).value()) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(std::exp(fourier_constant_log(2, 4).value()) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("Morris constant as a ratio of group volumes") {
  // c(m) = pi^tau Vol(V_{m,m}) / Vol(P_S(m)); no 2^{-m} factor.
  for (int beta : {1, 2, 4, 8})
    for (int m : {1, 2, 3, 4}) {
      double ratio = tau(beta, m) * std::log(kPi) + stiefel_log_volume(m, m, beta).value() -
                     symmetric_space_log_volume(m, beta).value();
      CHECK(fourier_constant_log(m, beta).value() == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("symmetric space volume at m = 1") {
  for (int beta : {1, 2, 4}) {
    double ref = std::log(2.0) + (beta / 2.0 + tau(beta, 1)) * std::log(kPi) - std::lgamma(beta / 2.0);
    CHECK(symmetric_space_log_volume(1, beta).value() == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("lgamma_pos") {
  CHECK(lgamma_pos(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
}
