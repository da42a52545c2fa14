#include <doctest.h>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>

#include "rmx/samplers.hpp"
#include "rmx/stats.hpp"

using namespace rmx;
namespace bm = boost::math;

namespace {

EnsembleSpec spec(Family f, int beta, int m, double n = 1, double nu = 1, double q = 0) {
  EnsembleSpec s;
  s.family = f;
  s.beta = beta;
  s.m = m;
  s.n = n;
  s.nu = nu;
  s.q = q;
  return s;
}

}  // namespace

TEST_CASE("streams are reproducible and substreams independent of order") {
  RngStream a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  RngStream root(42);
  RngStream s3 = root.substream(3);
  RngStream other = root.substream(4);
  (void)other();
  CHECK(root.substream(3)() == s3());
  CHECK(RngStream(42).substream(3)() != RngStream(42).substream(4)());
}

TEST_CASE("Gaussian entries have unit second moment") {
  RngStream rng(5);
  for (int beta : {1, 2, 4}) {
    double sum = 0.0;
    const int reps = 4000;
    for (int r = 0; r < reps; ++r) {
      DMatrix a = sample_gaussian_matrix(2, 3, beta, rng);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) sum += a(i, j).norm2();
    }
    CHECK(sum / (reps * 6.0) == doctest::Approx(1.0).epsilon(0.03));
  }
}

TEST_CASE("Haar matrices are unitary") {
  RngStream rng(6);
  for (int beta : {1, 2, 4}) {
    DMatrix u = sample_haar(4, beta, rng);
    CHECK(max_abs_diff(adjoint(u) * u, DMatrix::identity(algebra_from_beta(beta), 4)) < 1e-12);
  }
}

TEST_CASE("Hermite ensemble second moment") {
  // E tr A^2 = m / beta + m (m - 1) / 2.
  RngStream rng(7);
  const int m = 3, reps = 20000;
  for (int beta : {1, 2, 4}) {
    double dense = 0.0, tri = 0.0;
    for (int r = 0; r < reps; ++r) {
      for (double l : hermitian_eigenvalues(sample_hermite_ensemble(m, beta, rng))) dense += l * l;
      for (double l : sample_tridiagonal_beta(TridiagonalFamily::Hermite, m, beta, 0, rng)) tri += l * l;
    }
    double expected = static_cast<double>(m) / beta + m * (m - 1) / 2.0;
    CHECK(dense / reps == doctest::Approx(expected).epsilon(0.03));
    CHECK(tri / reps == doctest::Approx(expected).epsilon(0.03));
  }
  double oct = 0.0;
  for (int r = 0; r < reps; ++r)
    for (double l : sample_tridiagonal_beta(TridiagonalFamily::Hermite, m, 8, 0, rng)) oct += l * l;
  CHECK(oct / reps == doctest::Approx(3.0 / 8.0 + 3.0).epsilon(0.03));
}

TEST_CASE("Laguerre m = 1 is chi-square") {
  RngStream rng(8);
  std::vector<double> x;
  for (int i = 0; i < 20000; ++i) x.push_back(sample_eigenvalues(spec(Family::Laguerre, 1, 1, 3), rng)[0]);
  bm::chi_squared_distribution<> chi(3.0);
  CHECK(ks_one_sample(x, [&](double v) { return bm::cdf(chi, v); }).p_value > 1e-3);
}

TEST_CASE("Jacobi m = 1 is Beta(n1/2, n2/2)") {
  RngStream rng(9);
  std::vector<double> x;
  for (int i = 0; i < 20000; ++i) {
    auto s = std::get<HermitianMatrix>(sample_quotient_family(spec(Family::GegenbauerLaguerreII, 1, 1, 3, 4), 1, 3, 4, rng));
    x.push_back(s(0, 0).w);
  }
  bm::beta_distribution<> b(1.5, 2.0);
  CHECK(ks_one_sample(x, [&](double v) { return bm::cdf(b, v); }).p_value > 1e-3);
}

TEST_CASE("spectra are descending and inside the support") {
  RngStream rng(10);
  for (int beta : {1, 2, 4}) {
    for (EnsembleSpec s : {spec(Family::Hermite, beta, 3, 3), spec(Family::GegenbauerI, beta, 3, 3, 1, 0.5),
                           spec(Family::Laguerre, beta, 3, 4), spec(Family::GegenbauerLaguerreII, beta, 3, 4, 4),
                           spec(Family::Fourier, beta, 3)}) {
      CAPTURE(s.describe());
      auto l = sample_eigenvalues(s, rng);
      REQUIRE(l.size() == 3u);
      CHECK(std::is_sorted(l.rbegin(), l.rend()));
      if (s.family == Family::Laguerre) CHECK(l.back() > 0.0);
      if (s.family == Family::GegenbauerLaguerreII) {
        CHECK(l.back() > 0.0);
        CHECK(l.front() < 1.0);
      }
      if (s.family == Family::Fourier) {
        CHECK(l.front() <= std::numbers::pi);
        CHECK(l.back() > -std::numbers::pi);
      }
    }
  }
}

TEST_CASE("radial samples respect the Gegenbauer support") {
  RngStream rng(12);
  for (int i = 0; i < 200; ++i) {
    DMatrix a = sample_radial_family(spec(Family::GegenbauerI, 2, 2, 3, 1, 0.5), 2, 3, rng);
    CHECK(frobenius_norm(a) < 1.0);
  }
}

TEST_CASE("octonion dense sampling is unsupported") {
  RngStream rng(1);
  CHECK_THROWS_AS(sample_hermite_ensemble(2, 8, rng), Error);
}
