#include <doctest.h>

#include <cmath>

#include "rmx/charts.hpp"
#include "rmx/jacobians.hpp"
#include "rmx/samplers.hpp"
#include "rmx/verify.hpp"

using namespace rmx;

TEST_CASE("Cholesky Jacobian against a hand-derived determinant") {
  // s11 = t11^2, s12 = t11 t12, s22 = t12^2 + t22^2: det = 4 t11^2 t22.
  const double t11 = 1.3, t12 = -0.4, t22 = 0.7;
  const double t[] = {t11, t22};
  CHECK(logjac_cholesky(t, 1) == doctest::Approx(std::log(4 * t11 * t11 * t22)).epsilon(1e-14));

  FactorizationChart chart;
  chart.name = "cholesky-by-hand";
  chart.base = {t11, t12, t22};
  chart.output_dim = 3;
  chart.reconstruct = [](std::span<const double> x) {
    return std::vector<double>{x[0] * x[0], x[1] * x[1] + x[2] * x[2], x[0] * x[1]};
  };
  CHECK(fd_jacobian_oracle(chart, chart.base) == doctest::Approx(std::log(4 * t11 * t11 * t22)).epsilon(1e-8));
}

TEST_CASE("real linear map Jacobian is |det A|^m |det B|^n") {
  Eigen::MatrixXd a(3, 3), b(2, 2);
  a << 2, 1, 0, 0.5, -1, 0.3, 0, 0.2, 1.5;
  b << 1, 0.4, -0.3, 2;
  double ref = 2 * std::log(std::abs(a.determinant())) + 3 * std::log(std::abs(b.determinant()));
  CHECK(logjac_linear(DMatrix::from_real(a), DMatrix::from_real(b)) == doctest::Approx(ref).epsilon(1e-13));
  // Y = A X A^T on symmetric 2 x 2: |det A|^3.
  CHECK(logjac_congruence(DMatrix::from_real(b)) ==
        doctest::Approx(3 * std::log(std::abs(b.determinant()))).epsilon(1e-13));
}

TEST_CASE("Wishart map exponent") {
  // m = 1: |S|^{beta n / 2 - 1} / 2.
  const double s = 2.5;
  CHECK(logjac_wishart_map(std::log(s), 1, 3, 2) == doctest::Approx((3.0 - 1.0) * std::log(s) - std::log(2.0)));
}

TEST_CASE("every lemma agrees with the finite-difference oracle") {
  RngStream rng(77);
  for (Lemma lemma : all_lemmas())
    for (int beta : {1, 2, 4})
      for (int m : {2, 3}) {
        CAPTURE(lemma_name(lemma));
        CAPTURE(beta);
        CAPTURE(m);
        const int n = lemma_is_rectangular(lemma) ? m + 1 : m;
        TestReport r = certify_jacobian(lemma, m, n, beta, 3, rng);
        CHECK(r.status == Status::Pass);
      }
}

TEST_CASE("certification examples") {
  RngStream rng(1);
  CHECK(certify_jacobian(Lemma::Cholesky, 3, 3, 2, 20, rng).status == Status::Pass);
  CHECK(certify_jacobian(Lemma::Spectral, 2, 2, 1, 20, rng).status == Status::Pass);
  TestReport oct = certify_jacobian(Lemma::Spectral, 2, 2, 8, 20, rng);
  CHECK(oct.status == Status::Skip);
  CHECK_FALSE(oct.detail.empty());
}

TEST_CASE("square-root Jacobian uses the pairs i <= j") {
  // In the eigenbasis dS_ij = (d_i + d_j) dR_ij: diagonal pairs give 2 d_i
  // once, off-diagonal pairs (d_i + d_j)^beta.
  const double r[] = {3.0};
  CHECK(logjac_sqrt(r, 1) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  const double d[] = {2.0, 0.5};
  for (int beta : {1, 2, 4}) {
    double ref = std::log(2 * 2.0) + std::log(2 * 0.5) + beta * std::log(2.5);
    CHECK(logjac_sqrt(d, beta) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("lemma names round trip") {
  for (Lemma l : all_lemmas()) CHECK(parse_lemma(lemma_name(l)) == l);
  CHECK_THROWS_AS(parse_lemma("nope"), DomainError);
}

TEST_CASE("singular factor data is rejected") {
  const double t[] = {1.0, 0.0};
  CHECK_THROWS_AS(logjac_cholesky(t, 1), DomainError);
}
