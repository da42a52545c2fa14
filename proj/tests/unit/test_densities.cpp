#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rmx/densities.hpp"
#include "rmx/jacobians.hpp"
#include "rmx/samplers.hpp"

using namespace rmx;

namespace {

const double kPi = std::numbers::pi;

EnsembleSpec spec(Family f, int beta, int m, double n = 1, double nu = 1, double q = 0,
                  Shape shape = Shape::Rectangular) {
  EnsembleSpec s;
  s.family = f;
  s.beta = beta;
  s.m = m;
  s.n = n;
  s.nu = nu;
  s.q = q;
  s.shape = shape;
  return s;
}

HermitianMatrix random_pd(Algebra alg, int m, RngStream& rng) {
  return gram(sample_gaussian(alg, m + 3, m, 1.0, rng));
}

MatrixVariateSpec variate(MatrixVariateKind kind, int beta, int m, double n, double nu) {
  return MatrixVariateSpec::standard(kind, spec(Family::Hermite, beta, m, n, nu));
}

}  // namespace

TEST_CASE("scalar density values") {
  DMatrix zero = DMatrix::zeros(Algebra::Real, 1, 1);
  CHECK(log_density_element(spec(Family::Hermite, 1, 1), zero).value() ==
        doctest::Approx(-0.5 * std::log(2 * kPi)).epsilon(1e-15));

  MatrixVariateSpec w = variate(MatrixVariateKind::Wishart, 1, 1, 2, 1);
  DMatrix s = DMatrix::identity(Algebra::Real, 1);
  s(0, 0) = Scalar(2.0);
  CHECK(log_density_matrix_variate(w, s).value() == doctest::Approx(-1.0 - std::log(2.0)).epsilon(1e-14));

  DMatrix outside = DMatrix::zeros(Algebra::Real, 2, 1);
  outside(0, 0) = Scalar(0.9);
  outside(1, 0) = Scalar(0.6);
  LogValue v = log_density_element(spec(Family::GegenbauerI, 1, 1, 2, 1, 0.5), outside);
  CHECK_FALSE(v.finite);
  CHECK(std::isinf(v.value()));
}

TEST_CASE("Fourier angle density") {
  const double one[] = {0.4};
  CHECK(log_density_fourier_angles(1, 1, one).value() == doctest::Approx(-std::log(2 * kPi)).epsilon(1e-15));
  // |1 - e^{i pi}|^2 = 4 and c = 2 for the CUE pair.
  const double two[] = {0.0, kPi};
  CHECK(log_density_fourier_angles(2, 2, two).value() ==
        doctest::Approx(std::log(4.0) - std::log(2.0) - 2 * std::log(2 * kPi)).epsilon(1e-14));
  const double same[] = {0.3, 0.3};
  CHECK_FALSE(log_density_fourier_angles(2, 1, same).finite);
}

TEST_CASE("Hermite ensemble element density in closed form") {
  // Diagonal entries N(0, 1), off-diagonal N(0, 1/2).
  DMatrix a = DMatrix::zeros(Algebra::Real, 2, 2);
  a(0, 0) = Scalar(0.3);
  a(1, 1) = Scalar(-1.1);
  a(0, 1) = a(1, 0) = Scalar(0.4);
  double tr2 = 0.09 + 1.21 + 2 * 0.16;
  double ref = -0.5 * tr2 - std::log(2 * kPi) - 0.5 * std::log(kPi);
  CHECK(log_density_element(spec(Family::Hermite, 1, 2, 2, 1, 0, Shape::Ensemble), a).value() ==
        doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("densities are invariant under unitary changes of basis") {
  RngStream rng(21);
  for (int beta : {1, 2, 4}) {
    CAPTURE(beta);
    Algebra alg = algebra_from_beta(beta);
    const int m = 2, n = 3;
    DMatrix q = sample_haar(n, beta, rng), p = sample_haar(m, beta, rng);
    DMatrix a = 0.1 * sample_gaussian(alg, n, m, 1.0, rng);
    for (EnsembleSpec s : {spec(Family::Hermite, beta, m, n), spec(Family::TI, beta, m, n, 2.5),
                           spec(Family::GegenbauerI, beta, m, n, 1, 1.5), spec(Family::TII, beta, m, n, 3.0),
                           spec(Family::GegenbauerII, beta, m, n, 3.0)}) {
      CAPTURE(s.describe());
      double base = log_density_element(s, a).value();
      REQUIRE(std::isfinite(base));
      CHECK(log_density_element(s, q * a * p).value() == doctest::Approx(base).epsilon(1e-10));
    }
    HermitianMatrix sm = random_pd(alg, m, rng);
    DMatrix u = sample_haar(m, beta, rng);
    HermitianMatrix rotated(u * sm.matrix() * adjoint(u), 1e-8);
    for (EnsembleSpec s : {spec(Family::Laguerre, beta, m, 4.5), spec(Family::TLaguerreII, beta, m, 4, 3.5)}) {
      double base = log_density_laguerre(s, sm).value();
      CHECK(log_density_laguerre(s, rotated).value() == doctest::Approx(base).epsilon(1e-10));
    }
  }
}

TEST_CASE("beta type I and type II densities are related by U = F (I + F)^{-1}") {
  RngStream rng(8);
  for (int beta : {1, 2}) {
    CAPTURE(beta);
    const int m = 2;
    Algebra alg = algebra_from_beta(beta);
    MatrixVariateSpec b1 = variate(MatrixVariateKind::BetaI, beta, m, 4, 5);
    MatrixVariateSpec b2 = variate(MatrixVariateKind::BetaII, beta, m, 4, 5);
    for (int trial = 0; trial < 5; ++trial) {
      HermitianMatrix f(0.3 * random_pd(alg, m, rng).matrix());
      HermitianMatrix ipf(DMatrix::identity(alg, m) + f.matrix());
      HermitianMatrix u(DMatrix::identity(alg, m) - pd_inverse(ipf).matrix(), 1e-8);
      // dU = (I + F)^{-1} dF (I + F)^{-1}.
      double log_jac = -(beta * (m - 1) + 2.0) * log_det_pd(ipf);
      double via_u = log_density_matrix_variate(b1, u.matrix()).value() + log_jac;
      CHECK(log_density_matrix_variate(b2, f.matrix()).value() == doctest::Approx(via_u).epsilon(1e-10));
    }
  }
}

TEST_CASE("matrix normal density whitens to the standard density") {
  RngStream rng(31);
  for (int beta : {1, 2, 4}) {
    CAPTURE(beta);
    const int m = 2, n = 3;
    Algebra alg = algebra_from_beta(beta);
    MatrixVariateSpec mv = variate(MatrixVariateKind::Normal, beta, m, n, 1);
    mv.sigma = random_pd(alg, m, rng);
    mv.theta = random_pd(alg, n, rng);
    mv.mu = sample_gaussian(alg, n, m, 1.0, rng);
    DMatrix x = sample_gaussian(alg, n, m, 1.0, rng);
    DMatrix z = pd_inv_sqrt(mv.theta).matrix() * (x - mv.mu) * pd_inv_sqrt(mv.sigma).matrix();
    double ref = log_density_element(spec(Family::Hermite, beta, m, n), z).value() -
                 logjac_linear(pd_sqrt(mv.theta).matrix(), pd_sqrt(mv.sigma).matrix());
    CHECK(log_density_matrix_variate(mv, x).value() == doctest::Approx(ref).epsilon(1e-10));

    if (beta == 1) {
      // Textbook real matrix normal.
      Eigen::MatrixXd xs(n, m), mus(n, m), sig(m, m), th(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
          xs(r, c) = x(r, c).w;
          mus(r, c) = mv.mu(r, c).w;
        }
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sig(r, c) = mv.sigma(r, c).w;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) th(r, c) = mv.theta(r, c).w;
      Eigen::MatrixXd d = xs - mus;
      double quad = (sig.inverse() * d.transpose() * th.inverse() * d).trace();
      double direct = -0.5 * m * n * std::log(2 * kPi) - 0.5 * n * std::log(sig.determinant()) -
                      0.5 * m * std::log(th.determinant()) - 0.5 * quad;
      CHECK(log_density_matrix_variate(mv, x).value() == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("Wishart density against the textbook real form") {
  // f(S) = |S|^{(n-m-1)/2} etr(-Sigma^{-1} S / 2) / (2^{nm/2} |Sigma|^{n/2} Gamma_m(n/2)).
  RngStream rng(2);
  const int m = 2, n = 5;
  MatrixVariateSpec w = variate(MatrixVariateKind::Wishart, 1, m, n, 1);
  w.sigma = random_pd(Algebra::Real, m, rng);
  HermitianMatrix s = random_pd(Algebra::Real, m, rng);
  Eigen::Matrix2d sm, sig;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      sm(r, c) = s(r, c).w;
      sig(r, c) = w.sigma(r, c).w;
    }
  double lgm = 0.25 * std::log(kPi) * 2 + std::lgamma(n / 2.0) + std::lgamma((n - 1) / 2.0);
  double ref = 0.5 * (n - m - 1) * std::log(sm.determinant()) - 0.5 * (sig.inverse() * sm).trace() -
               0.5 * n * m * std::log(2.0) - 0.5 * n * std::log(sig.determinant()) - lgm;
  CHECK(log_density_matrix_variate(w, s.matrix()).value() == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("eigenvalue density input checks") {
  EigenvalueDensity d(spec(Family::Hermite, 2, 2, 2));
  const double ordered[] = {1.0, -0.5};
  const double unordered[] = {-0.5, 1.0};
  CHECK(std::isfinite(d(ordered).value()));
  CHECK_THROWS_AS(d(unordered), DomainError);
  CHECK(d.pdf_unchecked(unordered) == 0.0);

  EigenvalueDensity lag(spec(Family::Laguerre, 1, 2, 3));
  const double negative[] = {1.0, -0.5};
  CHECK_THROWS_AS(lag(negative), DomainError);
}

TEST_CASE("parameter domains name the field") {
  EnsembleSpec s = spec(Family::GegenbauerI, 1, 2, 2, 1, -2);
  try {
    s.validate();
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.field() == "q");
  }
  CHECK_THROWS_AS(spec(Family::TII, 1, 3, 3, 1.5).validate(), DomainError);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::Hermite, Family::TI, Family::GegenbauerI, Family::TII, Family::GegenbauerII,
                   Family::Laguerre, Family::TLaguerreI, Family::GegenbauerLaguerreI, Family::TLaguerreII,
                   Family::GegenbauerLaguerreII, Family::Fourier})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("jacobi") == Family::GegenbauerLaguerreII);
  for (const char* k : {"normal", "wishart", "beta1", "beta2", "sgw", "vsgw"})
    CHECK(kind_name(parse_kind(k)) == k);
}
