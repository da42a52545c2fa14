#include <doctest.h>

#include <algorithm>

#include "rmx/algebra.hpp"
#include "rmx/rng.hpp"
#include "rmx/samplers.hpp"

using namespace rmx;

namespace {

DMatrix random_matrix(Algebra alg, int r, int c, RngStream& rng) { return sample_gaussian(alg, r, c, 1.0, rng); }

HermitianMatrix random_pd(Algebra alg, int m, RngStream& rng) {
  DMatrix a = random_matrix(alg, m + 2, m, rng);
  return gram(a);
}

bool upper_triangular(const DMatrix& t, double tol = 1e-12) {
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < std::min(r, t.cols()); ++c)
      if (t(r, c).abs() > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("quaternion units multiply as i j = k and anticommute") {
  Scalar i(0, 1), j(0, 0, 1), k(0, 0, 0, 1);
  Scalar ij = i * j, ji = j * i;
  CHECK(ij.z == doctest::Approx(1.0));
  CHECK(ji.z == doctest::Approx(-1.0));
  CHECK((i * i).w == doctest::Approx(-1.0));
  Scalar q(1.0, -2.0, 0.5, 3.0);
  Scalar e = q * q.inverse();
  CHECK(e.w == doctest::Approx(1.0));
  CHECK(e.imag_part().abs() < 1e-15);
}

TEST_CASE("beta validation") {
  CHECK(is_valid_beta(8));
  CHECK_FALSE(is_valid_beta(3));
  CHECK_THROWS_AS(algebra_from_beta(3), DomainError);
  CHECK_THROWS_AS(require_matrix_algebra(Algebra::Octonion), UnsupportedError);
}

TEST_CASE("coordinates round trip for every matrix algebra") {
  RngStream rng(11);
  for (int beta : {1, 2, 4}) {
    Algebra alg = algebra_from_beta(beta);
    DMatrix a = random_matrix(alg, 3, 2, rng);
    CHECK(max_abs_diff(a, DMatrix::from_coordinates(alg, 3, 2, a.coordinates())) == 0.0);
    HermitianMatrix s = random_pd(alg, 3, rng);
    auto cs = s.coordinates();
    CHECK(static_cast<int>(cs.size()) == HermitianMatrix::coordinate_count(3, beta));
    CHECK(max_abs_diff(s.matrix(), HermitianMatrix::from_coordinates(alg, 3, cs).matrix()) < 1e-15);
  }
}

TEST_CASE("Hermitian eigendecomposition reconstructs and agrees with the complex embedding") {
  RngStream rng(3);
  for (int beta : {1, 2, 4}) {
    Algebra alg = algebra_from_beta(beta);
    HermitianMatrix s = sample_hermite_ensemble(4, beta, rng);
    EigenSystem es = hermitian_eig(s);
    CHECK(std::is_sorted(es.values.rbegin(), es.values.rend()));
    DMatrix d = diagonal_matrix(alg, es.values);
    CHECK(max_abs_diff(es.vectors * d * adjoint(es.vectors), s.matrix()) < 1e-10);
    CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors, DMatrix::identity(alg, 4)) < 1e-10);

    // Independent route: Eigen on the complex embedding, Kramers pairs halved.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_embedding(s.matrix()));
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.rbegin(), ev.rend());
    const int step = beta == 4 ? 2 : 1;
    for (int i = 0; i < 4; ++i) CHECK(es.values[i] == doctest::Approx(ev[i * step]).epsilon(1e-10));
  }
}

TEST_CASE("factorizations reconstruct with their gauges") {
  RngStream rng(5);
  for (int beta : {1, 2, 4}) {
    CAPTURE(beta);
    Algebra alg = algebra_from_beta(beta);
    DMatrix x = random_matrix(alg, 4, 3, rng);

    QrResult f = qr(x);
    CHECK(max_abs_diff(f.q * f.t, x) < 1e-12);
    CHECK(upper_triangular(f.t));
    for (int i = 0; i < 3; ++i) {
      CHECK(f.t(i, i).w > 0.0);
      CHECK(f.t(i, i).imag_part().abs() < 1e-14);
    }
    CHECK(max_abs_diff(adjoint(f.q) * f.q, DMatrix::identity(alg, 3)) < 1e-12);

    PolarResult p = polar(x);
    CHECK(max_abs_diff(p.p1 * p.r.matrix(), x) < 1e-10);
    CHECK(is_positive_definite(p.r));

    SvdResult sv = svd(x);
    CHECK(std::is_sorted(sv.d.rbegin(), sv.d.rend()));
    CHECK(max_abs_diff(sv.v1 * diagonal_matrix(alg, sv.d) * adjoint(sv.w), x) < 1e-10);

    DMatrix sq = random_matrix(alg, 3, 3, rng);
    for (LuVariant v : {LuVariant::Doolittle, LuVariant::Crout, LuVariant::Ldm}) {
      LuResult l = lu(sq, v);
      CHECK(max_abs_diff(l.lower * l.diag * l.upper, sq) < 1e-10);
      CHECK(upper_triangular(l.upper));
      CHECK(upper_triangular(adjoint(l.lower)));
    }

    HermitianMatrix s = random_pd(alg, 3, rng);
    DMatrix t = cholesky(s);
    CHECK(max_abs_diff(adjoint(t) * t, s.matrix()) < 1e-10);
    LdlResult ld = ldl(s);
    CHECK(max_abs_diff(adjoint(ld.omega) * diagonal_matrix(alg, ld.d) * ld.omega, s.matrix()) < 1e-10);
    HermitianMatrix r = pd_sqrt(s);
    CHECK(max_abs_diff(r.matrix() * r.matrix(), s.matrix()) < 1e-10);
    CHECK(max_abs_diff(pd_inverse(s).matrix() * s.matrix(), DMatrix::identity(alg, 3)) < 1e-10);
    CHECK(max_abs_diff(inverse(sq) * sq, DMatrix::identity(alg, 3)) < 1e-10);
  }
}

TEST_CASE("log determinant matches the eigenvalues and rejects indefinite input") {
  RngStream rng(9);
  HermitianMatrix s = random_pd(Algebra::Quaternion, 3, rng);
  double sum = 0.0;
  for (double l : hermitian_eigenvalues(s)) sum += std::log(l);
  CHECK(log_det_pd(s) == doctest::Approx(sum).epsilon(1e-12));

  DMatrix bad = DMatrix::identity(Algebra::Real, 2);
  bad(1, 1) = Scalar(-1.0);
  CHECK_FALSE(is_positive_definite(HermitianMatrix(bad)));
  CHECK_THROWS_AS(log_det_pd(HermitianMatrix(bad)), DomainError);
}

TEST_CASE("non-Hermitian input is rejected") {
  DMatrix a = DMatrix::identity(Algebra::Complex, 2);
  a(0, 1) = Scalar(0.0, 1.0);
  CHECK_THROWS_AS(HermitianMatrix{a}, DomainError);
}

TEST_CASE("exponential of a skew-Hermitian matrix is unitary") {
  RngStream rng(4);
  for (int beta : {1, 2, 4}) {
    Algebra alg = algebra_from_beta(beta);
    DMatrix a = random_matrix(alg, 3, 3, rng);
    DMatrix k = a - adjoint(a);
    DMatrix u = matrix_exp(k);
    CHECK(max_abs_diff(adjoint(u) * u, DMatrix::identity(alg, 3)) < 1e-12);
  }
}

TEST_CASE("triangular solves") {
  RngStream rng(6);
  DMatrix x = random_matrix(Algebra::Quaternion, 3, 3, rng);
  DMatrix t = qr(x).t;
  DMatrix b = random_matrix(Algebra::Quaternion, 3, 2, rng);
  CHECK(max_abs_diff(t * solve_upper(t, b), b) < 1e-10);
  DMatrix bl = random_matrix(Algebra::Quaternion, 2, 3, rng);
  CHECK(max_abs_diff(right_solve_upper(bl, t) * t, bl) < 1e-10);
}
