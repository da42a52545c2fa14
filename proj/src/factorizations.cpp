#include <algorithm>
#include <cmath>

#include "rmx/algebra.hpp"

namespace rmx {

namespace {

Scalar inner(const DMatrix& a, int ca, const DMatrix& b, int cb) {
  Scalar s;
  for (int r = 0; r < a.rows(); ++r) s += a(r, ca).conj() * b(r, cb);
  return s;
}

double column_norm(const DMatrix& a, int c) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r) s += a(r, c).norm2();
  return std::sqrt(s);
}

void require_square(const DMatrix& x, const char* what) {
  if (x.rows() != x.cols()) throw DimensionError(std::string(what) + " requires a square matrix");
}

double pivot_floor(const DMatrix& x) { return 1e-14 * (1.0 + frobenius_norm(x)); }

}  // namespace

QrResult qr(const DMatrix& x) {
  require_matrix_algebra(x.algebra());
  const int n = x.rows(), m = x.cols();
  if (m > n) throw DimensionError("QR requires rows >= cols");
  QrResult res{x, DMatrix(x.algebra(), m, m)};
  DMatrix& q = res.q;
  const double floor = pivot_floor(x);
  for (int j = 0; j < m; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Scalar c = inner(q, i, q, j);
        for (int r = 0; r < n; ++r) q(r, j) -= q(r, i) * c;
        res.t(i, j) += c;
      }
    }
    double nrm = column_norm(q, j);
    if (nrm <= floor) throw DomainError("X", "matrix does not have full column rank");
    for (int r = 0; r < n; ++r) q(r, j) = q(r, j) / nrm;
    res.t(j, j) = nrm;
  }
  return res;
}

DMatrix cholesky(const HermitianMatrix& s) {
  const int m = s.size();
  DMatrix t(s.algebra(), m, m);
  for (int i = 0; i < m; ++i) {
    double d = s(i, i).w;
    for (int k = 0; k < i; ++k) d -= t(k, i).norm2();
    if (!(d > 0.0)) throw DomainError("S", "matrix is not positive definite");
    double tii = std::sqrt(d);
    t(i, i) = tii;
    for (int j = i + 1; j < m; ++j) {
      Scalar v = s(i, j);
      for (int k = 0; k < i; ++k) v -= t(k, i).conj() * t(k, j);
      t(i, j) = v / tii;
    }
  }
  return t;
}

PolarResult polar(const DMatrix& x) {
  require_matrix_algebra(x.algebra());
  if (x.cols() > x.rows()) throw DimensionError("polar decomposition requires rows >= cols");
  HermitianMatrix g = gram(x);
  if (!is_positive_definite(g)) throw DomainError("X", "matrix does not have full column rank");
  HermitianMatrix r = pd_sqrt(g);
  return {x * pd_inverse(r).matrix(), r};
}

SvdResult svd(const DMatrix& x) {
  require_matrix_algebra(x.algebra());
  if (x.cols() > x.rows()) throw DimensionError("SVD requires rows >= cols");
  EigenSystem es = hermitian_eig(gram(x));
  if (!(es.values.back() > 0.0)) throw DomainError("X", "matrix does not have full column rank");
  SvdResult res;
  res.w = es.vectors;
  for (double l : es.values) res.d.push_back(std::sqrt(l));
  DMatrix v = x * es.vectors;
  for (int c = 0; c < v.cols(); ++c)
    for (int r = 0; r < v.rows(); ++r) v(r, c) = v(r, c) / res.d[c];
  res.v1 = std::move(v);
  return res;
}

LuResult lu(const DMatrix& x, LuVariant variant) {
  require_matrix_algebra(x.algebra());
  require_square(x, "LU");
  const int m = x.rows();
  const Algebra alg = x.algebra();
  const double floor = pivot_floor(x);
  DMatrix lower(alg, m, m), upper(alg, m, m);
  if (variant == LuVariant::Crout) {
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        Scalar v = x(j, i);
        for (int k = 0; k < i; ++k) v -= lower(j, k) * upper(k, i);
        lower(j, i) = v;
      }
      if (lower(i, i).abs() <= floor) throw DomainError("X", "zero pivot in LU factorization");
      Scalar inv = lower(i, i).inverse();
      upper(i, i) = 1.0;
      for (int j = i + 1; j < m; ++j) {
        Scalar v = x(i, j);
        for (int k = 0; k < i; ++k) v -= lower(i, k) * upper(k, j);
        upper(i, j) = inv * v;
      }
    }
    return {lower, DMatrix::identity(alg, m), upper};
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Scalar v = x(i, j);
      for (int k = 0; k < i; ++k) v -= lower(i, k) * upper(k, j);
      upper(i, j) = v;
    }
    if (upper(i, i).abs() <= floor) throw DomainError("X", "zero pivot in LU factorization");
    Scalar inv = upper(i, i).inverse();
    lower(i, i) = 1.0;
    for (int j = i + 1; j < m; ++j) {
      Scalar v = x(j, i);
      for (int k = 0; k < i; ++k) v -= lower(j, k) * upper(k, i);
      lower(j, i) = v * inv;
    }
  }
  if (variant == LuVariant::Doolittle) return {lower, DMatrix::identity(alg, m), upper};
  DMatrix pi(alg, m, m), xi(alg, m, m);
  for (int i = 0; i < m; ++i) {
    pi(i, i) = upper(i, i);
    Scalar inv = upper(i, i).inverse();
    for (int j = i; j < m; ++j) xi(i, j) = inv * upper(i, j);
    xi(i, i) = 1.0;
  }
  return {lower, pi, xi};
}

LdlResult ldl(const HermitianMatrix& s) {
  DMatrix t = cholesky(s);
  LdlResult res{t, {}};
  for (int i = 0; i < t.rows(); ++i) {
    double tii = t(i, i).w;
    res.d.push_back(tii * tii);
    for (int j = i; j < t.cols(); ++j) res.omega(i, j) = t(i, j) / tii;
    res.omega(i, i) = 1.0;
  }
  return res;
}

DMatrix matrix_exp(const DMatrix& a) {
  require_matrix_algebra(a.algebra());
  require_square(a, "matrix exponential");
  const int m = a.rows();
  double nrm = frobenius_norm(a);
  int squarings = nrm > 0.5 ? static_cast<int>(std::ceil(std::log2(nrm / 0.5))) : 0;
  DMatrix scaled = std::ldexp(1.0, -squarings) * a;
  DMatrix result = DMatrix::identity(a.algebra(), m);
  DMatrix term = result;
  for (int k = 1; k <= 18; ++k) {
    term = (1.0 / k) * (term * scaled);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

DMatrix solve_upper(const DMatrix& t, const DMatrix& b) {
  require_square(t, "triangular solve");
  const int m = t.rows();
  DMatrix x(b.algebra(), m, b.cols());
  for (int c = 0; c < b.cols(); ++c)
    for (int i = m - 1; i >= 0; --i) {
      Scalar v = b(i, c);
      for (int k = i + 1; k < m; ++k) v -= t(i, k) * x(k, c);
      x(i, c) = t(i, i).inverse() * v;
    }
  return x;
}

DMatrix right_solve_upper(const DMatrix& b, const DMatrix& t) {
  require_square(t, "triangular solve");
  const int m = t.rows();
  DMatrix y(b.algebra(), b.rows(), m);
  for (int r = 0; r < b.rows(); ++r)
    for (int j = 0; j < m; ++j) {
      Scalar v = b(r, j);
      for (int k = 0; k < j; ++k) v -= y(r, k) * t(k, j);
      y(r, j) = v * t(j, j).inverse();
    }
  return y;
}

DMatrix inverse(const DMatrix& a) {
  require_matrix_algebra(a.algebra());
  require_square(a, "inverse");
  Eigen::MatrixXcd c = complex_embedding(a);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(c);
  if (!lu.isInvertible()) throw DomainError("X", "matrix is singular");
  return from_complex_embedding(a.algebra(), lu.inverse());
}

}  // namespace rmx
