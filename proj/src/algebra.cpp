#include "rmx/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "rmx/log_value.hpp"

namespace rmx {

std::string format_log_value(const LogValue& v, int precision) {
  if (!v.finite) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v.log_magnitude);
  return buf;
}

bool is_valid_beta(int beta) { return beta == 1 || beta == 2 || beta == 4 || beta == 8; }

Algebra algebra_from_beta(int beta) {
  if (!is_valid_beta(beta)) throw DomainError("beta", "must be one of 1, 2, 4, 8 (got " + std::to_string(beta) + ")");
  return static_cast<Algebra>(beta);
}

std::string_view algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Real: return "real";
    case Algebra::Complex: return "complex";
    case Algebra::Quaternion: return "quaternion";
    case Algebra::Octonion: return "octonion";
  }
  return "?";
}

void require_matrix_algebra(Algebra a) {
  if (a == Algebra::Octonion)
    throw UnsupportedError("matrix operations are not defined over the octonions (beta = 8)");
}

// ---- Scalar ----

double Scalar::operator[](int k) const {
  switch (k) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

double& Scalar::operator[](int k) {
  switch (k) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

Scalar Scalar::inverse() const {
  double n2 = norm2();
  if (n2 == 0.0) throw DomainError("scalar", "division by zero");
  return conj() / n2;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  w += o.w; x += o.x; y += o.y; z += o.z;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  w -= o.w; x -= o.x; y -= o.y; z -= o.z;
  return *this;
}
Scalar& Scalar::operator*=(double s) {
  w *= s; x *= s; y *= s; z *= s;
  return *this;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator-(const Scalar& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Scalar operator*(double s, Scalar a) { return a *= s; }
Scalar operator*(Scalar a, double s) { return a *= s; }
Scalar operator/(Scalar a, double s) { return a *= (1.0 / s); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// ---- DMatrix ----

DMatrix::DMatrix(Algebra alg, int rows, int cols) : alg_(alg), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Scalar{});
}

DMatrix DMatrix::identity(Algebra alg, int n) {
  DMatrix m(alg, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DMatrix DMatrix::from_coordinates(Algebra alg, int rows, int cols, std::span<const double> coords) {
  const int b = beta_of(alg);
  if (coords.size() != static_cast<size_t>(b) * rows * cols)
    throw DimensionError("expected " + std::to_string(b * rows * cols) + " coordinates, got " +
                         std::to_string(coords.size()));
  DMatrix m(alg, rows, cols);
  size_t p = 0;
  for (auto& s : m.data_)
    for (int k = 0; k < b; ++k) s[k] = coords[p++];
  return m;
}

DMatrix DMatrix::from_real(const Eigen::MatrixXd& e) {
  DMatrix m(Algebra::Real, static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int r = 0; r < m.rows_; ++r)
    for (int c = 0; c < m.cols_; ++c) m(r, c) = e(r, c);
  return m;
}

std::vector<double> DMatrix::coordinates() const {
  const int b = beta();
  std::vector<double> out;
  out.reserve(data_.size() * b);
  for (const auto& s : data_)
    for (int k = 0; k < b; ++k) out.push_back(s[k]);
  return out;
}

DMatrix DMatrix::column(int j) const { return columns(j, 1); }

DMatrix DMatrix::columns(int first, int count) const { return block(0, first, rows_, count); }

DMatrix DMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  DMatrix out(alg_, nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void DMatrix::set_column(int j, const DMatrix& v) {
  if (v.rows() != rows_ || v.cols() != 1) throw DimensionError("set_column shape mismatch");
  for (int r = 0; r < rows_; ++r) (*this)(r, j) = v(r, 0);
}

static void require_same_shape(const DMatrix& a, const DMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.algebra() != b.algebra())
    throw DimensionError("matrix shape or algebra mismatch");
}

DMatrix& DMatrix::operator+=(const DMatrix& o) {
  require_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}
DMatrix& DMatrix::operator-=(const DMatrix& o) {
  require_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}
DMatrix& DMatrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

DMatrix operator+(DMatrix a, const DMatrix& b) { return a += b; }
DMatrix operator-(DMatrix a, const DMatrix& b) { return a -= b; }
DMatrix operator*(double s, DMatrix a) { return a *= s; }

DMatrix operator*(const DMatrix& a, const DMatrix& b) {
  if (a.cols() != b.rows() || a.algebra() != b.algebra())
    throw DimensionError("matrix product shape or algebra mismatch");
  DMatrix out(a.algebra(), a.rows(), b.cols());
  const bool real = a.algebra() == Algebra::Real;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (real) {
        for (int j = 0; j < b.cols(); ++j) out(i, j).w += aik.w * b(k, j).w;
      } else {
        for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

DMatrix adjoint(const DMatrix& a) {
  DMatrix out(a.algebra(), a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

DMatrix right_scale_columns(const DMatrix& a, const std::vector<Scalar>& s) {
  DMatrix out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) * s[c];
  return out;
}

double frobenius_norm(const DMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s += a(r, c).norm2();
  return std::sqrt(s);
}

double max_abs_diff(const DMatrix& a, const DMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, (a(r, c) - b(r, c)).abs());
  return m;
}

Scalar trace(const DMatrix& a) {
  Scalar t;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

DMatrix diagonal_matrix(Algebra alg, std::span<const double> d) {
  DMatrix m(alg, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// ---- complex embedding ----

Eigen::MatrixXcd complex_embedding(const DMatrix& a) {
  require_matrix_algebra(a.algebra());
  using C = std::complex<double>;
  if (a.beta() <= 2) {
    Eigen::MatrixXcd c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
      for (int k = 0; k < a.cols(); ++k) c(r, k) = C(a(r, k).w, a(r, k).x);
    return c;
  }
  Eigen::MatrixXcd c(2 * a.rows(), 2 * a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& q = a(r, k);
      C z1(q.w, q.x), z2(q.y, q.z);
      c(2 * r, 2 * k) = z1;
      c(2 * r, 2 * k + 1) = z2;
      c(2 * r + 1, 2 * k) = -std::conj(z2);
      c(2 * r + 1, 2 * k + 1) = std::conj(z1);
    }
  return c;
}

DMatrix from_complex_embedding(Algebra alg, const Eigen::MatrixXcd& c) {
  require_matrix_algebra(alg);
  if (beta_of(alg) <= 2) {
    DMatrix m(alg, static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    for (int r = 0; r < m.rows(); ++r)
      for (int k = 0; k < m.cols(); ++k)
        m(r, k) = alg == Algebra::Real ? Scalar(c(r, k).real()) : Scalar(c(r, k));
    return m;
  }
  if (c.rows() % 2 || c.cols() % 2) throw DimensionError("quaternion embedding needs even dimensions");
  DMatrix m(alg, static_cast<int>(c.rows() / 2), static_cast<int>(c.cols() / 2));
  for (int r = 0; r < m.rows(); ++r)
    for (int k = 0; k < m.cols(); ++k) {
      auto z1 = c(2 * r, 2 * k), z2 = c(2 * r, 2 * k + 1);
      m(r, k) = Scalar(z1.real(), z1.imag(), z2.real(), z2.imag());
    }
  return m;
}

// ---- Hermitian ----

HermitianMatrix::HermitianMatrix(const DMatrix& m, double tol) {
  require_matrix_algebra(m.algebra());
  if (m.rows() != m.cols()) throw DimensionError("Hermitian matrix must be square");
  const double scale = 1.0 + frobenius_norm(m);
  double worst = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c) worst = std::max(worst, (m(r, c) - m(c, r).conj()).abs());
  if (worst > tol * scale) throw DomainError("S", "matrix is not Hermitian");
  m_ = m;
  for (int r = 0; r < m.rows(); ++r) {
    m_(r, r) = m(r, r).real();
    for (int c = r + 1; c < m.cols(); ++c) {
      Scalar avg = 0.5 * (m(r, c) + m(c, r).conj());
      m_(r, c) = avg;
      m_(c, r) = avg.conj();
    }
  }
}

HermitianMatrix HermitianMatrix::from_coordinates(Algebra alg, int m, std::span<const double> coords) {
  require_matrix_algebra(alg);
  const int b = beta_of(alg);
  if (coords.size() != static_cast<size_t>(coordinate_count(m, b)))
    throw DimensionError("Hermitian coordinate count mismatch");
  DMatrix d(alg, m, m);
  size_t p = 0;
  for (int i = 0; i < m; ++i) d(i, i) = coords[p++];
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Scalar s;
      for (int k = 0; k < b; ++k) s[k] = coords[p++];
      d(i, j) = s;
      d(j, i) = s.conj();
    }
  HermitianMatrix h;
  h.m_ = std::move(d);
  return h;
}

std::vector<double> HermitianMatrix::coordinates() const {
  const int m = size(), b = beta();
  std::vector<double> out;
  out.reserve(coordinate_count(m, b));
  for (int i = 0; i < m; ++i) out.push_back(m_(i, i).w);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < b; ++k) out.push_back(m_(i, j)[k]);
  return out;
}

namespace {

void fix_gauge(DMatrix& v) {
  const int m = v.cols();
  for (int c = 0; c < m; ++c) {
    int lead = -1;
    for (int r = 0; r < v.rows(); ++r)
      if (v(r, c).abs() > 1e-8) {
        lead = r;
        break;
      }
    if (lead < 0) continue;
    Scalar e = v(lead, c);
    Scalar s = e.conj() / e.abs();
    for (int r = 0; r < v.rows(); ++r) v(r, c) = v(r, c) * s;
  }
}

void finish_spectrum(EigenSystem& es, double scale) {
  es.min_gap = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < es.values.size(); ++i)
    es.min_gap = std::min(es.min_gap, es.values[i - 1] - es.values[i]);
  es.degenerate = es.values.size() > 1 && es.min_gap < 1e-8 * std::max(scale, 1e-300);
}

}  // namespace

EigenSystem hermitian_eig(const HermitianMatrix& s) {
  const int m = s.size();
  EigenSystem es;
  const double scale = frobenius_norm(s.matrix());
  if (s.beta() == 1) {
    Eigen::MatrixXd a(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = s(r, c).w;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    es.vectors = DMatrix(Algebra::Real, m, m);
    for (int i = 0; i < m; ++i) {
      int src = m - 1 - i;
      es.values.push_back(solver.eigenvalues()(src));
      for (int r = 0; r < m; ++r) es.vectors(r, i) = solver.eigenvectors()(r, src);
    }
  } else if (s.beta() == 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_embedding(s.matrix()));
    es.vectors = DMatrix(Algebra::Complex, m, m);
    for (int i = 0; i < m; ++i) {
      int src = m - 1 - i;
      es.values.push_back(solver.eigenvalues()(src));
      for (int r = 0; r < m; ++r) es.vectors(r, i) = Scalar(solver.eigenvectors()(r, src));
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_embedding(s.matrix()));
    es.vectors = DMatrix(Algebra::Quaternion, m, m);
    int accepted = 0;
    // Each quaternion eigenvalue appears twice; accept one complex eigenvector
    // per independent quaternion direction.
    for (int src = 2 * m - 1; src >= 0 && accepted < m; --src) {
      auto v = solver.eigenvectors().col(src);
      DMatrix q(Algebra::Quaternion, m, 1);
      for (int r = 0; r < m; ++r) {
        auto z1 = v(2 * r), z2 = -std::conj(v(2 * r + 1));
        q(r, 0) = Scalar(z1.real(), z1.imag(), z2.real(), z2.imag());
      }
      for (int prev = 0; prev < accepted; ++prev) {
        Scalar coef;
        for (int r = 0; r < m; ++r) coef += es.vectors(r, prev).conj() * q(r, 0);
        for (int r = 0; r < m; ++r) q(r, 0) -= es.vectors(r, prev) * coef;
      }
      double nrm = frobenius_norm(q);
      if (nrm < 0.5) continue;
      for (int r = 0; r < m; ++r) es.vectors(r, accepted) = q(r, 0) / nrm;
      es.values.push_back(solver.eigenvalues()(src));
      ++accepted;
    }
    if (accepted != m) throw Error("quaternion eigensolver failed to separate Kramers pairs");
  }
  fix_gauge(es.vectors);
  finish_spectrum(es, scale);
  return es;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& s) {
  const int m = s.size();
  if (m == 1) return {s(0, 0).w};
  if (m == 2) {
    double a = s(0, 0).w, d = s(1, 1).w;
    double mid = 0.5 * (a + d), half = 0.5 * (a - d);
    double rad = std::sqrt(half * half + s(0, 1).norm2());
    return {mid + rad, mid - rad};
  }
  std::vector<double> out;
  if (s.beta() == 1) {
    Eigen::MatrixXd a(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = s(r, c).w;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    for (int i = m - 1; i >= 0; --i) out.push_back(solver.eigenvalues()(i));
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_embedding(s.matrix()), Eigen::EigenvaluesOnly);
  const int step = s.beta() == 4 ? 2 : 1;
  const int total = static_cast<int>(solver.eigenvalues().size());
  for (int i = total - 1; i >= 0; i -= step) {
    if (step == 2) out.push_back(0.5 * (solver.eigenvalues()(i) + solver.eigenvalues()(i - 1)));
    else out.push_back(solver.eigenvalues()(i));
  }
  return out;
}

double log_det_pd(const HermitianMatrix& s, const char* field) {
  const int m = s.size();
  if (m == 1) {
    if (!(s(0, 0).w > 0)) throw DomainError(field, "matrix is not positive definite");
    return std::log(s(0, 0).w);
  }
  if (m == 2) {
    double a = s(0, 0).w, d = s(1, 1).w, det = a * d - s(0, 1).norm2();
    if (!(a > 0) || !(det > 0)) throw DomainError(field, "matrix is not positive definite");
    return std::log(det);
  }
  if (s.beta() == 1) {
    Eigen::MatrixXd a(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = s(r, c).w;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) throw DomainError(field, "matrix is not positive definite");
    double ld = 0.0;
    for (int i = 0; i < m; ++i) ld += 2.0 * std::log(llt.matrixL()(i, i));
    return ld;
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(complex_embedding(s.matrix()));
  if (llt.info() != Eigen::Success) throw DomainError(field, "matrix is not positive definite");
  double ld = 0.0;
  for (int i = 0; i < llt.matrixLLT().rows(); ++i) ld += 2.0 * std::log(llt.matrixLLT()(i, i).real());
  return s.beta() == 4 ? 0.5 * ld : ld;
}

bool is_positive_definite(const HermitianMatrix& s) {
  try {
    log_det_pd(s);
    return hermitian_eigenvalues(s).back() > 0.0;
  } catch (const DomainError&) {
    return false;
  }
}

static void require_pd_values(const EigenSystem& es) {
  if (!(es.values.back() > 0.0)) throw DomainError("S", "matrix is not positive definite");
}

HermitianMatrix pd_sqrt(const HermitianMatrix& s) {
  require_pd_values(hermitian_eig(s));
  return hermitian_function(s, [](double x) { return std::sqrt(x); });
}

HermitianMatrix pd_inv_sqrt(const HermitianMatrix& s) {
  require_pd_values(hermitian_eig(s));
  return hermitian_function(s, [](double x) { return 1.0 / std::sqrt(x); });
}

HermitianMatrix pd_inverse(const HermitianMatrix& s) {
  require_pd_values(hermitian_eig(s));
  return hermitian_function(s, [](double x) { return 1.0 / x; });
}

HermitianMatrix gram(const DMatrix& a) { return HermitianMatrix(adjoint(a) * a, 1e-8); }
HermitianMatrix outer_gram(const DMatrix& a) { return HermitianMatrix(a * adjoint(a), 1e-8); }

}  // namespace rmx
