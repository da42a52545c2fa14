#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "rmx/errors.hpp"

namespace rmx {

// The value is the real dimension beta of the algebra.
enum class Algebra : int { Real = 1, Complex = 2, Quaternion = 4, Octonion = 8 };

constexpr int beta_of(Algebra a) { return static_cast<int>(a); }
Algebra algebra_from_beta(int beta);
std::string_view algebra_name(Algebra a);
bool is_valid_beta(int beta);

// Matrix routines are defined for beta in {1, 2, 4}; octonion entries only
// appear in scalar formulas.
void require_matrix_algebra(Algebra a);

// Quaternion a + b i + c j + d k. Reals and complexes use a prefix of it.
struct Scalar {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Scalar() = default;
  constexpr Scalar(double re) : w(re) {}
  constexpr Scalar(double a, double b, double c = 0.0, double d = 0.0) : w(a), x(b), y(c), z(d) {}
  Scalar(std::complex<double> c) : w(c.real()), x(c.imag()) {}

  double operator[](int k) const;
  double& operator[](int k);
  double real() const { return w; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  Scalar conj() const { return {w, -x, -y, -z}; }
  Scalar inverse() const;
  Scalar imag_part() const { return {0.0, x, y, z}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(double s);
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator*(double s, Scalar a);
Scalar operator*(Scalar a, double s);
Scalar operator/(Scalar a, double s);
inline Scalar conj(const Scalar& a) { return a.conj(); }

// Dense n x m matrix over one algebra, row major.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(Algebra alg, int rows, int cols);

  static DMatrix identity(Algebra alg, int n);
  static DMatrix zeros(Algebra alg, int rows, int cols) { return DMatrix(alg, rows, cols); }
  // Coordinates are row major, each entry expanded to beta components.
  static DMatrix from_coordinates(Algebra alg, int rows, int cols, std::span<const double> coords);
  static DMatrix from_real(const Eigen::MatrixXd& m);

  Algebra algebra() const { return alg_; }
  int beta() const { return beta_of(alg_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<double> coordinates() const;
  int real_dimension() const { return beta() * rows_ * cols_; }

  DMatrix column(int j) const;
  DMatrix columns(int first, int count) const;
  DMatrix block(int r0, int c0, int nr, int nc) const;
  void set_column(int j, const DMatrix& v);

  DMatrix& operator+=(const DMatrix& o);
  DMatrix& operator-=(const DMatrix& o);
  DMatrix& operator*=(double s);

 private:
  Algebra alg_ = Algebra::Real;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

DMatrix operator+(DMatrix a, const DMatrix& b);
DMatrix operator-(DMatrix a, const DMatrix& b);
DMatrix operator*(const DMatrix& a, const DMatrix& b);
DMatrix operator*(double s, DMatrix a);
DMatrix adjoint(const DMatrix& a);
// Scalar on the right of every entry: (A s)_ij = A_ij s.
DMatrix right_scale_columns(const DMatrix& a, const std::vector<Scalar>& s);
double frobenius_norm(const DMatrix& a);
double max_abs_diff(const DMatrix& a, const DMatrix& b);
Scalar trace(const DMatrix& a);
DMatrix diagonal_matrix(Algebra alg, std::span<const double> d);

// Complex representation: beta <= 2 maps entrywise, beta == 4 maps each
// quaternion z1 + z2 j to [[z1, z2], [-conj(z2), conj(z1)]].
Eigen::MatrixXcd complex_embedding(const DMatrix& a);
DMatrix from_complex_embedding(Algebra alg, const Eigen::MatrixXcd& c);

// Hermitian matrix; construction checks the symmetry and repairs round-off.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const DMatrix& m, double tol = 1e-10);

  // Coordinates: m real diagonal entries, then the strict upper triangle row
  // by row, each entry with beta components.
  static HermitianMatrix from_coordinates(Algebra alg, int m, std::span<const double> coords);
  std::vector<double> coordinates() const;
  static int coordinate_count(int m, int beta) { return m + beta * m * (m - 1) / 2; }

  const DMatrix& matrix() const { return m_; }
  Algebra algebra() const { return m_.algebra(); }
  int beta() const { return m_.beta(); }
  int size() const { return m_.rows(); }
  const Scalar& operator()(int r, int c) const { return m_(r, c); }

 private:
  DMatrix m_;
};

struct EigenSystem {
  std::vector<double> values;  // descending
  DMatrix vectors;             // columns, first significant entry real positive
  double min_gap = 0.0;
  bool degenerate = false;
};

EigenSystem hermitian_eig(const HermitianMatrix& s);
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& s);

// W f(Lambda) W*.
template <class F>
HermitianMatrix hermitian_function(const HermitianMatrix& s, F f);

// log of the determinant of a positive definite Hermitian matrix. Throws
// DomainError when the matrix is not positive definite.
double log_det_pd(const HermitianMatrix& s, const char* field = "S");
bool is_positive_definite(const HermitianMatrix& s);
HermitianMatrix pd_sqrt(const HermitianMatrix& s);
HermitianMatrix pd_inv_sqrt(const HermitianMatrix& s);
HermitianMatrix pd_inverse(const HermitianMatrix& s);
// A* A and A A* as Hermitian matrices.
HermitianMatrix gram(const DMatrix& a);
HermitianMatrix outer_gram(const DMatrix& a);

// ---- factorizations ----

struct QrResult {
  DMatrix q;  // n x m, orthonormal columns
  DMatrix t;  // m x m upper triangular, positive real diagonal
};
QrResult qr(const DMatrix& x);

// S = T* T with T upper triangular and positive real diagonal.
DMatrix cholesky(const HermitianMatrix& s);

struct PolarResult {
  DMatrix p1;         // n x m semi-unitary
  HermitianMatrix r;  // m x m positive definite
};
PolarResult polar(const DMatrix& x);

struct SvdResult {
  DMatrix v1;              // n x m
  std::vector<double> d;   // descending, positive
  DMatrix w;               // m x m unitary
};
SvdResult svd(const DMatrix& x);

// X = L U for square X without pivoting.
//   Doolittle: lower unit diagonal (Delta), upper Upsilon.
//   Crout:     lower Delta, upper unit diagonal (Upsilon).
//   LDM:       lower unit Delta, real-or-algebra diagonal Pi, upper unit Xi.
enum class LuVariant { Doolittle, Crout, Ldm };
struct LuResult {
  DMatrix lower, diag, upper;  // diag is the identity except for LDM
};
LuResult lu(const DMatrix& x, LuVariant variant);

// S = Omega* D Omega, Omega upper unit triangular, D positive diagonal.
struct LdlResult {
  DMatrix omega;
  std::vector<double> d;
};
LdlResult ldl(const HermitianMatrix& s);

// Exponential of a square matrix by scaling and squaring.
DMatrix matrix_exp(const DMatrix& a);

// Solves T x = b for upper triangular T (left multiplication) column by column.
DMatrix solve_upper(const DMatrix& t, const DMatrix& b);
// Right multiplication by the inverse: b T^{-1}.
DMatrix right_solve_upper(const DMatrix& b, const DMatrix& t);
DMatrix inverse(const DMatrix& a);

// ---- template implementation ----

template <class F>
HermitianMatrix hermitian_function(const HermitianMatrix& s, F f) {
  EigenSystem es = hermitian_eig(s);
  const int m = s.size();
  DMatrix scaled = es.vectors;
  for (int i = 0; i < m; ++i) {
    double fi = f(es.values[i]);
    for (int r = 0; r < m; ++r) scaled(r, i) *= fi;
  }
  return HermitianMatrix(scaled * adjoint(es.vectors), 1e-6 * (1.0 + frobenius_norm(scaled)));
}

}  // namespace rmx
