#include "rmx/jacobians.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rmx/special.hpp"

namespace rmx {

namespace {

const double kLogPi = std::log(std::numbers::pi);

void require_positive(std::span<const double> v, const char* field) {
  for (double x : v)
    if (!(x > 0.0)) throw DomainError(field, "entries must be positive");
}

void require_nonzero(std::span<const double> v, const char* field) {
  for (double x : v)
    if (!(x != 0.0) || !std::isfinite(x)) throw DomainError(field, "entries must be nonzero");
}

// Strictly descending; ties within 1e-8 of the scale are degenerate.
void require_descending(std::span<const double> v, const char* field) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  for (size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] - v[i] > 1e-8 * scale))
      throw DegenerateError(std::string(field) + ": values must be strictly descending and separated");
}

void require_beta(int beta) { algebra_from_beta(beta); }

// log of prod_i |eigenvalue_i| of A* A.
double log_det_gram(const DMatrix& a, const char* field) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(field) + " must be square");
  try {
    return log_det_pd(gram(a), field);
  } catch (const DomainError&) {
    throw DomainError(field, "matrix is singular");
  }
}

}  // namespace

double logjac_linear(const DMatrix& a, const DMatrix& b) {
  const int n = a.rows(), m = b.rows();
  const double beta = a.beta();
  return 0.5 * beta * m * log_det_gram(a, "A") + 0.5 * beta * n * log_det_gram(b, "B");
}

double logjac_congruence(const DMatrix& a) {
  const int m = a.rows();
  return (0.5 * a.beta() * (m - 1) + 1.0) * log_det_gram(a, "A");
}

double logjac_diag_triangular(std::span<const double> b_abs, int beta) {
  require_beta(beta);
  require_nonzero(b_abs, "b");
  const int m = static_cast<int>(b_abs.size());
  double s = 0.0;
  for (int i = 1; i <= m; ++i) s += beta * (m - i) * std::log(std::abs(b_abs[i - 1]));
  return s;
}

double logjac_lu(std::span<const double> diag_abs, int beta, LuVariant variant) {
  double s = logjac_diag_triangular(diag_abs, beta);
  return variant == LuVariant::Ldm ? 2.0 * s : s;
}

double logjac_qr(std::span<const double> t, int n, int beta) {
  require_beta(beta);
  require_positive(t, "T");
  const int m = static_cast<int>(t.size());
  if (n < m) throw DomainError("n", "must be at least m");
  double s = 0.0;
  for (int i = 1; i <= m; ++i) s += (beta * (n - i + 1) - 1.0) * std::log(t[i - 1]);
  return s;
}

double logjac_qdr(std::span<const double> nd, int n, int beta) {
  require_beta(beta);
  require_positive(nd, "N");
  require_descending(nd, "N");
  const int m = static_cast<int>(nd.size());
  if (n < m) throw DomainError("n", "must be at least m");
  double s = -m * std::numbers::ln2;
  for (int i = 1; i <= m; ++i) s += (beta * (n + m - 2 * i + 1) - 1.0) * std::log(nd[i - 1]);
  return s;
}

double logjac_polar(std::span<const double> d, int n, int beta) {
  require_beta(beta);
  require_positive(d, "R");
  require_descending(d, "R");
  const int m = static_cast<int>(d.size());
  if (n < m) throw DomainError("n", "must be at least m");
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    s += (beta * (n - m + 1) - 1.0) * std::log(d[i]);
    for (int j = i + 1; j < m; ++j) s += beta * std::log(d[i] + d[j]);
  }
  return s;
}

double logjac_polar(const HermitianMatrix& r, int n) {
  EigenSystem es = hermitian_eig(r);
  if (es.degenerate) throw DegenerateError("R: degenerate spectrum");
  return logjac_polar(es.values, n, r.beta());
}

double logjac_svd(std::span<const double> d, int n, int beta) {
  require_beta(beta);
  require_positive(d, "D");
  require_descending(d, "D");
  const int m = static_cast<int>(d.size());
  if (n < m) throw DomainError("n", "must be at least m");
  double s = -m * std::numbers::ln2 + tau(beta, m) * kLogPi;
  for (int i = 0; i < m; ++i) {
    s += (beta * (n - m + 1) - 1.0) * std::log(d[i]);
    for (int j = i + 1; j < m; ++j) s += beta * std::log(d[i] * d[i] - d[j] * d[j]);
  }
  return s;
}

double logjac_cholesky(std::span<const double> t, int beta) {
  require_beta(beta);
  require_positive(t, "T");
  const int m = static_cast<int>(t.size());
  double s = m * std::numbers::ln2;
  for (int i = 1; i <= m; ++i) s += (beta * (m - i) + 1.0) * std::log(t[i - 1]);
  return s;
}

double logjac_ldl(std::span<const double> o, int beta) {
  require_beta(beta);
  require_positive(o, "O");
  const int m = static_cast<int>(o.size());
  double s = 0.0;
  for (int i = 1; i <= m; ++i) s += beta * (m - i) * std::log(o[i - 1]);
  return s;
}

double logjac_sqrt(std::span<const double> d, int beta) {
  require_beta(beta);
  require_positive(d, "R");
  const int m = static_cast<int>(d.size());
  double s = m * std::numbers::ln2;
  for (int i = 0; i < m; ++i) {
    s += std::log(d[i]);
    for (int j = i + 1; j < m; ++j) s += beta * std::log(d[i] + d[j]);
  }
  return s;
}

double logjac_sqrt(const HermitianMatrix& r) { return logjac_sqrt(hermitian_eigenvalues(r), r.beta()); }

double logjac_spectral(std::span<const double> lambda, int beta) {
  require_beta(beta);
  require_descending(lambda, "lambda");
  const int m = static_cast<int>(lambda.size());
  double s = -m * std::numbers::ln2 + tau(beta, m) * kLogPi;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) s += beta * std::log(lambda[i] - lambda[j]);
  return s;
}

double logjac_wishart_map(double log_det_s, int m, int n, int beta) {
  require_beta(beta);
  if (m < 1) throw DomainError("m", "must be at least 1");
  if (!std::isfinite(log_det_s)) throw DomainError("S", "matrix is not positive definite");
  return -m * std::numbers::ln2 + (0.5 * beta * (n - m + 1) - 1.0) * log_det_s;
}

double logjac_wishart_map(const HermitianMatrix& s, int n) {
  return logjac_wishart_map(log_det_pd(s), s.size(), n, s.beta());
}

double fd_jacobian_oracle(const FactorizationChart& chart, std::span<const double> point) {
  const int dim = chart.input_dim();
  if (static_cast<int>(point.size()) != dim) throw DimensionError("point has wrong coordinate count");
  if (chart.output_dim != dim)
    throw DimensionError(chart.name + ": chart is not square (" + std::to_string(dim) + " -> " +
                         std::to_string(chart.output_dim) + ")");
  Eigen::MatrixXd jac(dim, dim);
  std::vector<double> x(point.begin(), point.end());
  for (int k = 0; k < dim; ++k) {
    const double h = 1e-5 * (1.0 + std::abs(point[k]));
    x[k] = point[k] + h;
    std::vector<double> fp = chart.reconstruct(x);
    x[k] = point[k] - h;
    std::vector<double> fm = chart.reconstruct(x);
    x[k] = point[k];
    if (static_cast<int>(fp.size()) != dim || static_cast<int>(fm.size()) != dim)
      throw DimensionError(chart.name + ": reconstruction has wrong coordinate count");
    for (int r = 0; r < dim; ++r) jac(r, k) = (fp[r] - fm[r]) / (2.0 * h);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
  lu.setThreshold(1e-10);
  if (lu.rank() < dim) throw DegenerateError(chart.name + ": finite-difference Jacobian is singular");
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += std::log(std::abs(lu.matrixLU()(i, i)));
  return s;
}

}  // namespace rmx
