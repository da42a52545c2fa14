#include "rmx/samplers.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "rmx/errors.hpp"

namespace rmx {

namespace {

void require_dense_beta(int beta) {
  require_matrix_algebra(algebra_from_beta(beta));
}

int require_integer(double v, const char* field, int at_least) {
  if (v != std::floor(v) || v < at_least)
    throw DomainError(field, "sampling requires an integer >= " + std::to_string(at_least));
  return static_cast<int>(v);
}

// Point uniformly distributed on the unit sphere of R^dim, scaled by r.
std::vector<double> radial_point(int dim, double r, RngStream& rng) {
  std::vector<double> g(dim);
  double n2 = 0.0;
  while (!(n2 > 0.0)) {
    n2 = 0.0;
    for (auto& x : g) {
      x = rng.normal();
      n2 += x * x;
    }
  }
  const double scale = r / std::sqrt(n2);
  for (auto& x : g) x *= scale;
  return g;
}

// Squared radius of a vector-spherical law on R^dim.
double radial_r2(const EnsembleSpec& spec, int dim, RngStream& rng) {
  const double half = 0.5 * dim;
  switch (spec.family) {
    case Family::Hermite:
    case Family::Laguerre: return rng.gamma(half, 2.0 / spec.beta);
    case Family::TI:
    case Family::TLaguerreI: return rng.gamma(half) / rng.gamma(0.5 * spec.beta * spec.nu);
    case Family::GegenbauerI:
    case Family::GegenbauerLaguerreI: {
      double a = rng.gamma(half), b = rng.gamma(spec.beta * spec.q + 1.0);
      return a / (a + b);
    }
    default: throw UnsupportedError(std::string(family_name(spec.family)) + " has no radial sampler");
  }
}

std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double chi(double dof, RngStream& rng) { return std::sqrt(rng.gamma(0.5 * dof, 2.0)); }

Eigen::MatrixXcd haar_complex(int n, RngStream& rng) {
  return complex_embedding(sample_haar(n, 2, rng));
}

}  // namespace

DMatrix sample_gaussian(Algebra alg, int rows, int cols, double component_sd, RngStream& rng) {
  require_matrix_algebra(alg);
  DMatrix a(alg, rows, cols);
  const int b = beta_of(alg);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (int k = 0; k < b; ++k) a(r, c)[k] = component_sd * rng.normal();
  return a;
}

DMatrix sample_gaussian_matrix(int m, int n, int beta, RngStream& rng) {
  require_dense_beta(beta);
  if (m < 1 || n < 1) throw DimensionError("matrix dimensions must be positive");
  return sample_gaussian(algebra_from_beta(beta), n, m, 1.0 / std::sqrt(static_cast<double>(beta)), rng);
}

DMatrix sample_haar(int n, int beta, RngStream& rng) {
  require_dense_beta(beta);
  const Algebra alg = algebra_from_beta(beta);
  QrResult f = qr(sample_gaussian(alg, n, n, 1.0, rng));
  // Multiply by the phases of diag(T); our QR already makes them 1, the
  // correction keeps the construction valid for any QR convention.
  std::vector<Scalar> phase(n);
  for (int i = 0; i < n; ++i) phase[i] = f.t(i, i) / f.t(i, i).abs();
  return right_scale_columns(f.q, phase);
}

HermitianMatrix sample_hermite_ensemble(int m, int beta, RngStream& rng) {
  require_dense_beta(beta);
  const Algebra alg = algebra_from_beta(beta);
  DMatrix a = sample_gaussian(alg, m, m, 1.0 / std::sqrt(static_cast<double>(beta)), rng);
  std::vector<double> coords;
  coords.reserve(HermitianMatrix::coordinate_count(m, beta));
  for (int i = 0; i < m; ++i) coords.push_back(a(i, i).w);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Scalar h = 0.5 * (a(i, j) + a(j, i).conj());
      for (int k = 0; k < beta; ++k) coords.push_back(h[k]);
    }
  return HermitianMatrix::from_coordinates(alg, m, coords);
}

HermitianMatrix sample_vs_ensemble(const EnsembleSpec& spec, RngStream& rng) {
  spec.validate();
  require_dense_beta(spec.beta);
  if (!is_vector_spherical(spec.family))
    throw UnsupportedError(std::string(family_name(spec.family)) + " has no Hermitian ensemble sampler");
  const int m = spec.m, beta = spec.beta;
  if (spec.family == Family::Hermite) return sample_hermite_ensemble(m, beta, rng);
  const int dim = HermitianMatrix::coordinate_count(m, beta);
  std::vector<double> y = radial_point(dim, std::sqrt(radial_r2(spec, dim, rng)), rng);
  for (size_t k = m; k < y.size(); ++k) y[k] *= std::numbers::sqrt2 / 2.0;
  return HermitianMatrix::from_coordinates(algebra_from_beta(beta), m, y);
}

DMatrix sample_radial_family(const EnsembleSpec& spec, int m, int n, RngStream& rng) {
  require_dense_beta(spec.beta);
  if (!is_vector_spherical(spec.family))
    throw UnsupportedError(std::string(family_name(spec.family)) + " is not a vector-spherical family");
  if (m < 1 || n < 1) throw DimensionError("matrix dimensions must be positive");
  EnsembleSpec s = spec;
  s.m = m;
  s.n = n;
  s.shape = Shape::Rectangular;
  s.validate();
  if (s.family == Family::Hermite) return sample_gaussian_matrix(m, n, s.beta, rng);
  const int dim = s.beta * m * n;
  std::vector<double> x = radial_point(dim, std::sqrt(radial_r2(s, dim, rng)), rng);
  return DMatrix::from_coordinates(algebra_from_beta(s.beta), n, m, x);
}

MatrixSample sample_quotient_family(const EnsembleSpec& spec, int m, int n1, int n2, RngStream& rng) {
  require_dense_beta(spec.beta);
  if (m < 1) throw DomainError("m", "must be at least 1");
  if (n1 < m) throw DomainError("n1", "must be at least m");
  if (n2 < m) throw DomainError("n2", "must be at least m (singular denominator)");
  DMatrix a1 = sample_gaussian_matrix(m, n1, spec.beta, rng);
  DMatrix a2 = sample_gaussian_matrix(m, n2, spec.beta, rng);
  HermitianMatrix w1 = gram(a1), w2 = gram(a2);
  switch (spec.family) {
    case Family::TII: return a1 * pd_inv_sqrt(w2).matrix();
    case Family::GegenbauerII: return a1 * pd_inv_sqrt(HermitianMatrix(w1.matrix() + w2.matrix())).matrix();
    case Family::GegenbauerLaguerreII: {
      DMatrix r = pd_inv_sqrt(HermitianMatrix(w1.matrix() + w2.matrix())).matrix();
      return HermitianMatrix(r * w1.matrix() * r, 1e-8);
    }
    case Family::TLaguerreII: {
      DMatrix r = pd_inv_sqrt(w2).matrix();
      return HermitianMatrix(r * w1.matrix() * r, 1e-8);
    }
    default:
      throw UnsupportedError(std::string(family_name(spec.family)) + " has no quotient construction");
  }
}

HermitianMatrix sample_laguerre(const EnsembleSpec& spec, int m, int n, RngStream& rng) {
  EnsembleSpec s = spec;
  s.m = m;
  s.n = n;
  s.validate();
  require_dense_beta(s.beta);
  if (n < m) throw DomainError("n", "sampling requires n >= m");
  switch (s.family) {
    case Family::Laguerre:
    case Family::TLaguerreI:
    case Family::GegenbauerLaguerreI: {
      EnsembleSpec core = s;
      core.family = s.family == Family::Laguerre ? Family::Hermite
                    : s.family == Family::TLaguerreI ? Family::TI
                                                     : Family::GegenbauerI;
      return gram(sample_radial_family(core, m, n, rng));
    }
    case Family::TLaguerreII:
    case Family::GegenbauerLaguerreII: {
      int nu = require_integer(s.nu, "nu", m);
      return std::get<HermitianMatrix>(sample_quotient_family(s, m, n, nu, rng));
    }
    default: throw UnsupportedError(std::string(family_name(s.family)) + " is not a Laguerre family");
  }
}

std::vector<double> sample_fourier(int m, int beta, RngStream& rng) {
  require_dense_beta(beta);
  if (m < 1) throw DomainError("m", "must be at least 1");
  std::vector<double> angles;
  if (beta == 2 || beta == 1) {
    Eigen::MatrixXcd u = haar_complex(m, rng);
    Eigen::MatrixXcd v = beta == 2 ? u : Eigen::MatrixXcd(u.transpose() * u);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v, false);
    for (int i = 0; i < m; ++i) angles.push_back(std::arg(es.eigenvalues()(i)));
    return descending(angles);
  }
  // Self-dual U^D U with U^D = J U^T J^T; eigenvalues come in equal pairs.
  const int n = 2 * m;
  Eigen::MatrixXcd u = haar_complex(n, rng);
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    j(2 * i, 2 * i + 1) = 1.0;
    j(2 * i + 1, 2 * i) = -1.0;
  }
  Eigen::MatrixXcd v = j * u.transpose() * j.transpose() * u;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v, false);
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    int best = -1;
    for (int k = 0; k < n; ++k)
      if (!used[k] && (best < 0 || std::abs(ev[k] - ev[i]) < std::abs(ev[best] - ev[i]))) best = k;
    used[best] = true;
    angles.push_back(std::arg(ev[i] + ev[best]));
  }
  return descending(angles);
}

std::vector<double> sample_tridiagonal_beta(TridiagonalFamily family, int m, double beta, double n, RngStream& rng) {
  if (!(beta > 0)) throw DomainError("beta", "must be positive");
  if (m < 1) throw DomainError("m", "must be at least 1");
  Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
  double scale;
  if (family == TridiagonalFamily::Hermite) {
    for (int i = 0; i < m; ++i) diag(i) = rng.normal();
    for (int i = 0; i + 1 < m; ++i) sub(i) = chi(beta * (m - 1 - i), rng) / std::numbers::sqrt2;
    scale = 1.0 / std::sqrt(beta);
  } else {
    if (!(n > m - 1)) throw DomainError("n", "must exceed m - 1");
    // Bidiagonal B: diagonal chi_{beta n - beta i}, subdiagonal chi_{beta (m-1-i)};
    // L = B B^T.
    Eigen::VectorXd b(m), c(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i) b(i) = chi(beta * (n - i), rng);
    for (int i = 0; i + 1 < m; ++i) c(i) = chi(beta * (m - 1 - i), rng);
    for (int i = 0; i < m; ++i) diag(i) = b(i) * b(i) + (i > 0 ? c(i - 1) * c(i - 1) : 0.0);
    for (int i = 0; i + 1 < m; ++i) sub(i) = c(i) * b(i);
    scale = 1.0 / beta;
  }
  std::vector<double> out;
  if (m == 1) {
    out.push_back(diag(0) * scale);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  for (int i = m - 1; i >= 0; --i) out.push_back(es.eigenvalues()(i) * scale);
  return out;
}

MatrixSample sample_matrix_variate(const MatrixVariateSpec& spec, RngStream& rng) {
  spec.validate();
  require_dense_beta(spec.beta());
  const int m = spec.m(), n = spec.n();
  const EnsembleSpec& core = spec.core;
  auto core_sample = [&]() -> DMatrix {
    if (is_vector_spherical(core.family)) return sample_radial_family(core, m, n, rng);
    if (is_spherical_quotient(core.family)) {
      int nu = require_integer(core.nu, "nu", m);
      return std::get<DMatrix>(sample_quotient_family(core, m, n, nu, rng));
    }
    throw UnsupportedError(std::string(family_name(core.family)) + " cannot be a matrix-variate core");
  };
  switch (spec.kind) {
    case MatrixVariateKind::LeftElliptical:
    case MatrixVariateKind::SphericalElliptical:
    case MatrixVariateKind::VectorSphericalElliptical:
    case MatrixVariateKind::Normal: {
      DMatrix z = core_sample();
      return pd_sqrt(spec.theta).matrix() * z * pd_sqrt(spec.sigma).matrix() + spec.mu;
    }
    case MatrixVariateKind::Wishart:
    case MatrixVariateKind::SGW:
    case MatrixVariateKind::VSGW: {
      DMatrix z = core_sample();
      DMatrix r = pd_sqrt(spec.sigma).matrix();
      return HermitianMatrix(r * adjoint(z) * z * r, 1e-8);
    }
    case MatrixVariateKind::BetaI:
    case MatrixVariateKind::BetaII: {
      EnsembleSpec s = core;
      s.family = spec.kind == MatrixVariateKind::BetaI ? Family::GegenbauerLaguerreII : Family::TLaguerreII;
      return sample_laguerre(s, m, n, rng);
    }
  }
  throw UnsupportedError("unknown matrix-variate kind");
}

std::vector<double> sample_eigenvalues(const EnsembleSpec& spec, RngStream& rng) {
  spec.validate();
  if (spec.family == Family::Fourier) return sample_fourier(spec.m, spec.beta, rng);
  if (is_laguerre_family(spec.family)) {
    int n = require_integer(spec.n, "n", spec.m);
    return hermitian_eigenvalues(sample_laguerre(spec, spec.m, n, rng));
  }
  if (is_vector_spherical(spec.family)) return hermitian_eigenvalues(sample_vs_ensemble(spec, rng));
  throw UnsupportedError(std::string(family_name(spec.family)) + " has no Hermitian ensemble sampler");
}

}  // namespace rmx
