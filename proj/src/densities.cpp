#include "rmx/densities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "rmx/radial.hpp"
#include "rmx/special.hpp"

namespace rmx {

namespace {

const double kLogPi = std::log(std::numbers::pi);
constexpr double kSupportTol = 1e-12;

double log_factorial(int m) { return lgamma_pos(m + 1.0); }

// Radial kernel of the vector-spherical core of a (Laguerre) family.
RadialKernel core_kernel(const EnsembleSpec& spec, double dim) {
  EnsembleSpec core = spec;
  switch (spec.family) {
    case Family::Laguerre: core.family = Family::Hermite; break;
    case Family::TLaguerreI: core.family = Family::TI; break;
    case Family::GegenbauerLaguerreI: core.family = Family::GegenbauerI; break;
    default: break;
  }
  return RadialKernel::for_spec(core, dim);
}

int ensemble_dim(const EnsembleSpec& s) { return HermitianMatrix::coordinate_count(s.m, s.beta); }

double laguerre_power(const EnsembleSpec& s) { return 0.5 * s.beta * (s.n - s.m + 1) - 1.0; }
double jacobi_power(const EnsembleSpec& s) { return 0.5 * s.beta * (s.nu - s.m + 1) - 1.0; }

// Fibre volume factor turning a unitarily invariant matrix density into the
// ordered eigenvalue density: pi^{beta m^2/2 + tau} / Gamma_m(beta m / 2).
double spectral_fibre_log(const EnsembleSpec& s) {
  return (0.5 * s.beta * s.m * s.m + tau(s.beta, s.m)) * kLogPi - mv_gamma_log(s.m, s.beta, 0.5 * s.beta * s.m).value();
}

double log_vandermonde(std::span<const double> l, double beta) {
  double v = 0.0;
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = i + 1; j < l.size(); ++j) v += std::log(l[i] - l[j]);
  return beta * v;
}

double rectangular_ss_constant(const EnsembleSpec& s) {
  const double n = s.n;
  return mv_gamma_log(s.m, s.beta, 0.5 * s.beta * (n + s.nu)).value() - 0.5 * s.beta * s.m * n * kLogPi -
         mv_gamma_log(s.m, s.beta, 0.5 * s.beta * s.nu).value();
}

double ss_weight_log(const EnsembleSpec& s, double l) {
  if (s.family == Family::TII) return -0.5 * s.beta * (s.m + s.nu) * std::log1p(l * l);
  return jacobi_power(s) * std::log1p(-l * l);
}

double sum_sq(std::span<const double> l) {
  double t = 0.0;
  for (double x : l) t += x * x;
  return t;
}

void require_ensemble_shape(const EnsembleSpec& s, const DMatrix& a) {
  if (a.rows() != s.m || a.cols() != s.m)
    throw DimensionError("expected a " + std::to_string(s.m) + " x " + std::to_string(s.m) + " matrix");
  if (a.beta() != s.beta) throw DimensionError("matrix algebra does not match beta");
}

}  // namespace

// ---- constants ----

double ss_ensemble_log_integral(const EnsembleSpec& spec, bool numeric) {
  EnsembleSpec s = spec;
  s.shape = Shape::Ensemble;
  s.validate();
  if (!is_spherical_quotient(s.family)) throw UnsupportedError("not a T-II or Gegenbauer-II ensemble");
  const int m = s.m;
  const double beta = s.beta;
  if (s.family == Family::GegenbauerII && !numeric) {
    const double a = jacobi_power(s), g = 0.5 * beta;
    double v = 0.0;
    for (int j = 0; j < m; ++j)
      v += 2.0 * lgamma_pos(a + 1.0 + j * g) + lgamma_pos(1.0 + (j + 1) * g) -
           lgamma_pos(2.0 * a + 2.0 + (m + j - 1) * g) - lgamma_pos(1.0 + g);
    return v + (m + 0.5 * beta * m * (m - 1) + 2.0 * a * m) * std::numbers::ln2 - log_factorial(m);
  }
  if (m > 2) throw UnsupportedError("T-II ensemble normalisation is only available for m <= 2");
  // Quadrature is costly; element densities call this per evaluation.
  static std::mutex cache_mutex;
  static std::map<std::tuple<int, int, int, double>, double> cache;
  const auto key = std::make_tuple(static_cast<int>(s.family), m, static_cast<int>(beta), s.nu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Interval supp = s.family == Family::TII ? Interval{-kInf, kInf} : Interval{-1.0, 1.0};
  auto w = [&](double l) { return std::exp(ss_weight_log(s, l)); };
  double integral;
  if (m == 1) {
    integral = integrate(w, supp);
  } else if (s.family == Family::TII) {
    integral = integrate_2d([&](double l2, double u) { return std::pow(u, beta) * w(l2 + u) * w(l2); }, supp,
                            {0.0, kInf});
  } else {
    integral = integrate_2d(
        [&](double l2, double t) {
          double span = 1.0 - l2, l1 = l2 + t * span;
          return std::pow(l1 - l2, beta) * w(l1) * w(l2) * span;
        },
        supp, {0.0, 1.0});
  }
  const double v = std::log(integral);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, v);
  return v;
}

double element_log_constant(const EnsembleSpec& spec) {
  spec.validate();
  const EnsembleSpec& s = spec;
  if (is_laguerre_family(s.family)) return laguerre_log_constant(s);
  if (s.family == Family::Fourier) throw UnsupportedError("the Fourier ensemble has no element density");
  if (s.shape == Shape::Rectangular) {
    if (is_vector_spherical(s.family))
      return RadialKernel::for_spec(s, static_cast<int>(s.beta * s.m * s.n)).log_constant().value();
    return rectangular_ss_constant(s);
  }
  if (is_vector_spherical(s.family))
    return 0.25 * s.beta * s.m * (s.m - 1) * std::numbers::ln2 +
           RadialKernel::for_spec(s, ensemble_dim(s)).log_constant().value();
  return -ss_ensemble_log_integral(s) - spectral_fibre_log(s);
}

double laguerre_log_constant(const EnsembleSpec& spec) {
  spec.validate();
  const EnsembleSpec& s = spec;
  switch (s.family) {
    case Family::Laguerre:
    case Family::TLaguerreI:
    case Family::GegenbauerLaguerreI: {
      const double dim = s.beta * s.m * s.n;
      const double c = core_kernel(s, dim).log_constant().value();
      return c + 0.5 * dim * kLogPi - mv_gamma_log(s.m, s.beta, 0.5 * s.beta * s.n).value();
    }
    case Family::TLaguerreII:
    case Family::GegenbauerLaguerreII:
      return -mv_beta_log(s.m, s.beta, 0.5 * s.beta * s.n, 0.5 * s.beta * s.nu).value();
    default: throw UnsupportedError(std::string(family_name(s.family)) + " is not a Laguerre family");
  }
}

double eigenvalue_log_constant(const EnsembleSpec& spec) {
  spec.validate();
  const EnsembleSpec& s = spec;
  if (s.family == Family::Fourier)
    return -fourier_constant_log(s.m, s.beta).value() - s.m * std::log(2.0 * std::numbers::pi) + log_factorial(s.m);
  if (is_laguerre_family(s.family)) return laguerre_log_constant(s) + spectral_fibre_log(s);
  if (is_spherical_quotient(s.family)) return -ss_ensemble_log_integral(s);
  EnsembleSpec e = s;
  e.shape = Shape::Ensemble;
  return element_log_constant(e) + spectral_fibre_log(e);
}

Interval eigenvalue_support(const EnsembleSpec& s) {
  switch (s.family) {
    case Family::Hermite:
    case Family::TI:
    case Family::TII: return {-kInf, kInf};
    case Family::GegenbauerI:
    case Family::GegenbauerII: return {-1.0, 1.0};
    case Family::Laguerre:
    case Family::TLaguerreI:
    case Family::TLaguerreII: return {0.0, kInf};
    case Family::GegenbauerLaguerreI:
    case Family::GegenbauerLaguerreII: return {0.0, 1.0};
    case Family::Fourier: return {-std::numbers::pi, std::numbers::pi};
  }
  return {-kInf, kInf};
}

// ---- eigenvalue density ----

EigenvalueDensity::EigenvalueDensity(const EnsembleSpec& spec) : spec_(spec) {
  spec_.validate();
  if (!is_laguerre_family(spec_.family) && spec_.family != Family::Fourier) spec_.shape = Shape::Ensemble;
  log_const_ = eigenvalue_log_constant(spec_);
  support_ = eigenvalue_support(spec_);
}

double EigenvalueDensity::log_kernel(std::span<const double> l) const {
  const EnsembleSpec& s = spec_;
  const double beta = s.beta;
  if (s.family == Family::Fourier) {
    double v = 0.0;
    for (size_t i = 0; i < l.size(); ++i)
      for (size_t j = i + 1; j < l.size(); ++j) v += std::log(std::abs(2.0 * std::sin(0.5 * (l[i] - l[j]))));
    return beta * v;
  }
  double v = log_vandermonde(l, beta);
  switch (s.family) {
    case Family::Hermite:
    case Family::TI:
    case Family::GegenbauerI:
      return v + RadialKernel::for_spec(s, ensemble_dim(s)).log_h(sum_sq(l));
    case Family::TII:
    case Family::GegenbauerII:
      for (double x : l) v += ss_weight_log(s, x);
      return v;
    case Family::Laguerre:
    case Family::TLaguerreI:
    case Family::GegenbauerLaguerreI: {
      double tr = 0.0;
      for (double x : l) {
        v += laguerre_power(s) * std::log(x);
        tr += x;
      }
      return v + core_kernel(s, beta * s.m * s.n).log_h(tr);
    }
    case Family::TLaguerreII:
      for (double x : l) v += laguerre_power(s) * std::log(x) - 0.5 * beta * (s.n + s.nu) * std::log1p(x);
      return v;
    case Family::GegenbauerLaguerreII:
      for (double x : l) v += laguerre_power(s) * std::log(x) + jacobi_power(s) * std::log1p(-x);
      return v;
    case Family::Fourier: break;
  }
  return v;
}

LogValue EigenvalueDensity::operator()(std::span<const double> l) const {
  if (static_cast<int>(l.size()) != spec_.m)
    throw DimensionError("expected " + std::to_string(spec_.m) + " eigenvalues, got " + std::to_string(l.size()));
  for (size_t i = 0; i < l.size(); ++i) {
    if (!std::isfinite(l[i])) throw DomainError("lambda", "eigenvalues must be finite");
    bool inside = spec_.family == Family::Fourier ? (l[i] >= support_.lo && l[i] <= support_.hi)
                                                   : (l[i] > support_.lo && l[i] < support_.hi);
    if (!inside) throw DomainError("lambda", "eigenvalue " + std::to_string(l[i]) + " is outside the support");
    if (i > 0 && !(l[i - 1] > l[i])) throw DomainError("lambda", "eigenvalues must be strictly descending");
  }
  double v = log_kernel(l);
  if (!std::isfinite(v)) return LogValue::zero();
  return LogValue::of(log_const_ + v);
}

double EigenvalueDensity::pdf_unchecked(std::span<const double> l) const {
  for (size_t i = 0; i < l.size(); ++i) {
    if (!(l[i] > support_.lo && l[i] < support_.hi)) return 0.0;
    if (i > 0 && !(l[i - 1] > l[i])) return 0.0;
  }
  double v = log_kernel(l);
  return std::isfinite(v) ? std::exp(log_const_ + v) : 0.0;
}

LogValue log_density_eigenvalues(const EnsembleSpec& spec, std::span<const double> lambda) {
  return EigenvalueDensity(spec)(lambda);
}

LogValue log_density_fourier_angles(int m, int beta, std::span<const double> theta) {
  if (m < 1) throw DomainError("m", "must be at least 1");
  algebra_from_beta(beta);
  if (static_cast<int>(theta.size()) != m) throw DimensionError("expected " + std::to_string(m) + " angles");
  for (double t : theta)
    if (!(t >= -std::numbers::pi && t <= std::numbers::pi)) throw DomainError("theta", "angle outside [-pi, pi]");
  double v = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) v += std::log(std::abs(2.0 * std::sin(0.5 * (theta[i] - theta[j]))));
  if (!std::isfinite(v)) return LogValue::zero();
  return LogValue::of(beta * v - fourier_constant_log(m, beta).value() - m * std::log(2.0 * std::numbers::pi));
}

// ---- element and Laguerre densities ----

LogValue log_density_laguerre(const EnsembleSpec& spec, const HermitianMatrix& s_mat) {
  spec.validate();
  if (!is_laguerre_family(spec.family))
    throw UnsupportedError(std::string(family_name(spec.family)) + " is not a Laguerre family");
  const EnsembleSpec& s = spec;
  if (s_mat.size() != s.m || s_mat.beta() != s.beta) throw DimensionError("S has the wrong size or algebra");
  std::vector<double> l = hermitian_eigenvalues(s_mat);
  if (!(l.back() > kSupportTol)) return LogValue::zero();
  double logdet = 0.0, tr = 0.0;
  for (double x : l) {
    logdet += std::log(x);
    tr += x;
  }
  double v = laguerre_log_constant(s) + laguerre_power(s) * logdet;
  switch (s.family) {
    case Family::TLaguerreII:
      for (double x : l) v -= 0.5 * s.beta * (s.n + s.nu) * std::log1p(x);
      break;
    case Family::GegenbauerLaguerreII:
      if (!(l.front() < 1.0 - kSupportTol)) return LogValue::zero();
      for (double x : l) v += jacobi_power(s) * std::log1p(-x);
      break;
    default: {
      double lh = core_kernel(s, s.beta * s.m * s.n).log_h(tr);
      if (!std::isfinite(lh)) return LogValue::zero();
      v += lh;
    }
  }
  return LogValue::of(v);
}

LogValue log_density_element(const EnsembleSpec& spec, const DMatrix& a) {
  spec.validate();
  const EnsembleSpec& s = spec;
  if (is_laguerre_family(s.family)) {
    require_ensemble_shape(s, a);
    return log_density_laguerre(s, HermitianMatrix(a));
  }
  if (s.family == Family::Fourier) throw UnsupportedError("the Fourier ensemble has no element density");
  require_matrix_algebra(a.algebra());
  const double c = element_log_constant(s);
  if (s.shape == Shape::Rectangular) {
    const int n = static_cast<int>(s.n);
    if (a.rows() != n || a.cols() != s.m || static_cast<double>(n) != s.n)
      throw DimensionError("expected an " + std::to_string(n) + " x " + std::to_string(s.m) + " matrix");
    if (a.beta() != s.beta) throw DimensionError("matrix algebra does not match beta");
    if (is_vector_spherical(s.family)) {
      double tr = frobenius_norm(a);
      double lh = RadialKernel::for_spec(s, s.beta * s.m * n).log_h(tr * tr);
      return std::isfinite(lh) ? LogValue::of(c + lh) : LogValue::zero();
    }
    std::vector<double> l = hermitian_eigenvalues(gram(a));
    double v = c;
    for (double x : l) {
      if (s.family == Family::TII) {
        v -= 0.5 * s.beta * (n + s.nu) * std::log1p(x);
      } else {
        if (!(x < 1.0 - kSupportTol)) return LogValue::zero();
        v += jacobi_power(s) * std::log1p(-x);
      }
    }
    return LogValue::of(v);
  }
  require_ensemble_shape(s, a);
  HermitianMatrix h(a);
  if (is_vector_spherical(s.family)) {
    double tr = frobenius_norm(a);
    double lh = RadialKernel::for_spec(s, ensemble_dim(s)).log_h(tr * tr);
    return std::isfinite(lh) ? LogValue::of(c + lh) : LogValue::zero();
  }
  double v = c;
  for (double x : hermitian_eigenvalues(h)) {
    if (s.family == Family::GegenbauerII && !(std::abs(x) < 1.0 - kSupportTol)) return LogValue::zero();
    v += ss_weight_log(s, x);
  }
  return LogValue::of(v);
}

// ---- matrix-variate ----

namespace {

struct KindInfo {
  MatrixVariateKind kind;
  std::string_view name;
  bool hermitian;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {MatrixVariateKind::LeftElliptical, "left-elliptical", false},
    {MatrixVariateKind::SphericalElliptical, "spherical-elliptical", false},
    {MatrixVariateKind::VectorSphericalElliptical, "vector-spherical-elliptical", false},
    {MatrixVariateKind::Normal, "normal", false},
    {MatrixVariateKind::Wishart, "wishart", true},
    {MatrixVariateKind::BetaI, "beta1", true},
    {MatrixVariateKind::BetaII, "beta2", true},
    {MatrixVariateKind::SGW, "sgw", true},
    {MatrixVariateKind::VSGW, "vsgw", true},
}};

}  // namespace

std::string_view kind_name(MatrixVariateKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i.name;
  return "?";
}

MatrixVariateKind parse_kind(std::string_view name) {
  for (const auto& i : kKinds)
    if (i.name == name) return i.kind;
  throw DomainError("kind", "unknown matrix-variate kind '" + std::string(name) + "'");
}

bool kind_is_hermitian(MatrixVariateKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i.hermitian;
  return false;
}

MatrixVariateSpec MatrixVariateSpec::standard(MatrixVariateKind kind, const EnsembleSpec& core) {
  MatrixVariateSpec s;
  s.kind = kind;
  s.core = core;
  s.core.shape = Shape::Rectangular;
  if (kind == MatrixVariateKind::Normal || kind == MatrixVariateKind::Wishart) s.core.family = Family::Hermite;
  const Algebra alg = algebra_from_beta(core.beta);
  require_matrix_algebra(alg);
  const int n = static_cast<int>(core.n);
  s.mu = DMatrix(alg, n, core.m);
  s.sigma = HermitianMatrix(DMatrix::identity(alg, core.m));
  s.theta = HermitianMatrix(DMatrix::identity(alg, n));
  return s;
}

void MatrixVariateSpec::validate() const {
  if (core.shape != Shape::Rectangular) throw DomainError("shape", "matrix-variate cores are rectangular");
  require_matrix_algebra(algebra_from_beta(core.beta));
  const Family f = core.family;
  switch (kind) {
    case MatrixVariateKind::Normal:
    case MatrixVariateKind::Wishart:
      if (f != Family::Hermite) throw DomainError("family", "normal and Wishart kinds need the Hermite core");
      break;
    case MatrixVariateKind::VectorSphericalElliptical:
    case MatrixVariateKind::VSGW:
      if (!is_vector_spherical(f)) throw DomainError("family", "kind needs a vector-spherical core");
      break;
    case MatrixVariateKind::LeftElliptical:
    case MatrixVariateKind::SphericalElliptical:
    case MatrixVariateKind::SGW:
      if (!is_vector_spherical(f) && !is_spherical_quotient(f))
        throw DomainError("family", "kind needs a spherical core");
      break;
    case MatrixVariateKind::BetaI:
    case MatrixVariateKind::BetaII: {
      EnsembleSpec j = core;
      j.family = Family::GegenbauerLaguerreII;
      j.validate();
      return;
    }
  }
  core.validate();
  const int m = core.m, n = static_cast<int>(core.n);
  if (static_cast<double>(n) != core.n) throw DomainError("n", "matrix-variate kinds need integer n");
  const Algebra alg = algebra_from_beta(core.beta);
  if (sigma.size() != m || sigma.algebra() != alg) throw DimensionError("Sigma must be m x m over the same algebra");
  if (!is_positive_definite(sigma)) throw DomainError("sigma", "must be positive definite");
  if (kind_is_hermitian(kind)) return;
  if (theta.size() != n || theta.algebra() != alg) throw DimensionError("Theta must be n x n over the same algebra");
  if (!is_positive_definite(theta)) throw DomainError("theta", "must be positive definite");
  if (mu.rows() != n || mu.cols() != m || mu.algebra() != alg) throw DimensionError("mu must be n x m");
}

LogValue log_density_matrix_variate(const MatrixVariateSpec& spec, const DMatrix& x) {
  spec.validate();
  const EnsembleSpec& core = spec.core;
  const int m = core.m, n = spec.n();
  const double beta = core.beta;
  switch (spec.kind) {
    case MatrixVariateKind::BetaI:
    case MatrixVariateKind::BetaII: {
      EnsembleSpec j = core;
      j.family = spec.kind == MatrixVariateKind::BetaI ? Family::GegenbauerLaguerreII : Family::TLaguerreII;
      return log_density_laguerre(j, HermitianMatrix(x));
    }
    case MatrixVariateKind::Wishart:
    case MatrixVariateKind::SGW:
    case MatrixVariateKind::VSGW: {
      HermitianMatrix s(x);
      if (s.size() != m) throw DimensionError("S must be m x m");
      if (!is_positive_definite(s)) return LogValue::zero();
      HermitianMatrix si = pd_inv_sqrt(spec.sigma);
      HermitianMatrix u(si.matrix() * s.matrix() * si.matrix(), 1e-8);
      std::vector<double> l = hermitian_eigenvalues(u);
      double v = element_log_constant(core) + 0.5 * beta * m * n * kLogPi -
                 mv_gamma_log(m, core.beta, 0.5 * beta * n).value() -
                 0.5 * beta * n * log_det_pd(spec.sigma, "sigma") + laguerre_power(core) * log_det_pd(s);
      double tr = 0.0;
      for (double y : l) tr += y;
      if (is_vector_spherical(core.family)) {
        double lh = RadialKernel::for_spec(core, core.beta * m * n).log_h(tr);
        if (!std::isfinite(lh)) return LogValue::zero();
        return LogValue::of(v + lh);
      }
      for (double y : l) {
        if (core.family == Family::TII) {
          v -= 0.5 * beta * (n + core.nu) * std::log1p(y);
        } else {
          if (!(y < 1.0 - kSupportTol)) return LogValue::zero();
          v += jacobi_power(core) * std::log1p(-y);
        }
      }
      return LogValue::of(v);
    }
    default: {
      if (x.rows() != n || x.cols() != m) throw DimensionError("X must be n x m");
      DMatrix z = pd_inv_sqrt(spec.theta).matrix() * (x - spec.mu) * pd_inv_sqrt(spec.sigma).matrix();
      return log_density_element(core, z) -
             LogValue::of(0.5 * beta * n * log_det_pd(spec.sigma, "sigma") +
                          0.5 * beta * m * log_det_pd(spec.theta, "theta"));
    }
  }
}

}  // namespace rmx
