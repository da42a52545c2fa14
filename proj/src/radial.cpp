#include "rmx/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rmx/errors.hpp"
#include "rmx/quadrature.hpp"
#include "rmx/special.hpp"

namespace rmx {

namespace {
const double kLogPi = std::log(std::numbers::pi);
}

RadialKernel RadialKernel::for_spec(const EnsembleSpec& spec, double dim) {
  if (!is_vector_spherical(spec.family))
    throw UnsupportedError(std::string(family_name(spec.family)) + " is not a vector-spherical family");
  return {spec.family, spec.beta, spec.nu, spec.q, dim};
}

double RadialKernel::log_h(double u) const {
  switch (family) {
    case Family::Hermite: return -0.5 * beta * u;
    case Family::TI: return -0.5 * (dim + beta * nu) * std::log1p(u);
    case Family::GegenbauerI:
      if (u >= 1.0) return -kInf;
      return beta * q * std::log1p(-u);
    default: throw UnsupportedError("not a vector-spherical family");
  }
}

double RadialKernel::support() const { return family == Family::GegenbauerI ? 1.0 : kInf; }

LogValue RadialKernel::log_constant() const {
  const double half = 0.5 * dim;
  switch (family) {
    case Family::Hermite: return LogValue::of(half * std::log(beta / (2.0 * std::numbers::pi)));
    case Family::TI:
      if (!(nu > 0)) throw DomainError("nu", "must be positive");
      return LogValue::of(lgamma_pos(0.5 * (dim + beta * nu)) - half * kLogPi - lgamma_pos(0.5 * beta * nu));
    case Family::GegenbauerI:
      if (!(beta * q > -1.0)) throw DomainError("q", "must satisfy beta*q > -1");
      return LogValue::of(lgamma_pos(half + beta * q + 1.0) - half * kLogPi - lgamma_pos(beta * q + 1.0));
    default: throw UnsupportedError("not a vector-spherical family");
  }
}

LogValue vs_constant_log(int m, int n, int beta, const EnsembleSpec& family) {
  if (m < 1) throw DomainError("m", "must be at least 1");
  if (n < 1) throw DomainError("n", "must be at least 1");
  EnsembleSpec spec = family;
  spec.beta = beta;
  return RadialKernel::for_spec(spec, beta * m * n).log_constant();
}

LogValue radial_constant_log_numeric(int dim, const std::function<double(double)>& log_h, double tol) {
  auto log_integrand = [&](double t) {
    double u = std::tan(t), c = std::cos(t);
    return (dim - 1) * std::log(u) + log_h(u * u) - 2.0 * std::log(c);
  };
  // Shift by the peak so the integrand stays representable.
  double peak = -kInf;
  for (int k = 1; k < 400; ++k) {
    double v = log_integrand(0.5 * std::numbers::pi * k / 400.0);
    if (std::isfinite(v)) peak = std::max(peak, v);
  }
  if (!std::isfinite(peak)) throw Error("radial integrand vanishes everywhere");
  double integral = integrate(
      [&](double t) {
        double v = log_integrand(t);
        return std::isfinite(v) ? std::exp(v - peak) : 0.0;
      },
      {0.0, 0.5 * std::numbers::pi}, tol);
  if (!(integral > 0) || !std::isfinite(integral)) throw Error("radial integral is not finite");
  return LogValue::of(lgamma_pos(0.5 * dim) - std::numbers::ln2 - 0.5 * dim * kLogPi - std::log(integral) - peak);
}

}  // namespace rmx
