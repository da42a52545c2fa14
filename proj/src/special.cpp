#include "rmx/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rmx/algebra.hpp"
#include "rmx/errors.hpp"

namespace rmx {

namespace {

const double kLogPi = std::log(std::numbers::pi);

void require_m(int m) {
  if (m < 1) throw DomainError("m", "must be at least 1");
}

}  // namespace

int tau(int beta, int m) {
  require_m(m);
  switch (beta) {
    case 1: return 0;
    case 2: return -m;
    case 4: return -2 * m;
    case 8: return -4 * m;
  }
  throw DomainError("beta", "must be one of 1, 2, 4, 8");
}

double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

LogValue mv_gamma_log(int m, int beta, double a) {
  require_m(m);
  algebra_from_beta(beta);
  const double bound = 0.5 * (m - 1) * beta;
  if (!(a > bound))
    throw DomainError("a", "multivariate gamma requires a > " + std::to_string(bound) + " (got " +
                               std::to_string(a) + ")");
  double s = 0.25 * m * (m - 1) * beta * kLogPi;
  for (int i = 0; i < m; ++i) s += lgamma_pos(a - 0.5 * i * beta);
  return LogValue::of(s);
}

LogValue mv_beta_log(int m, int beta, double a, double b) {
  const double bound = 0.5 * (m - 1) * beta;
  if (!(a > bound)) throw DomainError("a", "multivariate beta requires a > " + std::to_string(bound));
  if (!(b > bound)) throw DomainError("b", "multivariate beta requires b > " + std::to_string(bound));
  return mv_gamma_log(m, beta, a) + mv_gamma_log(m, beta, b) - mv_gamma_log(m, beta, a + b);
}

LogValue stiefel_log_volume(int m, int n, int beta) {
  require_m(m);
  if (n < m) throw DomainError("n", "Stiefel manifold requires n >= m");
  return LogValue::of(m * std::numbers::ln2 + 0.5 * m * n * beta * kLogPi) - mv_gamma_log(m, beta, 0.5 * n * beta);
}

LogValue fourier_constant_log(int m, int beta) {
  require_m(m);
  algebra_from_beta(beta);
  return LogValue::of(lgamma_pos(0.5 * beta * m + 1.0) - m * lgamma_pos(0.5 * beta + 1.0));
}

LogValue symmetric_space_log_volume(int m, int beta) {
  require_m(m);
  double num = m * std::numbers::ln2 + (0.5 * beta * m * m + tau(beta, m)) * kLogPi +
               m * lgamma_pos(0.5 * beta + 1.0);
  return LogValue::of(num - lgamma_pos(0.5 * beta * m + 1.0)) - mv_gamma_log(m, beta, 0.5 * beta * m);
}

}  // namespace rmx
