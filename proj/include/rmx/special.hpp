#pragma once

#include "rmx/log_value.hpp"

namespace rmx {

// tau(1) = 0, tau(2) = -m, tau(4) = -2m, tau(8) = -4m.
int tau(int beta, int m);

// Thread-safe log|Gamma(x)| for x > 0.
double lgamma_pos(double x);

// log of pi^{m(m-1)beta/4} prod_{i=1}^m Gamma(a - (i-1)beta/2); requires a > (m-1)beta/2.
LogValue mv_gamma_log(int m, int beta, double a);
LogValue mv_beta_log(int m, int beta, double a, double b);

// log(2^m pi^{mn beta/2} / Gamma_m(n beta/2)).
LogValue stiefel_log_volume(int m, int n, int beta);

// log(Gamma(beta m/2 + 1) / Gamma(beta/2 + 1)^m).
LogValue fourier_constant_log(int m, int beta);

// log(2^m pi^{beta m^2/2 + tau} Gamma(beta/2+1)^m / (Gamma_m(beta m/2) Gamma(beta m/2 + 1))).
LogValue symmetric_space_log_volume(int m, int beta);

}  // namespace rmx
