#pragma once

#include <functional>

#include "rmx/ensemble.hpp"
#include "rmx/log_value.hpp"

namespace rmx {

// Radial generator h of a vector-spherical law on R^N: density c_N h(|x|^2).
//   Hermite:      h(u) = exp(-beta u / 2)
//   T-I:          h(u) = (1 + u)^{-(N + beta nu)/2}
//   Gegenbauer-I: h(u) = (1 - u)^{beta q} on u < 1
struct RadialKernel {
  Family family = Family::Hermite;
  int beta = 1;
  double nu = 1.0;
  double q = 0.0;
  double dim = 1.0;  // N (real for non-integer Laguerre n)

  static RadialKernel for_spec(const EnsembleSpec& spec, double dim);
  double log_h(double u) const;
  // Upper end of the support of u.
  double support() const;
  // log c_N in closed form.
  LogValue log_constant() const;
};

// c^beta(m, n) for the vector-spherical families (N = beta m n).
LogValue vs_constant_log(int m, int n, int beta, const EnsembleSpec& family);

// log of Gamma(N/2) / (2 pi^{N/2}) / int_0^inf u^{N-1} h(u^2) du by quadrature
// with u = tan(t).
LogValue radial_constant_log_numeric(int dim, const std::function<double(double)>& log_h, double tol = 1e-10);

}  // namespace rmx
