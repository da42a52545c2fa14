#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace rmx {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Adaptive double-exponential quadrature: tanh-sinh on finite intervals,
// exp-sinh on half lines, sinh-sinh on the real line. Endpoint singularities
// are tolerated. `level` selects an independent integrator so that nested
// calls never share state.
double integrate(const std::function<double(double)>& f, Interval iv, double tol = 1e-10, int level = 0);

// Iterated integral over the rectangle x in ix, y in iy.
double integrate_2d(const std::function<double(double, double)>& f, Interval ix, Interval iy, double tol = 1e-10);

}  // namespace rmx
