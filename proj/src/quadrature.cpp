#include "rmx/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

#include "rmx/errors.hpp"

namespace rmx {

namespace {

constexpr int kLevels = 3;

struct Integrators {
  boost::math::quadrature::tanh_sinh<double> finite;
  boost::math::quadrature::exp_sinh<double> half;
  boost::math::quadrature::sinh_sinh<double> line;
};

Integrators& integrators(int level) {
  thread_local Integrators pool[kLevels];
  if (level < 0 || level >= kLevels) throw Error("quadrature nesting too deep");
  return pool[level];
}

}  // namespace

double integrate(const std::function<double(double)>& f, Interval iv, double tol, int level) {
  if (iv.lo == iv.hi) return 0.0;
  if (iv.lo > iv.hi) return -integrate(f, {iv.hi, iv.lo}, tol, level);
  Integrators& q = integrators(level);
  double err = 0.0, l1 = 0.0;
  if (iv.finite()) return q.finite.integrate(f, iv.lo, iv.hi, tol, &err, &l1);
  if (std::isinf(iv.lo) && std::isinf(iv.hi)) return q.line.integrate(f, tol, &err, &l1);
  return q.half.integrate(f, iv.lo, iv.hi, tol, &err, &l1);
}

double integrate_2d(const std::function<double(double, double)>& f, Interval ix, Interval iy, double tol) {
  return integrate(
      [&](double x) { return integrate([&](double y) { return f(x, y); }, iy, tol, 1); }, ix, tol, 0);
}

}  // namespace rmx
