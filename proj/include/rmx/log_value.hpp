#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace rmx {

// Log of a non-negative quantity. A zero quantity is stored as finite == false
// and reports -inf; NaN never escapes.
struct LogValue {
  double log_magnitude = 0.0;
  bool finite = true;

  static LogValue of(double log_mag) { return {log_mag, true}; }
  static LogValue zero() { return {0.0, false}; }

  double value() const {
    return finite ? log_magnitude : -std::numeric_limits<double>::infinity();
  }
  double exp() const { return finite ? std::exp(log_magnitude) : 0.0; }

  LogValue operator+(const LogValue& o) const {
    if (!finite || !o.finite) return zero();
    return of(log_magnitude + o.log_magnitude);
  }
  LogValue operator-(const LogValue& o) const {
    if (!finite) return zero();
    return of(log_magnitude - o.log_magnitude);
  }
};

std::string format_log_value(const LogValue& v, int precision = 17);

}  // namespace rmx
