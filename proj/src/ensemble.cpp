#include "rmx/ensemble.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "rmx/algebra.hpp"
#include "rmx/errors.hpp"

namespace rmx {

namespace {

struct Alias {
  std::string_view name;
  Family family;
};

constexpr std::array<Alias, 27> kAliases{{
    {"hermite", Family::Hermite},
    {"gaussian", Family::Hermite},
    {"t1", Family::TI},
    {"t-i", Family::TI},
    {"student1", Family::TI},
    {"gegenbauer1", Family::GegenbauerI},
    {"gegenbauer-i", Family::GegenbauerI},
    {"t2", Family::TII},
    {"t-ii", Family::TII},
    {"gegenbauer2", Family::GegenbauerII},
    {"gegenbauer-ii", Family::GegenbauerII},
    {"laguerre", Family::Laguerre},
    {"wishart", Family::Laguerre},
    {"t-laguerre1", Family::TLaguerreI},
    {"t-laguerre-i", Family::TLaguerreI},
    {"gegenbauer-laguerre1", Family::GegenbauerLaguerreI},
    {"gegenbauer-laguerre-i", Family::GegenbauerLaguerreI},
    {"t-laguerre2", Family::TLaguerreII},
    {"t-laguerre-ii", Family::TLaguerreII},
    {"modified-jacobi", Family::TLaguerreII},
    {"beta2", Family::TLaguerreII},
    {"gegenbauer-laguerre2", Family::GegenbauerLaguerreII},
    {"gegenbauer-laguerre-ii", Family::GegenbauerLaguerreII},
    {"jacobi", Family::GegenbauerLaguerreII},
    {"beta1", Family::GegenbauerLaguerreII},
    {"fourier", Family::Fourier},
    {"circular", Family::Fourier},
}};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::TI: return "t1";
    case Family::GegenbauerI: return "gegenbauer1";
    case Family::TII: return "t2";
    case Family::GegenbauerII: return "gegenbauer2";
    case Family::Laguerre: return "laguerre";
    case Family::TLaguerreI: return "t-laguerre1";
    case Family::GegenbauerLaguerreI: return "gegenbauer-laguerre1";
    case Family::TLaguerreII: return "modified-jacobi";
    case Family::GegenbauerLaguerreII: return "jacobi";
    case Family::Fourier: return "fourier";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& a : kAliases)
    if (a.name == lower) return a.family;
  throw DomainError("family", "unknown family '" + std::string(name) + "'");
}

bool is_vector_spherical(Family f) {
  return f == Family::Hermite || f == Family::TI || f == Family::GegenbauerI;
}

bool is_spherical_quotient(Family f) { return f == Family::TII || f == Family::GegenbauerII; }

bool is_laguerre_family(Family f) {
  return f == Family::Laguerre || f == Family::TLaguerreI || f == Family::GegenbauerLaguerreI ||
         f == Family::TLaguerreII || f == Family::GegenbauerLaguerreII;
}

void EnsembleSpec::validate() const {
  algebra_from_beta(beta);
  if (m < 1) throw DomainError("m", "must be at least 1");
  const double lower = m - 1;
  auto need_nu_positive = [&] {
    if (!(nu > 0)) throw DomainError("nu", "must be positive (got " + fmt(nu) + ")");
  };
  auto need_nu_rank = [&] {
    if (!(nu > lower)) throw DomainError("nu", "must exceed m - 1 = " + fmt(lower) + " (got " + fmt(nu) + ")");
  };
  auto need_q = [&] {
    if (!(q > -1.0) || !(beta * q > -1.0))
      throw DomainError("q", "must satisfy q > -1 and beta*q > -1 (got " + fmt(q) + ")");
  };
  auto need_n_rank = [&] {
    if (!(n > lower)) throw DomainError("n", "must exceed m - 1 = " + fmt(lower) + " (got " + fmt(n) + ")");
  };
  switch (family) {
    case Family::Hermite: break;
    case Family::TI: need_nu_positive(); break;
    case Family::GegenbauerI: need_q(); break;
    case Family::TII:
    case Family::GegenbauerII: need_nu_rank(); break;
    case Family::Laguerre: need_n_rank(); break;
    case Family::TLaguerreI: need_n_rank(); need_nu_positive(); break;
    case Family::GegenbauerLaguerreI: need_n_rank(); need_q(); break;
    case Family::TLaguerreII:
    case Family::GegenbauerLaguerreII: need_n_rank(); need_nu_rank(); break;
    case Family::Fourier: break;
  }
  if (shape == Shape::Rectangular && !is_laguerre_family(family) && family != Family::Fourier) {
    if (!(n >= m)) throw DomainError("n", "rectangular shape needs n >= m (got " + fmt(n) + ")");
  }
}

std::string EnsembleSpec::describe() const {
  std::ostringstream os;
  os << "family=" << family_name(family) << ";beta=" << beta << ";m=" << m;
  if (is_laguerre_family(family) || (family != Family::Fourier && shape == Shape::Rectangular)) os << ";n=" << n;
  switch (family) {
    case Family::TI:
    case Family::TII:
    case Family::GegenbauerII:
    case Family::TLaguerreI:
    case Family::TLaguerreII:
    case Family::GegenbauerLaguerreII: os << ";nu=" << nu; break;
    case Family::GegenbauerI:
    case Family::GegenbauerLaguerreI: os << ";q=" << q; break;
    default: break;
  }
  if (!is_laguerre_family(family) && family != Family::Fourier)
    os << ";shape=" << (shape == Shape::Rectangular ? "rectangular" : "ensemble");
  return os.str();
}

}  // namespace rmx
