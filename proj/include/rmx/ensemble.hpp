#pragma once

#include <string>
#include <string_view>

namespace rmx {

enum class Family {
  Hermite,
  TI,
  GegenbauerI,
  TII,
  GegenbauerII,
  Laguerre,
  TLaguerreI,
  GegenbauerLaguerreI,
  TLaguerreII,           // modified Jacobi
  GegenbauerLaguerreII,  // Jacobi
  Fourier,
};

// Rectangular: n x m matrix A. Ensemble: m x m Hermitian matrix.
enum class Shape { Rectangular, Ensemble };

struct EnsembleSpec {
  Family family = Family::Hermite;
  int beta = 1;
  int m = 1;
  double n = 1.0;
  double nu = 1.0;
  double q = 0.0;
  Shape shape = Shape::Rectangular;

  // Throws DomainError naming the offending field.
  void validate() const;
  std::string describe() const;
};

std::string_view family_name(Family f);
// Accepts canonical names and common aliases (e.g. "jacobi", "t2").
Family parse_family(std::string_view name);

bool is_vector_spherical(Family f);  // Hermite, T-I, Gegenbauer-I
bool is_spherical_quotient(Family f);  // T-II, Gegenbauer-II
bool is_laguerre_family(Family f);

}  // namespace rmx
