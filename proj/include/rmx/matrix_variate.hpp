#pragma once

#include <string_view>

#include "rmx/algebra.hpp"
#include "rmx/ensemble.hpp"

namespace rmx {

enum class MatrixVariateKind {
  LeftElliptical,             // X = Theta^{1/2} Z Sigma^{1/2} + mu, Z spherical (core)
  SphericalElliptical,        // same, named for spherical cores
  VectorSphericalElliptical,  // same, vector-spherical core
  Normal,                     // vector-spherical with Hermite core
  Wishart,                    // S = X* X, X normal with mu = 0, Theta = I
  BetaI,                      // Jacobi with parameters (n, nu)
  BetaII,                     // modified Jacobi with parameters (n, nu)
  SGW,                        // S = X* Theta^{-1} X with spherical core
  VSGW,                       // same with vector-spherical core
};

std::string_view kind_name(MatrixVariateKind k);
MatrixVariateKind parse_kind(std::string_view name);
// Wishart, beta and generalised Wishart kinds describe an m x m Hermitian S.
bool kind_is_hermitian(MatrixVariateKind k);

// X is n x m; Sigma is m x m, Theta is n x n. `core` supplies the radial
// family (T-I nu, Gegenbauer q, ...), beta, m and n.
struct MatrixVariateSpec {
  MatrixVariateKind kind = MatrixVariateKind::Normal;
  EnsembleSpec core;
  DMatrix mu;
  HermitianMatrix sigma;
  HermitianMatrix theta;

  // Identity scales and zero location for the given core.
  static MatrixVariateSpec standard(MatrixVariateKind kind, const EnsembleSpec& core);
  void validate() const;
  int beta() const { return core.beta; }
  int m() const { return core.m; }
  int n() const { return static_cast<int>(core.n); }
};

}  // namespace rmx
