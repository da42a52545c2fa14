#pragma once

#include <variant>
#include <vector>

#include "rmx/algebra.hpp"
#include "rmx/ensemble.hpp"
#include "rmx/matrix_variate.hpp"
#include "rmx/rng.hpp"

namespace rmx {

// n x m matrix; each entry has beta independent N(0, 1/beta) components, so
// E|a_ij|^2 = 1.
DMatrix sample_gaussian_matrix(int m, int n, int beta, RngStream& rng);
DMatrix sample_gaussian(Algebra alg, int rows, int cols, double component_sd, RngStream& rng);

// Haar n x n unitary over the algebra: Ginibre QR with the diagonal phases of
// T removed.
DMatrix sample_haar(int n, int beta, RngStream& rng);

// (A + A*)/2 with A Gaussian m x m: density proportional to etr(-beta A^2/2).
HermitianMatrix sample_hermite_ensemble(int m, int beta, RngStream& rng);

// Hermitian ensemble of a vector-spherical family (Hermite, T-I, Gegenbauer-I),
// drawn radially in the real coordinates (a_ii, sqrt(2) a_ij).
HermitianMatrix sample_vs_ensemble(const EnsembleSpec& spec, RngStream& rng);

// n x m matrix r U with U uniform on the unit sphere of R^{beta m n}.
DMatrix sample_radial_family(const EnsembleSpec& spec, int m, int n, RngStream& rng);

// A1 (n1 x m), A2 (n2 x m) Gaussian; returns
//   T-II:           A1 (A2* A2)^{-1/2}                 (DMatrix, n = n1, nu = n2)
//   Gegenbauer-II:  A1 (A1* A1 + A2* A2)^{-1/2}        (DMatrix)
//   Jacobi:         W^{-1/2} A1* A1 W^{-1/2}, W = sum  (Hermitian)
//   modified Jacobi:(A2* A2)^{-1/2} A1* A1 (A2* A2)^{-1/2}
using MatrixSample = std::variant<DMatrix, HermitianMatrix>;
MatrixSample sample_quotient_family(const EnsembleSpec& spec, int m, int n1, int n2, RngStream& rng);

// Laguerre-type m x m Hermitian matrix. Vector-spherical Laguerre families
// use A* A with A radial; the quotient families use integer n and nu.
HermitianMatrix sample_laguerre(const EnsembleSpec& spec, int m, int n, RngStream& rng);

// Eigenangles in (-pi, pi], descending: CUE (beta 2), COE via U^T U (beta 1),
// CSE via the self-dual U^D U (beta 4).
std::vector<double> sample_fourier(int m, int beta, RngStream& rng);

// General-beta tridiagonal and bidiagonal models, eigenvalues descending,
// scaled to the densities exp(-beta sum l^2 / 2) and
// prod l^{beta(n-m+1)/2-1} exp(-beta sum l / 2).
enum class TridiagonalFamily { Hermite, Laguerre };
std::vector<double> sample_tridiagonal_beta(TridiagonalFamily family, int m, double beta, double n, RngStream& rng);

MatrixSample sample_matrix_variate(const MatrixVariateSpec& spec, RngStream& rng);

// Descending spectrum of one draw of the ensemble described by spec
// (Hermitian ensembles, Laguerre families, Fourier).
std::vector<double> sample_eigenvalues(const EnsembleSpec& spec, RngStream& rng);

}  // namespace rmx
