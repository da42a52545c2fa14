#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rmx/algebra.hpp"

namespace rmx {

// Closed-form log-Jacobians of the matrix factorizations. Each takes the
// factor data only. Spectra are descending.

// Y = A X B + C with X n x m, A n x n, B m x m.
double logjac_linear(const DMatrix& a, const DMatrix& b);
// Y = A X A* + C on Hermitian m x m X.
double logjac_congruence(const DMatrix& a);
// J = B G, B diagonal with entries of modulus b_i, G unit upper triangular.
double logjac_diag_triangular(std::span<const double> b_abs, int beta);
// Diagonal moduli: upsilon_ii (Doolittle), delta_ii (Crout), pi_i (LDM).
double logjac_lu(std::span<const double> diag_abs, int beta, LuVariant variant);
// X = H1 T, t = diag(T), X n x m.
double logjac_qr(std::span<const double> t, int n, int beta);
// X = H1 N Omega. Includes the 2^{-m} factor.
double logjac_qdr(std::span<const double> nd, int n, int beta);
// X = P1 R with d the eigenvalues of R.
double logjac_polar(std::span<const double> d, int n, int beta);
double logjac_polar(const HermitianMatrix& r, int n);
// X = V1 D W*. Includes 2^{-m} pi^tau.
double logjac_svd(std::span<const double> d, int n, int beta);
// S = T* T.
double logjac_cholesky(std::span<const double> t, int beta);
// S = Omega* O Omega.
double logjac_ldl(std::span<const double> o, int beta);
// S = R^2 with d the eigenvalues of R.
double logjac_sqrt(std::span<const double> d, int beta);
double logjac_sqrt(const HermitianMatrix& r);
// S = W Lambda W*. Includes 2^{-m} pi^tau.
double logjac_spectral(std::span<const double> lambda, int beta);
// X -> (S = X* X, V1): 2^{-m} |S|^{beta(n-m+1)/2 - 1}.
double logjac_wishart_map(double log_det_s, int m, int n, int beta);
double logjac_wishart_map(const HermitianMatrix& s, int n);

// A local chart: real factor coordinates -> real coordinates of the
// reconstructed matrix (DMatrix or Hermitian coordinates).
struct FactorizationChart {
  std::string name;
  int beta = 1, m = 1, n = 1;
  std::vector<double> base;  // factor coordinates of the sampled point
  std::function<std::vector<double>(std::span<const double>)> reconstruct;
  std::string gauge;
  int output_dim = 0;

  int input_dim() const { return static_cast<int>(base.size()); }
};

// log|det| of the central-difference Jacobian matrix of chart.reconstruct at
// `point`, step h_k = 1e-5 (1 + |x_k|). Throws DimensionError for a non-square
// chart and DegenerateError for a singular difference matrix.
double fd_jacobian_oracle(const FactorizationChart& chart, std::span<const double> point);

}  // namespace rmx
