#pragma once

#include <span>
#include <vector>

#include "rmx/algebra.hpp"
#include "rmx/ensemble.hpp"
#include "rmx/log_value.hpp"
#include "rmx/matrix_variate.hpp"
#include "rmx/quadrature.hpp"

namespace rmx {

// Joint density of the entries. Rectangular shape: A is n x m. Ensemble
// shape: A is m x m Hermitian (T-II and Gegenbauer-II ensembles use n = m).
// Laguerre families are routed to log_density_laguerre. Out of support
// gives -inf.
LogValue log_density_element(const EnsembleSpec& spec, const DMatrix& a);

// Density of the m x m Hermitian S for the Laguerre families (Laguerre,
// T-Laguerre-I, Gegenbauer-Laguerre-I, modified Jacobi, Jacobi).
LogValue log_density_laguerre(const EnsembleSpec& spec, const HermitianMatrix& s);

// Ordered joint density of strictly descending eigenvalues. Vector-spherical
// and T-II / Gegenbauer-II families refer to the Hermitian ensembles; the
// Laguerre families to S; Fourier to descending eigenangles.
LogValue log_density_eigenvalues(const EnsembleSpec& spec, std::span<const double> lambda);

// Density of m eigenangles on [-pi, pi]^m (unordered), with respect to
// Lebesgue measure: prod |e^{i t_l} - e^{i t_j}|^beta / (c (2 pi)^m).
LogValue log_density_fourier_angles(int m, int beta, std::span<const double> theta);

// X (n x m) for the elliptical kinds, S (m x m Hermitian) for Wishart, beta
// and generalised Wishart kinds.
LogValue log_density_matrix_variate(const MatrixVariateSpec& spec, const DMatrix& x_or_s);

// Eigenvalue density with its constants evaluated once.
class EigenvalueDensity {
 public:
  explicit EigenvalueDensity(const EnsembleSpec& spec);

  LogValue operator()(std::span<const double> lambda) const;
  // Same without order/support validation; for integrands. Returns 0 off
  // the joint support and for unordered input.
  double pdf_unchecked(std::span<const double> lambda) const;

  const EnsembleSpec& spec() const { return spec_; }
  double log_constant() const { return log_const_; }
  // Open interval containing every eigenvalue.
  Interval support() const { return support_; }

 private:
  double log_kernel(std::span<const double> lambda) const;
  EnsembleSpec spec_;
  double log_const_ = 0.0;
  Interval support_;
};

// Log normalising constants (closed forms except for the T-II ensemble,
// which integrates numerically for m <= 2).
double element_log_constant(const EnsembleSpec& spec);
double laguerre_log_constant(const EnsembleSpec& spec);
double eigenvalue_log_constant(const EnsembleSpec& spec);
Interval eigenvalue_support(const EnsembleSpec& spec);

// log of the ordered integral of prod_{i<j} (l_i - l_j)^beta prod w(l_i) for
// the T-II (w = (1+l^2)^{-beta(m+nu)/2}) and Gegenbauer-II
// (w = (1-l^2)^{beta(nu-m+1)/2-1}) ensembles. Gegenbauer-II uses the Selberg
// closed form; `numeric` forces quadrature (m <= 2).
double ss_ensemble_log_integral(const EnsembleSpec& spec, bool numeric = false);

}  // namespace rmx
