#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rmx/jacobians.hpp"
#include "rmx/rng.hpp"

namespace rmx {

enum class Lemma {
  Linear,
  Congruence,
  DiagTriangular,
  Doolittle,
  Crout,
  Ldm,
  Cholesky,
  Ldl,
  Sqrt,
  Qr,
  Qdr,
  Polar,
  Svd,
  Spectral,
  WishartMap,
};

std::string_view lemma_name(Lemma l);
Lemma parse_lemma(std::string_view name);
const std::vector<Lemma>& all_lemmas();
// Charts with a Stiefel or unitary factor.
bool lemma_uses_stiefel(Lemma l);
// Rectangular lemmas use n; the rest ignore it.
bool lemma_is_rectangular(Lemma l);

// Perturbation H0 exp(Xi) restricted to the first m columns, with H0 an n x n
// unitary completion of the base point. Coordinates: for each column i the
// imaginary parts of Xi_ii (when kept), then Xi_ji for j > i.
class StiefelChart {
 public:
  StiefelChart(const DMatrix& base, bool keep_diagonal_phase);
  int dim() const;
  DMatrix at(std::span<const double> xi) const;
  const DMatrix& base() const { return base_; }

 private:
  DMatrix h0_, base_;
  int m_, n_;
  bool keep_diag_;
};

struct LemmaPoint {
  FactorizationChart chart;
  double closed_form_log = 0.0;
  // Global constant (2^{-m}, pi^tau) invisible to a local chart.
  double excluded_log = 0.0;
};

// Random well-conditioned point for the lemma at (m, n, beta).
LemmaPoint random_lemma_point(Lemma lemma, int m, int n, int beta, RngStream& rng);

}  // namespace rmx
