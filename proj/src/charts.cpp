#include "rmx/charts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rmx/samplers.hpp"
#include "rmx/special.hpp"

namespace rmx {

namespace {

struct LemmaInfo {
  Lemma lemma;
  std::string_view name;
  bool stiefel;
  bool rectangular;
};

constexpr std::array<LemmaInfo, 15> kLemmas{{
    {Lemma::Linear, "linear", false, true},
    {Lemma::Congruence, "congruence", false, false},
    {Lemma::DiagTriangular, "diag-triangular", false, false},
    {Lemma::Doolittle, "lu-doolittle", false, false},
    {Lemma::Crout, "lu-crout", false, false},
    {Lemma::Ldm, "ldm", false, false},
    {Lemma::Cholesky, "cholesky", false, false},
    {Lemma::Ldl, "ldl", false, false},
    {Lemma::Sqrt, "sqrt", false, false},
    {Lemma::Qr, "qr", true, true},
    {Lemma::Qdr, "qdr", true, true},
    {Lemma::Polar, "polar", true, true},
    {Lemma::Svd, "svd", true, true},
    {Lemma::Spectral, "spectral", true, false},
    {Lemma::WishartMap, "wishart-map", true, true},
}};

const LemmaInfo& info(Lemma l) {
  for (const auto& i : kLemmas)
    if (i.lemma == l) return i;
  throw Error("unknown lemma");
}

// ---- coordinate packing ----

// Reads beta components into a Scalar.
Scalar read_scalar(std::span<const double> x, size_t& p, int beta) {
  Scalar s;
  for (int k = 0; k < beta; ++k) s[k] = x[p++];
  return s;
}

void write_scalar(std::vector<double>& out, const Scalar& s, int beta) {
  for (int k = 0; k < beta; ++k) out.push_back(s[k]);
}

enum class Tri { StrictLower, Lower, StrictUpper, Upper, UpperRealDiag };

// Packs a triangular pattern row by row.
void pack(std::vector<double>& out, const DMatrix& a, Tri t) {
  const int m = a.rows(), b = a.beta();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool take = (t == Tri::StrictLower && j < i) || (t == Tri::Lower && j <= i) ||
                  (t == Tri::StrictUpper && j > i) || ((t == Tri::Upper || t == Tri::UpperRealDiag) && j >= i);
      if (!take) continue;
      if (t == Tri::UpperRealDiag && i == j) out.push_back(a(i, i).w);
      else write_scalar(out, a(i, j), b);
    }
}

DMatrix unpack(std::span<const double> x, size_t& p, Algebra alg, int m, Tri t) {
  DMatrix a(alg, m, m);
  const int b = beta_of(alg);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool take = (t == Tri::StrictLower && j < i) || (t == Tri::Lower && j <= i) ||
                  (t == Tri::StrictUpper && j > i) || ((t == Tri::Upper || t == Tri::UpperRealDiag) && j >= i);
      if (!take) continue;
      if (t == Tri::UpperRealDiag && i == j) a(i, i) = x[p++];
      else a(i, j) = read_scalar(x, p, b);
    }
  return a;
}

void append(std::vector<double>& out, const std::vector<double>& v) { out.insert(out.end(), v.begin(), v.end()); }

std::vector<double> read_reals(std::span<const double> x, size_t& p, int count) {
  std::vector<double> v(x.begin() + p, x.begin() + p + count);
  p += count;
  return v;
}

// ---- random factor data ----

Scalar random_unit(int beta, RngStream& rng) {
  Scalar s;
  double n = 0.0;
  while (n < 1e-3) {
    for (int k = 0; k < beta; ++k) s[k] = rng.normal();
    n = s.abs();
  }
  return s / n;
}

// Modulus in (0.6, 2) with a random direction in the algebra.
Scalar random_pivot(int beta, RngStream& rng) { return (0.6 + 1.4 * rng.uniform()) * random_unit(beta, rng); }

// Descending values in (lo, hi) with relative gaps of at least 0.1.
std::vector<double> random_spectrum(int m, double lo, double hi, RngStream& rng) {
  for (;;) {
    std::vector<double> v(m);
    for (auto& x : v) x = lo + (hi - lo) * rng.uniform();
    std::sort(v.rbegin(), v.rend());
    bool ok = true;
    for (int i = 1; i < m; ++i) ok = ok && v[i - 1] - v[i] > 0.1 * (hi - lo) / m;
    if (ok) return v;
  }
}

DMatrix random_well_conditioned(Algebra alg, int n, RngStream& rng) {
  DMatrix a = sample_gaussian(alg, n, n, 0.4, rng);
  for (int i = 0; i < n; ++i) a(i, i) += 1.5;
  return a;
}

HermitianMatrix random_pd(Algebra alg, const std::vector<double>& d, RngStream& rng) {
  DMatrix w = sample_haar(static_cast<int>(d.size()), beta_of(alg), rng);
  return HermitianMatrix(w * diagonal_matrix(alg, d) * adjoint(w), 1e-8);
}

DMatrix strict_part(Algebra alg, int m, Tri t, double sd, RngStream& rng) {
  DMatrix g = sample_gaussian(alg, m, m, sd, rng);
  DMatrix out(alg, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((t == Tri::StrictLower && j < i) || (t == Tri::StrictUpper && j > i)) out(i, j) = g(i, j);
  return out;
}

DMatrix unit_diagonal(DMatrix a) {
  for (int i = 0; i < a.rows(); ++i) a(i, i) = 1.0;
  return a;
}

std::vector<double> hcoords(const DMatrix& s) { return HermitianMatrix(s, 1e-6).coordinates(); }

}  // namespace

std::string_view lemma_name(Lemma l) { return info(l).name; }

Lemma parse_lemma(std::string_view name) {
  for (const auto& i : kLemmas)
    if (i.name == name) return i.lemma;
  throw DomainError("lemma", "unknown lemma '" + std::string(name) + "'");
}

const std::vector<Lemma>& all_lemmas() {
  static const std::vector<Lemma> all = [] {
    std::vector<Lemma> v;
    for (const auto& i : kLemmas) v.push_back(i.lemma);
    return v;
  }();
  return all;
}

bool lemma_uses_stiefel(Lemma l) { return info(l).stiefel; }
bool lemma_is_rectangular(Lemma l) { return info(l).rectangular; }

// ---- Stiefel chart ----

StiefelChart::StiefelChart(const DMatrix& base, bool keep_diagonal_phase)
    : base_(base), m_(base.cols()), n_(base.rows()), keep_diag_(keep_diagonal_phase) {
  require_matrix_algebra(base.algebra());
  if (m_ > n_) throw DimensionError("Stiefel chart needs rows >= cols");
  // Complete the base to a unitary; the deterministic filler is generic.
  DMatrix full(base.algebra(), n_, n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      if (c < m_) full(r, c) = base(r, c);
      else full(r, c) = Scalar(std::sin(1.0 + 3.7 * r + 1.3 * c), std::cos(2.0 * r - c), 0.3 * r, 0.1 * c);
    }
  if (base.beta() < 4)
    for (int r = 0; r < n_; ++r)
      for (int c = m_; c < n_; ++c) {
        Scalar& s = full(r, c);
        if (base.beta() == 1) s = Scalar(s.w);
        else s = Scalar(s.w, s.x);
      }
  h0_ = qr(full).q;
}

int StiefelChart::dim() const {
  const int b = base_.beta();
  int d = 0;
  for (int i = 0; i < m_; ++i) d += (keep_diag_ ? b - 1 : 0) + b * (n_ - 1 - i);
  return d;
}

DMatrix StiefelChart::at(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != dim()) throw DimensionError("Stiefel chart coordinate count mismatch");
  const int b = base_.beta();
  DMatrix skew(base_.algebra(), n_, n_);
  size_t p = 0;
  for (int i = 0; i < m_; ++i) {
    if (keep_diag_) {
      Scalar d;
      for (int k = 1; k < b; ++k) d[k] = xi[p++];
      skew(i, i) = d;
    }
    for (int j = i + 1; j < n_; ++j) {
      Scalar v = read_scalar(xi, p, b);
      skew(j, i) = v;
      skew(i, j) = -v.conj();
    }
  }
  return (h0_ * matrix_exp(skew)).columns(0, m_);
}

// ---- lemma points ----

LemmaPoint random_lemma_point(Lemma lemma, int m, int n, int beta, RngStream& rng) {
  const Algebra alg = algebra_from_beta(beta);
  require_matrix_algebra(alg);
  if (m < 1) throw DomainError("m", "must be at least 1");
  if (lemma_is_rectangular(lemma) && n < m) throw DomainError("n", "must be at least m");
  if (!lemma_is_rectangular(lemma)) n = m;

  LemmaPoint pt;
  FactorizationChart& ch = pt.chart;
  ch.name = std::string(lemma_name(lemma));
  ch.beta = beta;
  ch.m = m;
  ch.n = n;
  const int herm_dim = HermitianMatrix::coordinate_count(m, beta);

  switch (lemma) {
    case Lemma::Linear: {
      DMatrix a = random_well_conditioned(alg, n, rng), b = random_well_conditioned(alg, m, rng);
      ch.base = sample_gaussian(alg, n, m, 1.0, rng).coordinates();
      ch.reconstruct = [=](std::span<const double> x) {
        return (a * DMatrix::from_coordinates(alg, n, m, x) * b).coordinates();
      };
      ch.output_dim = beta * m * n;
      ch.gauge = "none";
      pt.closed_form_log = logjac_linear(a, b);
      break;
    }
    case Lemma::Congruence: {
      DMatrix a = random_well_conditioned(alg, m, rng);
      ch.base = random_pd(alg, random_spectrum(m, 0.5, 3.0, rng), rng).coordinates();
      ch.reconstruct = [=](std::span<const double> x) {
        DMatrix s = HermitianMatrix::from_coordinates(alg, m, x).matrix();
        return hcoords(a * s * adjoint(a));
      };
      ch.output_dim = herm_dim;
      ch.gauge = "none";
      pt.closed_form_log = logjac_congruence(a);
      break;
    }
    case Lemma::DiagTriangular: {
      std::vector<double> babs;
      for (int i = 0; i < m; ++i) {
        Scalar b = random_pivot(beta, rng);
        babs.push_back(b.abs());
        write_scalar(ch.base, b, beta);
      }
      pack(ch.base, strict_part(alg, m, Tri::StrictUpper, 1.0, rng), Tri::StrictUpper);
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = 0;
        DMatrix bm(alg, m, m);
        for (int i = 0; i < m; ++i) bm(i, i) = read_scalar(x, p, beta);
        DMatrix g = unit_diagonal(unpack(x, p, alg, m, Tri::StrictUpper));
        std::vector<double> out;
        pack(out, bm * g, Tri::Upper);
        return out;
      };
      ch.output_dim = beta * m * (m + 1) / 2;
      ch.gauge = "G unit upper triangular";
      pt.closed_form_log = logjac_diag_triangular(babs, beta);
      break;
    }
    case Lemma::Doolittle:
    case Lemma::Crout: {
      const bool doolittle = lemma == Lemma::Doolittle;
      DMatrix lower = strict_part(alg, m, Tri::StrictLower, 0.7, rng);
      DMatrix upper = strict_part(alg, m, Tri::StrictUpper, 0.7, rng);
      DMatrix& with_diag = doolittle ? upper : lower;
      std::vector<double> dabs;
      for (int i = 0; i < m; ++i) {
        with_diag(i, i) = random_pivot(beta, rng);
        dabs.push_back(with_diag(i, i).abs());
      }
      pack(ch.base, lower, doolittle ? Tri::StrictLower : Tri::Lower);
      pack(ch.base, upper, doolittle ? Tri::Upper : Tri::StrictUpper);
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = 0;
        DMatrix l = unpack(x, p, alg, m, doolittle ? Tri::StrictLower : Tri::Lower);
        DMatrix u = unpack(x, p, alg, m, doolittle ? Tri::Upper : Tri::StrictUpper);
        if (doolittle) l = unit_diagonal(l);
        else u = unit_diagonal(u);
        return (l * u).coordinates();
      };
      ch.output_dim = beta * m * m;
      ch.gauge = doolittle ? "Delta unit lower triangular" : "Upsilon unit upper triangular";
      pt.closed_form_log = logjac_lu(dabs, beta, doolittle ? LuVariant::Doolittle : LuVariant::Crout);
      break;
    }
    case Lemma::Ldm: {
      pack(ch.base, strict_part(alg, m, Tri::StrictLower, 0.7, rng), Tri::StrictLower);
      std::vector<double> pabs;
      for (int i = 0; i < m; ++i) {
        Scalar p = random_pivot(beta, rng);
        pabs.push_back(p.abs());
        write_scalar(ch.base, p, beta);
      }
      pack(ch.base, strict_part(alg, m, Tri::StrictUpper, 0.7, rng), Tri::StrictUpper);
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = 0;
        DMatrix psi = unit_diagonal(unpack(x, p, alg, m, Tri::StrictLower));
        DMatrix pi(alg, m, m);
        for (int i = 0; i < m; ++i) pi(i, i) = read_scalar(x, p, beta);
        DMatrix xi = unit_diagonal(unpack(x, p, alg, m, Tri::StrictUpper));
        return (psi * pi * xi).coordinates();
      };
      ch.output_dim = beta * m * m;
      ch.gauge = "Psi, Xi unit triangular";
      pt.closed_form_log = logjac_lu(pabs, beta, LuVariant::Ldm);
      break;
    }
    case Lemma::Cholesky: {
      DMatrix t = strict_part(alg, m, Tri::StrictUpper, 0.7, rng);
      std::vector<double> diag;
      for (int i = 0; i < m; ++i) {
        t(i, i) = 0.6 + 1.4 * rng.uniform();
        diag.push_back(t(i, i).w);
      }
      pack(ch.base, t, Tri::UpperRealDiag);
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = 0;
        DMatrix tt = unpack(x, p, alg, m, Tri::UpperRealDiag);
        return hcoords(adjoint(tt) * tt);
      };
      ch.output_dim = herm_dim;
      ch.gauge = "T upper triangular with real positive diagonal";
      pt.closed_form_log = logjac_cholesky(diag, beta);
      break;
    }
    case Lemma::Ldl: {
      pack(ch.base, strict_part(alg, m, Tri::StrictUpper, 0.7, rng), Tri::StrictUpper);
      std::vector<double> o = random_spectrum(m, 0.5, 3.0, rng);
      append(ch.base, o);
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = 0;
        DMatrix omega = unit_diagonal(unpack(x, p, alg, m, Tri::StrictUpper));
        DMatrix od = diagonal_matrix(alg, read_reals(x, p, m));
        return hcoords(adjoint(omega) * od * omega);
      };
      ch.output_dim = herm_dim;
      ch.gauge = "Omega unit upper triangular";
      pt.closed_form_log = logjac_ldl(o, beta);
      break;
    }
    case Lemma::Sqrt: {
      std::vector<double> d = random_spectrum(m, 0.5, 3.0, rng);
      ch.base = random_pd(alg, d, rng).coordinates();
      ch.reconstruct = [=](std::span<const double> x) {
        DMatrix r = HermitianMatrix::from_coordinates(alg, m, x).matrix();
        return hcoords(r * r);
      };
      ch.output_dim = herm_dim;
      ch.gauge = "R positive definite";
      pt.closed_form_log = logjac_sqrt(d, beta);
      break;
    }
    case Lemma::Qr:
    case Lemma::Qdr: {
      StiefelChart h(sample_haar(n, beta, rng).columns(0, m), true);
      append(ch.base, std::vector<double>(h.dim(), 0.0));
      const bool modified = lemma == Lemma::Qdr;
      std::vector<double> diag;
      if (modified) {
        diag = random_spectrum(m, 0.6, 2.5, rng);
        append(ch.base, diag);
        pack(ch.base, strict_part(alg, m, Tri::StrictUpper, 0.7, rng), Tri::StrictUpper);
      } else {
        DMatrix t = strict_part(alg, m, Tri::StrictUpper, 0.7, rng);
        for (int i = 0; i < m; ++i) {
          t(i, i) = 0.6 + 1.9 * rng.uniform();
          diag.push_back(t(i, i).w);
        }
        pack(ch.base, t, Tri::UpperRealDiag);
      }
      const int hd = h.dim();
      ch.reconstruct = [=](std::span<const double> x) {
        size_t p = hd;
        DMatrix t;
        if (modified) {
          DMatrix nd = diagonal_matrix(alg, read_reals(x, p, m));
          t = nd * unit_diagonal(unpack(x, p, alg, m, Tri::StrictUpper));
        } else {
          t = unpack(x, p, alg, m, Tri::UpperRealDiag);
        }
        return (h.at(x.subspan(0, hd)) * t).coordinates();
      };
      ch.output_dim = beta * m * n;
      ch.gauge = "H1 exponential chart with diagonal phases; T real positive diagonal";
      if (modified) {
        pt.closed_form_log = logjac_qdr(diag, n, beta);
        pt.excluded_log = -m * std::numbers::ln2;
      } else {
        pt.closed_form_log = logjac_qr(diag, n, beta);
      }
      break;
    }
    case Lemma::Polar:
    case Lemma::WishartMap: {
      StiefelChart h(sample_haar(n, beta, rng).columns(0, m), true);
      append(ch.base, std::vector<double>(h.dim(), 0.0));
      std::vector<double> d = random_spectrum(m, 0.6, 2.5, rng);
      HermitianMatrix r = random_pd(alg, d, rng);
      const bool wishart = lemma == Lemma::WishartMap;
      if (wishart) {
        HermitianMatrix s(r.matrix() * r.matrix(), 1e-8);
        append(ch.base, s.coordinates());
        pt.closed_form_log = logjac_wishart_map(s, n);
      } else {
        append(ch.base, r.coordinates());
        pt.closed_form_log = logjac_polar(d, n, beta);
      }
      const int hd = h.dim();
      ch.reconstruct = [=](std::span<const double> x) {
        HermitianMatrix s = HermitianMatrix::from_coordinates(alg, m, x.subspan(hd));
        DMatrix rr = wishart ? pd_sqrt(s).matrix() : s.matrix();
        return (h.at(x.subspan(0, hd)) * rr).coordinates();
      };
      ch.output_dim = beta * m * n;
      ch.gauge = wishart ? "V1 exponential chart; S positive definite" : "P1 exponential chart; R positive definite";
      break;
    }
    case Lemma::Svd: {
      StiefelChart v(sample_haar(n, beta, rng).columns(0, m), true);
      StiefelChart w(sample_haar(m, beta, rng), false);
      std::vector<double> d = random_spectrum(m, 0.6, 2.5, rng);
      append(ch.base, std::vector<double>(v.dim(), 0.0));
      append(ch.base, d);
      append(ch.base, std::vector<double>(w.dim(), 0.0));
      const int vd = v.dim(), wd = w.dim();
      ch.reconstruct = [=](std::span<const double> x) {
        DMatrix dm = diagonal_matrix(alg, x.subspan(vd, m));
        return (v.at(x.subspan(0, vd)) * dm * adjoint(w.at(x.subspan(vd + m, wd)))).coordinates();
      };
      ch.output_dim = beta * m * n;
      ch.gauge = "V1 exponential chart with phases; W exponential chart with zero diagonal";
      pt.closed_form_log = logjac_svd(d, n, beta);
      pt.excluded_log = -m * std::numbers::ln2 + tau(beta, m) * std::log(std::numbers::pi);
      break;
    }
    case Lemma::Spectral: {
      StiefelChart w(sample_haar(m, beta, rng), false);
      std::vector<double> lambda = random_spectrum(m, 0.5, 3.0, rng);
      append(ch.base, std::vector<double>(w.dim(), 0.0));
      append(ch.base, lambda);
      const int wd = w.dim();
      ch.reconstruct = [=](std::span<const double> x) {
        DMatrix wm = w.at(x.subspan(0, wd));
        return hcoords(wm * diagonal_matrix(alg, x.subspan(wd, m)) * adjoint(wm));
      };
      ch.output_dim = herm_dim;
      ch.gauge = "W exponential chart with zero diagonal; descending eigenvalues";
      pt.closed_form_log = logjac_spectral(lambda, beta);
      pt.excluded_log = -m * std::numbers::ln2 + tau(beta, m) * std::log(std::numbers::pi);
      break;
    }
  }
  return pt;
}

}  // namespace rmx
