#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <memory>
#include <sstream>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "rmx/densities.hpp"
#include "rmx/errors.hpp"
#include "rmx/radial.hpp"
#include "rmx/samplers.hpp"
#include "rmx/special.hpp"
#include "rmx/verify.hpp"

namespace rmx {

namespace {

constexpr double kSignificance = 0.01;

struct Proto {
  TestCase base;
  bool statistical = false;
  std::function<TestReport(RngStream&, double)> fn;
};

using Suite = std::vector<Proto>;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

EnsembleSpec make(Family f, int beta, int m, double n = 1.0, double nu = 1.0, double q = 0.0,
                  Shape shape = Shape::Ensemble) {
  EnsembleSpec s;
  s.family = f;
  s.beta = beta;
  s.m = m;
  s.n = n;
  s.nu = nu;
  s.q = q;
  s.shape = shape;
  return s;
}

// Bonferroni across the statistical cases of a suite; the divisor is the
// size of the full catalog so that filtering never changes a verdict.
std::vector<TestCase> finish(Suite suite) {
  long k = std::count_if(suite.begin(), suite.end(), [](const Proto& p) { return p.statistical; });
  const double alpha = kSignificance / std::max(1L, k);
  std::vector<TestCase> out;
  for (auto& p : suite) {
    TestCase c = std::move(p.base);
    auto fn = std::move(p.fn);
    c.run = [fn, alpha](RngStream& rng) { return fn(rng, alpha); };
    out.push_back(std::move(c));
  }
  return out;
}

void add(Suite& s, std::string suite, std::string name, int beta, int m, std::string family, bool statistical,
         std::function<TestReport(RngStream&, double)> fn, bool informational = false) {
  Proto p;
  p.base.suite = suite;
  p.base.name = suite + "/" + name;
  p.base.beta = beta;
  p.base.m = m;
  p.base.family = std::move(family);
  p.base.informational = informational;
  p.statistical = statistical;
  p.fn = std::move(fn);
  s.push_back(std::move(p));
}

// ---- jacobians ----

std::vector<TestCase> jacobian_suite() {
  Suite s;
  for (Lemma l : all_lemmas())
    for (int m : {2, 3})
      for (int beta : {1, 2, 4}) {
        const bool rect = lemma_is_rectangular(l);
        const int n = rect ? m + 1 : m;
        std::string name = std::string(lemma_name(l)) + "/m=" + std::to_string(m) +
                           (rect ? "/n=" + std::to_string(n) : "") + "/beta=" + std::to_string(beta);
        add(s, "jacobians", name, beta, m, std::string(lemma_name(l)), false,
            [=](RngStream& rng, double) { return certify_jacobian(l, m, n, beta, 20, rng); });
      }
  // Square case of the rectangular lemmas.
  for (Lemma l : all_lemmas()) {
    if (!lemma_is_rectangular(l)) continue;
    for (int beta : {1, 2, 4}) {
      std::string name = std::string(lemma_name(l)) + "/m=2/n=2/beta=" + std::to_string(beta);
      add(s, "jacobians", name, beta, 2, std::string(lemma_name(l)), false,
          [=](RngStream& rng, double) { return certify_jacobian(l, 2, 2, beta, 20, rng); });
    }
  }
  add(s, "jacobians", "spectral/m=2/beta=8", 8, 2, "spectral", false,
      [](RngStream& rng, double) { return certify_jacobian(Lemma::Spectral, 2, 2, 8, 20, rng); });
  return finish(std::move(s));
}

// ---- normalization ----

std::vector<EnsembleSpec> eigen_catalog(int beta, int m) {
  const double n = m + 1.0, nu = m + 2.0;
  std::vector<EnsembleSpec> v = {
      make(Family::Hermite, beta, m),
      make(Family::TI, beta, m, 1.0, 3.0),
      make(Family::GegenbauerI, beta, m, 1.0, 1.0, 0.5),
      make(Family::Laguerre, beta, m, n),
      make(Family::Laguerre, beta, m, m - 0.5),
      make(Family::TLaguerreI, beta, m, n, 3.0),
      make(Family::GegenbauerLaguerreI, beta, m, n, 1.0, 0.5),
      make(Family::TLaguerreII, beta, m, n, nu),
      make(Family::GegenbauerLaguerreII, beta, m, n, nu),
      make(Family::GegenbauerLaguerreII, beta, m, m + 0.5, m + 0.25),
      make(Family::GegenbauerII, beta, m, 1.0, m + 0.5),
  };
  if (m == 1) v.push_back(make(Family::TII, beta, m, 1.0, 2.0));
  return v;
}

std::string spec_name(const EnsembleSpec& s) {
  std::string out = std::string(family_name(s.family)) + "/m=" + std::to_string(s.m);
  if (is_laguerre_family(s.family) || s.shape == Shape::Rectangular) out += "/n=" + num(s.n);
  switch (s.family) {
    case Family::TI:
    case Family::TII:
    case Family::GegenbauerII:
    case Family::TLaguerreI:
    case Family::TLaguerreII:
    case Family::GegenbauerLaguerreII: out += "/nu=" + num(s.nu); break;
    case Family::GegenbauerI:
    case Family::GegenbauerLaguerreI: out += "/q=" + num(s.q); break;
    default: break;
  }
  return out + "/beta=" + std::to_string(s.beta);
}

MatrixVariateSpec scalar_variate(MatrixVariateKind kind, int beta, double n, double nu, double sigma) {
  EnsembleSpec core = make(Family::Hermite, beta, 1, n, nu, 0.0, Shape::Rectangular);
  MatrixVariateSpec mv = MatrixVariateSpec::standard(kind, core);
  mv.sigma = HermitianMatrix(sigma * DMatrix::identity(algebra_from_beta(beta), 1));
  return mv;
}

std::vector<std::pair<std::string, MatrixVariateSpec>> scalar_variates() {
  std::vector<std::pair<std::string, MatrixVariateSpec>> v;
  for (int beta : {1, 2, 4})
    v.emplace_back("wishart/m=1/n=3/sigma=2/beta=" + std::to_string(beta),
                   scalar_variate(MatrixVariateKind::Wishart, beta, 3, 1, 2.0));
  for (int beta : {1, 2}) {
    v.emplace_back("beta1/m=1/n=2/nu=3/beta=" + std::to_string(beta),
                   scalar_variate(MatrixVariateKind::BetaI, beta, 2, 3, 1.0));
    v.emplace_back("beta2/m=1/n=2/nu=3/beta=" + std::to_string(beta),
                   scalar_variate(MatrixVariateKind::BetaII, beta, 2, 3, 1.0));
  }
  MatrixVariateSpec normal = scalar_variate(MatrixVariateKind::Normal, 1, 1, 1, 2.0);
  normal.mu(0, 0) = Scalar(0.3);
  normal.theta = HermitianMatrix(1.5 * DMatrix::identity(Algebra::Real, 1));
  v.emplace_back("normal/m=1/n=1/beta=1", normal);
  MatrixVariateSpec sgw = scalar_variate(MatrixVariateKind::SGW, 1, 2, 3, 1.5);
  sgw.core.family = Family::TI;
  v.emplace_back("sgw-t1/m=1/n=2/nu=3/beta=1", sgw);
  return v;
}

std::vector<TestCase> normalization_suite() {
  Suite s;
  for (int beta : {1, 2, 4})
    for (int m : {1, 2})
      for (const EnsembleSpec& spec : eigen_catalog(beta, m))
        add(s, "normalization", "eigenvalues/" + spec_name(spec), beta, m, std::string(family_name(spec.family)),
            false, [spec](RngStream& rng, double) {
              TestReport r = check_normalization(spec, NormTarget::Eigenvalues, NormMethod::Quadrature, 0, rng);
              return r;
            });
  for (int m : {2, 3})
    for (int beta : {1, 2, 4})
      add(s, "normalization", "fourier/m=" + std::to_string(m) + "/beta=" + std::to_string(beta), beta, m,
          "fourier", false, [m, beta](RngStream& rng, double) {
            return check_normalization(make(Family::Fourier, beta, m), NormTarget::FourierAngles,
                                       NormMethod::ImportanceMc, 1000000, rng);
          });
  for (auto& [name, mv] : scalar_variates())
    add(s, "normalization", "matrix-variate/" + name, mv.beta(), 1, std::string(kind_name(mv.kind)), false,
        [mv](RngStream&, double) { return check_normalization(mv); });
  // Element densities, importance sampling.
  std::vector<EnsembleSpec> mc = {
      make(Family::Hermite, 1, 3), make(Family::Hermite, 2, 3), make(Family::TI, 1, 3, 1.0, 3.0),
      make(Family::GegenbauerI, 2, 3, 1.0, 1.0, 0.5),
      make(Family::TI, 2, 2, 3.0, 2.0, 0.0, Shape::Rectangular),
      make(Family::TII, 1, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
      make(Family::TII, 2, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
      make(Family::GegenbauerII, 1, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
      make(Family::GegenbauerII, 1, 2, 2.0, 2.5, 0.0, Shape::Ensemble),
      make(Family::TII, 1, 2, 2.0, 2.0, 0.0, Shape::Ensemble),
  };
  for (const EnsembleSpec& spec : mc) {
    std::string shape = spec.shape == Shape::Rectangular ? "rectangular/" : "ensemble/";
    add(s, "normalization", "element/" + shape + spec_name(spec), spec.beta, spec.m,
        std::string(family_name(spec.family)), false, [spec](RngStream& rng, double) {
          return check_normalization(spec, NormTarget::Element, NormMethod::ImportanceMc, 200000, rng);
        });
  }
  return finish(std::move(s));
}

// ---- samplers ----

GofProblem scalar_problem(std::function<double(RngStream&)> draw, std::function<double(double)> pdf, Interval iv) {
  GofProblem p;
  p.dim = 1;
  p.draw = [draw](RngStream& g) { return std::array<double, 2>{draw(g), 0.0}; };
  p.pdf = [pdf](double x, double) { return pdf(x); };
  p.x_support = iv;
  return p;
}

// Density of u = tr A*A for a vector-spherical law on R^N:
// c_N pi^{N/2} / Gamma(N/2) u^{N/2-1} h(u).
std::function<double(double)> radial_trace_pdf(const EnsembleSpec& spec, int dim) {
  RadialKernel k = RadialKernel::for_spec(spec, dim);
  double lc = k.log_constant().value() + 0.5 * dim * std::log(std::numbers::pi) - lgamma_pos(0.5 * dim);
  return [k, lc, dim](double u) {
    if (!(u > 0)) return 0.0;
    double lh = k.log_h(u);
    return std::isfinite(lh) ? std::exp(lc + (0.5 * dim - 1.0) * std::log(u) + lh) : 0.0;
  };
}

std::vector<TestCase> sampler_suite() {
  Suite s;
  const long kN = 100000;
  auto gof = [](GofProblem p, long n) {
    return [p, n](RngStream& rng, double alpha) { return check_binned_gof("", p, n, alpha, rng); };
  };
  for (int beta : {1, 2, 4})
    for (int m : {1, 2}) {
      const double n = m + 1.0, nu = m + 2.0;
      const std::string tail = "/beta=" + std::to_string(beta);
      std::vector<EnsembleSpec> direct = {
          make(Family::Hermite, beta, m),
          make(Family::TI, beta, m, 1.0, 3.0),
          make(Family::GegenbauerI, beta, m, 1.0, 1.0, 0.5),
          make(Family::Laguerre, beta, m, n),
          make(Family::TLaguerreI, beta, m, n, 3.0),
          make(Family::GegenbauerLaguerreI, beta, m, n, 1.0, 0.5),
          make(Family::TLaguerreII, beta, m, n, nu),
          make(Family::GegenbauerLaguerreII, beta, m, n, nu),
          make(Family::Fourier, beta, m),
      };
      for (const EnsembleSpec& spec : direct)
        add(s, "samplers", "eigenvalues/" + spec_name(spec), beta, m, std::string(family_name(spec.family)), true,
            [spec, kN](RngStream& rng, double alpha) { return check_sampler_density(spec, kN, alpha, rng); });

      // Rectangular quotient laws through A* A.
      for (Family f : {Family::TII, Family::GegenbauerII}) {
        EnsembleSpec rect = make(f, beta, m, n, nu, 0.0, Shape::Rectangular);
        EnsembleSpec target =
            make(f == Family::TII ? Family::TLaguerreII : Family::GegenbauerLaguerreII, beta, m, n, nu);
        auto draw = [rect, m, n, nu](RngStream& g) {
          DMatrix t = std::get<DMatrix>(sample_quotient_family(rect, m, static_cast<int>(n), static_cast<int>(nu), g));
          return hermitian_eigenvalues(gram(t));
        };
        add(s, "samplers", "gram/" + spec_name(rect), beta, m, std::string(family_name(f)), true,
            gof(eigen_gof_problem(target, draw), kN));
      }

      // Rectangular vector-spherical laws through tr A* A.
      for (Family f : {Family::Hermite, Family::TI, Family::GegenbauerI}) {
        EnsembleSpec rect = make(f, beta, m, n, 3.0, 0.5, Shape::Rectangular);
        const int dim = static_cast<int>(beta * m * n);
        auto draw = [rect, m, n](RngStream& g) {
          return std::pow(frobenius_norm(sample_radial_family(rect, m, static_cast<int>(n), g)), 2);
        };
        Interval iv{0.0, f == Family::GegenbauerI ? 1.0 : kInf};
        add(s, "samplers", "trace/" + spec_name(rect), beta, m, std::string(family_name(f)), true,
            gof(scalar_problem(draw, radial_trace_pdf(rect, dim), iv), kN));
      }

      if (m == 2) {
        EnsembleSpec herm = make(Family::Hermite, beta, 2);
        add(s, "samplers", "tridiagonal/hermite/m=2" + tail, beta, 2, "hermite", true,
            gof(eigen_gof_problem(herm,
                                  [beta](RngStream& g) {
                                    return sample_tridiagonal_beta(TridiagonalFamily::Hermite, 2, beta, 0, g);
                                  }),
                kN));
        EnsembleSpec lag = make(Family::Laguerre, beta, 2, 3.0);
        add(s, "samplers", "tridiagonal/laguerre/m=2/n=3" + tail, beta, 2, "laguerre", true,
            gof(eigen_gof_problem(lag,
                                  [beta](RngStream& g) {
                                    return sample_tridiagonal_beta(TridiagonalFamily::Laguerre, 2, beta, 3.0, g);
                                  }),
                kN));
      }
    }
  for (auto& [name, mv] : scalar_variates()) {
    const Algebra alg = algebra_from_beta(mv.beta());
    auto draw = [mv](RngStream& g) {
      MatrixSample x = sample_matrix_variate(mv, g);
      return std::holds_alternative<DMatrix>(x) ? std::get<DMatrix>(x)(0, 0).w
                                                : std::get<HermitianMatrix>(x).matrix()(0, 0).w;
    };
    auto pdf = [mv, alg](double x) {
      DMatrix a(alg, 1, 1);
      a(0, 0) = Scalar(x);
      return log_density_matrix_variate(mv, a).exp();
    };
    Interval iv{-kInf, kInf};
    if (kind_is_hermitian(mv.kind)) iv = mv.kind == MatrixVariateKind::BetaI ? Interval{0.0, 1.0} : Interval{0.0, kInf};
    add(s, "samplers", "matrix-variate/" + name, mv.beta(), 1, std::string(kind_name(mv.kind)), true,
        gof(scalar_problem(draw, pdf, iv), kN));
  }
  return finish(std::move(s));
}

// ---- invariance ----

std::vector<TestCase> invariance_suite() {
  Suite s;
  const long kN = 10000;
  for (int beta : {1, 2, 4}) {
    std::vector<EnsembleSpec> specs = {
        make(Family::Hermite, beta, 2, 3.0, 1.0, 0.0, Shape::Rectangular),
        make(Family::TI, beta, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
        make(Family::GegenbauerI, beta, 2, 3.0, 1.0, 0.5, Shape::Rectangular),
        make(Family::TII, beta, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
        make(Family::GegenbauerII, beta, 2, 3.0, 3.0, 0.0, Shape::Rectangular),
        make(Family::Hermite, beta, 2),
        make(Family::TI, beta, 2, 1.0, 3.0),
        make(Family::GegenbauerI, beta, 2, 1.0, 1.0, 0.5),
    };
    for (const EnsembleSpec& spec : specs)
      for (Functional f : {Functional::Trace, Functional::LambdaMax, Functional::Entry}) {
        std::string shape = spec.shape == Shape::Rectangular ? "rectangular/" : "ensemble/";
        add(s, "invariance", shape + spec_name(spec) + "/" + std::string(functional_name(f)), beta, 2,
            std::string(family_name(spec.family)), true,
            [spec, f, kN](RngStream& rng, double alpha) { return check_invariance(spec, f, kN, alpha, rng); });
      }
    // Normalised eigenvalues l_1 / |l| do not depend on the radial law.
    for (int m : {2, 3})
      for (Family other : {Family::TI, Family::GegenbauerI}) {
        EnsembleSpec a = make(Family::Hermite, beta, m), b = make(other, beta, m, 1.0, 3.0, 0.5);
        auto delta = [](const EnsembleSpec& spec) {
          return [spec](RngStream& g) {
            std::vector<double> l = sample_eigenvalues(spec, g);
            double r = 0.0;
            for (double x : l) r += x * x;
            return l[0] / std::sqrt(r);
          };
        };
        std::string name = "normalized-eigenvalue/hermite-vs-" + std::string(family_name(other)) +
                           "/m=" + std::to_string(m) + "/beta=" + std::to_string(beta);
        add(s, "invariance", name, beta, m, std::string(family_name(other)), true,
            [da = delta(a), db = delta(b), kN](RngStream& rng, double alpha) {
              return check_two_sample(da, db, kN, alpha, rng);
            });
      }
  }
  return finish(std::move(s));
}

// ---- scalar reductions ----

TestReport pointwise(const std::function<double(double)>& ours, const std::function<double(double)>& ref, double lo,
                     double hi) {
  double worst = 0.0, at = lo;
  for (int k = 0; k < 100; ++k) {
    double x = lo + (hi - lo) * (k + 0.5) / 100.0;
    double a = ours(x), b = ref(x);
    double rel = std::abs(a - b) / std::max(std::abs(b), 1e-300);
    if (!(rel <= worst)) {
      worst = rel;
      at = x;
    }
  }
  TestReport r;
  r.statistic = worst;
  r.threshold = 1e-10;
  r.criterion = "max_rel_err < threshold";
  r.n_samples = 100;
  r.status = worst < 1e-10 ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) r.detail = "worst at x = " + num(at);
  return r;
}

std::function<double(double)> element_pdf(const EnsembleSpec& spec) {
  return [spec](double x) {
    DMatrix a(algebra_from_beta(spec.beta), 1, 1);
    a(0, 0) = Scalar(x);
    return log_density_element(spec, a).exp();
  };
}

std::function<double(double)> eigen_pdf(const EnsembleSpec& spec) {
  auto d = std::make_shared<EigenvalueDensity>(spec);
  return [d](double x) { return (*d)(std::span<const double>(&x, 1)).exp(); };
}

std::function<double(double)> variate_pdf(const MatrixVariateSpec& mv) {
  return [mv](double x) {
    DMatrix a(algebra_from_beta(mv.beta()), 1, 1);
    a(0, 0) = Scalar(x);
    return log_density_matrix_variate(mv, a).exp();
  };
}

std::vector<TestCase> reduction_suite() {
  namespace bm = boost::math;
  Suite s;
  auto red = [&s](std::string name, std::string family, std::function<double(double)> ours,
                  std::function<double(double)> ref, double lo, double hi) {
    add(s, "reductions", name, 1, 1, std::move(family), false,
        [ours, ref, lo, hi](RngStream&, double) { return pointwise(ours, ref, lo, hi); });
  };
  const Shape R = Shape::Rectangular;
  bm::normal_distribution<> std_normal;
  red("normal/element", "hermite", element_pdf(make(Family::Hermite, 1, 1, 1, 1, 0, R)),
      [=](double x) { return bm::pdf(std_normal, x); }, -6, 6);
  red("normal/eigenvalue", "hermite", eigen_pdf(make(Family::Hermite, 1, 1)),
      [=](double x) { return bm::pdf(std_normal, x); }, -6, 6);
  // a = t / sqrt(nu) for t ~ Student-t(nu).
  const double nu = 3.0;
  auto student = [=](double a) {
    return std::sqrt(nu) * bm::pdf(bm::students_t_distribution<>(nu), std::sqrt(nu) * a);
  };
  red("student-t/t2", "t2", element_pdf(make(Family::TII, 1, 1, 1, nu, 0, R)), student, -8, 8);
  red("student-t/t1", "t1", element_pdf(make(Family::TI, 1, 1, 1, nu, 0, R)), student, -8, 8);
  // a^2 ~ Beta(1/2, b) for the symmetric laws on (-1, 1).
  auto sym_beta = [](double b) {
    return [b](double a) { return std::abs(a) * bm::pdf(bm::beta_distribution<>(0.5, b), a * a); };
  };
  red("symmetric-beta/gegenbauer1", "gegenbauer1", element_pdf(make(Family::GegenbauerI, 1, 1, 1, 1, 0.5, R)),
      sym_beta(1.5), -0.99, 0.99);
  red("symmetric-beta/gegenbauer2", "gegenbauer2", element_pdf(make(Family::GegenbauerII, 1, 1, 1, nu, 0, R)),
      sym_beta(0.5 * nu), -0.99, 0.99);
  red("chi-square/laguerre", "laguerre", element_pdf(make(Family::Laguerre, 1, 1, 3.0)),
      [](double x) { return bm::pdf(bm::chi_squared_distribution<>(3.0), x); }, 0.01, 20);
  red("gamma/laguerre-complex", "laguerre", element_pdf(make(Family::Laguerre, 2, 1, 3.0)),
      [](double x) { return bm::pdf(bm::gamma_distribution<>(3.0, 1.0), x); }, 0.01, 20);
  red("beta/jacobi", "jacobi", eigen_pdf(make(Family::GegenbauerLaguerreII, 1, 1, 3.0, 4.0)),
      [](double x) { return bm::pdf(bm::beta_distribution<>(1.5, 2.0), x); }, 0.0, 1.0);
  // s = (n / nu) F for F ~ F(n, nu).
  auto fisher = [](double n, double v) {
    return [n, v](double x) { return v / n * bm::pdf(bm::fisher_f_distribution<>(n, v), v * x / n); };
  };
  red("f/modified-jacobi", "modified-jacobi", element_pdf(make(Family::TLaguerreII, 1, 1, 3.0, 4.0)),
      fisher(3.0, 4.0), 0.01, 20);
  red("f/t-laguerre1", "t-laguerre1", element_pdf(make(Family::TLaguerreI, 1, 1, 3.0, 4.0)), fisher(3.0, 4.0),
      0.01, 20);
  red("beta/gegenbauer-laguerre1", "gegenbauer-laguerre1",
      element_pdf(make(Family::GegenbauerLaguerreI, 1, 1, 3.0, 1.0, 0.5)),
      [](double x) { return bm::pdf(bm::beta_distribution<>(1.5, 1.5), x); }, 0.0, 1.0);
  red("uniform-angle/fourier", "fourier",
      [](double t) { return log_density_fourier_angles(1, 2, std::span<const double>(&t, 1)).exp(); },
      [](double) { return 0.5 / std::numbers::pi; }, -std::numbers::pi, std::numbers::pi);
  red("chi-square/wishart", "wishart", variate_pdf(scalar_variate(MatrixVariateKind::Wishart, 1, 3, 1, 2.0)),
      [](double x) { return 0.5 * bm::pdf(bm::chi_squared_distribution<>(3.0), 0.5 * x); }, 0.01, 30);
  MatrixVariateSpec normal = scalar_variate(MatrixVariateKind::Normal, 1, 1, 1, 2.0);
  normal.mu(0, 0) = Scalar(0.3);
  normal.theta = HermitianMatrix(1.5 * DMatrix::identity(Algebra::Real, 1));
  red("normal/matrix-variate", "normal", variate_pdf(normal),
      [](double x) { return bm::pdf(bm::normal_distribution<>(0.3, std::sqrt(3.0)), x); }, -6, 6);
  red("beta/beta1", "beta1", variate_pdf(scalar_variate(MatrixVariateKind::BetaI, 1, 2, 3, 1.0)),
      [](double x) { return bm::pdf(bm::beta_distribution<>(1.0, 1.5), x); }, 0.0, 1.0);
  red("f/beta2", "beta2", variate_pdf(scalar_variate(MatrixVariateKind::BetaII, 1, 2, 3, 1.0)), fisher(2.0, 3.0),
      0.01, 20);
  return finish(std::move(s));
}

// ---- beta = 8 ----

std::vector<TestCase> conjecture_suite() {
  Suite s;
  EnsembleSpec oct = make(Family::Hermite, 8, 2);
  GofProblem p = eigen_gof_problem(
      oct, [](RngStream& g) { return sample_tridiagonal_beta(TridiagonalFamily::Hermite, 2, 8.0, 0, g); }, true);
  add(
      s, "conjecture", "tridiagonal/hermite/m=2/beta=8/shape", 8, 2, "hermite", false,
      [p](RngStream& rng, double) { return check_binned_gof("", p, 100000, kSignificance, rng); }, true);
  add(
      s, "conjecture", "eigenvalues/hermite/m=2/beta=8/mass", 8, 2, "hermite", false,
      [oct](RngStream&, double) {
        double mass = eigenvalue_mass(oct);
        TestReport r;
        r.statistic = std::abs(mass - 1.0);
        r.threshold = 1e-6;
        r.criterion = "|integral - 1| < threshold";
        r.status = r.statistic < r.threshold ? Status::Pass : Status::Fail;
        r.detail = "integral " + num(mass);
        return r;
      },
      true);
  return finish(std::move(s));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jacobians",  "normalization", "samplers",
                                                 "invariance", "reductions",    "conjecture"};
  return names;
}

bool is_known_suite(const std::string& pattern) {
  if (pattern == "all") return true;
  if (std::find(suite_names().begin(), suite_names().end(), pattern) != suite_names().end()) return true;
  if (pattern.find_first_of("*?[") != std::string::npos) return true;
  for (const auto& c : all_cases())
    if (c.name == pattern) return true;
  return false;
}

std::vector<TestCase> all_cases() {
  std::vector<TestCase> out;
  for (auto* build : {jacobian_suite, normalization_suite, sampler_suite, invariance_suite, reduction_suite,
                      conjecture_suite}) {
    auto v = build();
    for (auto& c : v) out.push_back(std::move(c));
  }
  return out;
}

std::vector<TestCase> select_cases(const SuiteFilter& f) {
  std::vector<TestCase> out;
  const bool by_suite = f.suite == "all" ||
                        std::find(suite_names().begin(), suite_names().end(), f.suite) != suite_names().end();
  for (auto& c : all_cases()) {
    if (by_suite) {
      if (f.suite != "all" && c.suite != f.suite) continue;
    } else if (fnmatch(f.suite.c_str(), c.name.c_str(), 0) != 0) {
      continue;
    }
    if (!f.betas.empty() && c.beta != 0 && std::find(f.betas.begin(), f.betas.end(), c.beta) == f.betas.end())
      continue;
    if (!f.ms.empty() && c.m != 0 && std::find(f.ms.begin(), f.ms.end(), c.m) == f.ms.end()) continue;
    if (!f.families.empty() && std::find(f.families.begin(), f.families.end(), c.family) == f.families.end())
      continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rmx
