#include "rmx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <memory>
#include <thread>

#include <nlohmann/json.hpp>

#include "rmx/densities.hpp"
#include "rmx/errors.hpp"
#include "rmx/samplers.hpp"
#include "rmx/stats.hpp"

namespace rmx {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::string to_json_line(const TestReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = status_name(r.status);
  j["statistic"] = std::isfinite(r.statistic) ? nlohmann::ordered_json(r.statistic) : nlohmann::ordered_json(nullptr);
  j["threshold"] = r.threshold;
  j["criterion"] = r.criterion;
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  if (timings) j["wall_time"] = r.wall_time;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.informational) j["labels"] = {"conjectural", "informational"};
  return j.dump();
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

TestReport less_than(double observed, double threshold, std::string criterion) {
  TestReport r;
  r.statistic = observed;
  r.threshold = threshold;
  r.criterion = std::move(criterion);
  r.status = observed < threshold ? Status::Pass : Status::Fail;
  return r;
}

TestReport p_value_report(const TestStat& t, double alpha) {
  TestReport r;
  r.statistic = t.p_value;
  r.threshold = alpha;
  r.criterion = "p_value > threshold";
  r.status = t.p_value > alpha ? Status::Pass : Status::Fail;
  r.detail = "statistic " + fmt(t.statistic) + (t.dof > 0 ? ", dof " + std::to_string(t.dof) : "");
  return r;
}

TestReport skipped(std::string reason) {
  TestReport r;
  r.status = Status::Skip;
  r.detail = std::move(reason);
  return r;
}

}  // namespace

// ---- Jacobians ----

TestReport certify_jacobian(Lemma lemma, int m, int n, int beta, int n_points, RngStream& rng) {
  if (beta == 8) return skipped("no dense octonion algebra");
  const bool stiefel = lemma_uses_stiefel(lemma);
  const double threshold = stiefel ? 1e-4 : 1e-5;
  double worst = 0.0, worst_fd = 0.0, worst_cf = 0.0;
  for (int p = 0; p < n_points; ++p) {
    bool done = false;
    for (int attempt = 0; attempt < 10 && !done; ++attempt) {
      try {
        LemmaPoint pt = random_lemma_point(lemma, m, n, beta, rng);
        double fd = fd_jacobian_oracle(pt.chart, pt.chart.base);
        double cf = pt.closed_form_log - pt.excluded_log;
        double rel = std::abs(std::expm1(fd - cf));
        if (rel >= worst) {
          worst = rel;
          worst_fd = fd;
          worst_cf = cf;
        }
        done = true;
      } catch (const DegenerateError&) {
      }
    }
    if (!done) return skipped("degenerate points after 10 attempts");
  }
  TestReport r = less_than(worst, threshold, "max_rel_err < threshold");
  r.n_samples = n_points;
  if (r.status == Status::Fail) r.detail = "log|J| fd " + fmt(worst_fd) + " vs closed form " + fmt(worst_cf);
  return r;
}

// ---- ordered two-eigenvalue charts ----

namespace {

// Maps a rectangle (x, y) onto {l1 > l2} inside the family's support.
struct OrderedChart {
  Interval x, y;
  std::function<void(double, double, double&, double&, double&)> to_lambda;  // l1, l2, |J|
  std::function<std::array<double, 2>(double, double)> from_lambda;
};

OrderedChart polar_chart(double r_max) {
  OrderedChart c;
  c.x = {0.0, r_max};
  c.y = {-0.75 * std::numbers::pi, 0.25 * std::numbers::pi};
  c.to_lambda = [](double r, double phi, double& l1, double& l2, double& j) {
    l1 = r * std::cos(phi);
    l2 = r * std::sin(phi);
    j = r;
  };
  c.from_lambda = [](double l1, double l2) { return std::array<double, 2>{std::hypot(l1, l2), std::atan2(l2, l1)}; };
  return c;
}

// l2 in (lo, hi), l1 = l2 + t (top(l2) - l2) with top(l2) = hi or a - l2.
OrderedChart box_chart(double lo, double hi, bool simplex) {
  OrderedChart c;
  c.x = {lo, simplex ? 0.5 * hi : hi};
  c.y = {0.0, 1.0};
  c.to_lambda = [hi, simplex](double l2, double t, double& l1, double& out2, double& j) {
    double top = simplex ? hi - l2 : hi;
    j = top - l2;
    l1 = l2 + t * j;
    out2 = l2;
  };
  c.from_lambda = [hi, simplex](double l1, double l2) {
    double top = simplex ? hi - l2 : hi;
    return std::array<double, 2>{l2, (l1 - l2) / (top - l2)};
  };
  return c;
}

OrderedChart gap_chart() {
  OrderedChart c;
  c.x = {0.0, kInf};
  c.y = {0.0, kInf};
  c.to_lambda = [](double l2, double u, double& l1, double& out2, double& j) {
    l1 = l2 + u;
    out2 = l2;
    j = 1.0;
  };
  c.from_lambda = [](double l1, double l2) { return std::array<double, 2>{l2, l1 - l2}; };
  return c;
}

OrderedChart chart_for(const EnsembleSpec& s) {
  switch (s.family) {
    case Family::Hermite:
    case Family::TI:
    case Family::TII: return polar_chart(kInf);
    case Family::GegenbauerI: return polar_chart(1.0);
    case Family::GegenbauerII: return box_chart(-1.0, 1.0, false);
    case Family::Fourier: return box_chart(-std::numbers::pi, std::numbers::pi, false);
    case Family::Laguerre:
    case Family::TLaguerreI:
    case Family::TLaguerreII: return gap_chart();
    case Family::GegenbauerLaguerreI: return box_chart(0.0, 1.0, true);
    case Family::GegenbauerLaguerreII: return box_chart(0.0, 1.0, false);
  }
  return polar_chart(kInf);
}

std::function<double(double, double)> chart_pdf(const EigenvalueDensity& d, const OrderedChart& c) {
  return [&d, &c](double x, double y) {
    double l[2], j;
    c.to_lambda(x, y, l[0], l[1], j);
    return d.pdf_unchecked(std::span<const double>(l, 2)) * j;
  };
}

double eigen_mass(const EigenvalueDensity& d, double tol) {
  const EnsembleSpec& s = d.spec();
  if (s.m == 1) return integrate([&](double x) { return d.pdf_unchecked(std::span<const double>(&x, 1)); },
                                 d.support(), tol);
  if (s.m != 2) throw UnsupportedError("quadrature normalisation needs m <= 2");
  OrderedChart c = chart_for(s);
  return integrate_2d(chart_pdf(d, c), c.x, c.y, tol);
}

}  // namespace

// ---- normalisation ----

namespace {

TestReport quadrature_report(double mass) {
  TestReport r = less_than(std::abs(mass - 1.0), 1e-6, "|integral - 1| < threshold");
  r.detail = "integral " + fmt(mass);
  return r;
}

TestReport mc_report(const MeanEstimate& e, long n) {
  TestReport r;
  r.statistic = std::abs(e.mean - 1.0);
  r.threshold = 3.0 * e.se;
  r.criterion = "|estimate - 1| < 3 SE";
  r.n_samples = n;
  r.status = std::isfinite(e.mean) && r.statistic < r.threshold ? Status::Pass : Status::Fail;
  r.detail = "estimate " + fmt(e.mean) + " +- " + fmt(e.se);
  return r;
}

// Importance sampling of the element density: a heavier-tailed T-I law on
// unbounded supports, the uniform law on a containing Frobenius ball
// otherwise.
TestReport importance_element(const EnsembleSpec& spec, long budget, RngStream& rng) {
  EnsembleSpec prop = spec;
  double scale = 1.0;
  const bool bounded = spec.family == Family::GegenbauerI || spec.family == Family::GegenbauerII;
  if (bounded) {
    prop.family = Family::GegenbauerI;
    prop.q = 0.0;
    // Gegenbauer-II has operator norm < 1, hence Frobenius norm < sqrt(m).
    if (spec.family == Family::GegenbauerII) scale = std::sqrt(static_cast<double>(spec.m));
  } else {
    prop.family = Family::TI;
    prop.nu = spec.family == Family::TI ? std::min(1.0, 0.5 * spec.nu) : 1.0;
  }
  const bool rect = spec.shape == Shape::Rectangular;
  const int n = static_cast<int>(spec.n);
  const int dim = rect ? spec.beta * spec.m * n : HermitianMatrix::coordinate_count(spec.m, spec.beta);
  const double log_scale = dim * std::log(scale);
  std::vector<double> w(static_cast<size_t>(budget));
  for (long i = 0; i < budget; ++i) {
    RngStream sub = rng.substream(static_cast<std::uint64_t>(i));
    DMatrix a = rect ? sample_radial_family(prop, spec.m, n, sub) : sample_vs_ensemble(prop, sub).matrix();
    double lq = log_density_element(prop, a).value() - log_scale;
    DMatrix x = a;
    if (scale != 1.0) x *= scale;
    double lp = log_density_element(spec, x).value();
    w[i] = std::isfinite(lp) ? std::exp(lp - lq) : 0.0;
    if (!std::isfinite(w[i])) {
      TestReport r = skipped("");
      r.status = Status::Fail;
      r.detail = "divergent importance weight";
      return r;
    }
  }
  return mc_report(mean_with_se(w), budget);
}

TestReport fourier_mc(int m, int beta, long budget, RngStream& rng) {
  std::vector<double> w(static_cast<size_t>(budget));
  const double log_vol = m * std::log(2.0 * std::numbers::pi);
  std::vector<double> th(m);
  for (long i = 0; i < budget; ++i) {
    RngStream sub = rng.substream(static_cast<std::uint64_t>(i));
    for (int k = 0; k < m; ++k) th[k] = std::numbers::pi * (2.0 * sub.uniform() - 1.0);
    w[i] = std::exp(log_density_fourier_angles(m, beta, th).value() + log_vol);
  }
  return mc_report(mean_with_se(w), budget);
}

}  // namespace

TestReport check_normalization(const EnsembleSpec& spec, NormTarget target, NormMethod method, long budget,
                               RngStream& rng) {
  if (target == NormTarget::FourierAngles) return fourier_mc(spec.m, spec.beta, budget, rng);
  if (target == NormTarget::Eigenvalues) {
    if (method != NormMethod::Quadrature) throw UnsupportedError("eigenvalue densities use quadrature");
    EigenvalueDensity d(spec);
    return quadrature_report(eigen_mass(d, 1e-10));
  }
  if (method == NormMethod::ImportanceMc) return importance_element(spec, budget, rng);
  // One real coordinate: a scalar element or a 1 x 1 Laguerre matrix.
  if (spec.m != 1 || (!is_laguerre_family(spec.family) && (spec.beta != 1 || spec.n != 1)))
    throw UnsupportedError("element quadrature needs a single real coordinate");
  const Algebra alg = algebra_from_beta(spec.beta);
  Interval iv = is_laguerre_family(spec.family) ? eigenvalue_support(spec) : Interval{-kInf, kInf};
  double mass = integrate(
      [&](double x) {
        DMatrix a(alg, 1, 1);
        a(0, 0) = Scalar(x);
        return log_density_element(spec, a).exp();
      },
      iv);
  return quadrature_report(mass);
}

TestReport check_normalization(const MatrixVariateSpec& spec) {
  if (spec.m() != 1) throw UnsupportedError("matrix-variate quadrature needs m = 1");
  const bool herm = kind_is_hermitian(spec.kind);
  if (!herm && (spec.beta() != 1 || spec.n() != 1)) throw UnsupportedError("needs a single real coordinate");
  const Algebra alg = algebra_from_beta(spec.beta());
  Interval iv{-kInf, kInf};
  if (herm) iv = spec.kind == MatrixVariateKind::BetaI ? Interval{0.0, 1.0} : Interval{0.0, kInf};
  double mass = integrate(
      [&](double x) {
        DMatrix a(alg, 1, 1);
        a(0, 0) = Scalar(x);
        return log_density_matrix_variate(spec, a).exp();
      },
      iv);
  return quadrature_report(mass);
}

// ---- goodness of fit ----

TestReport check_binned_gof(const std::string& name, const GofProblem& p, long n_samples, double alpha,
                            RngStream& rng) {
  (void)name;
  constexpr long kPilot = 4000;
  const int bins_1d = 24, strips = 6, cells = 6;
  RngStream pilot_rng(rng.key(), 1);
  std::vector<std::array<double, 2>> pilot(kPilot);
  for (long i = 0; i < kPilot; ++i) {
    RngStream sub = pilot_rng.substream(static_cast<std::uint64_t>(i));
    pilot[i] = p.draw(sub);
  }
  // Cell layout: x strips at pilot quantiles, then y quantiles within each strip.
  std::vector<double> xs;
  for (const auto& v : pilot) xs.push_back(v[0]);
  std::vector<double> x_edges = quantile_edges(xs, p.dim == 1 ? bins_1d : strips);
  const int nx = static_cast<int>(x_edges.size()) + 1;
  std::vector<std::vector<double>> y_edges(nx);
  if (p.dim == 2) {
    std::vector<std::vector<double>> ys(nx);
    for (const auto& v : pilot) ys[bin_index(x_edges, v[0])].push_back(v[1]);
    for (int i = 0; i < nx; ++i) y_edges[i] = quantile_edges(ys[i], cells);
  }
  auto edge = [](const std::vector<double>& e, int k, Interval iv) {
    return std::pair<double, double>{k == 0 ? iv.lo : e[k - 1], k == static_cast<int>(e.size()) ? iv.hi : e[k]};
  };
  std::vector<int> offset(nx + 1, 0);
  for (int i = 0; i < nx; ++i) offset[i + 1] = offset[i] + static_cast<int>(y_edges[i].size()) + 1;
  const int total_cells = offset[nx];

  std::vector<double> prob(total_cells);
  for (int i = 0; i < nx; ++i) {
    auto [x0, x1] = edge(x_edges, i, p.x_support);
    if (p.dim == 1) {
      prob[i] = integrate([&](double x) { return p.pdf(x, 0.0); }, {x0, x1}, 1e-9);
      continue;
    }
    for (int k = 0; k <= static_cast<int>(y_edges[i].size()); ++k) {
      auto [y0, y1] = edge(y_edges[i], k, p.y_support);
      prob[offset[i] + k] = integrate_2d(p.pdf, {x0, x1}, {y0, y1}, 1e-8);
    }
  }
  double mass = 0.0;
  for (double v : prob) mass += v;
  if (p.renormalize)
    for (double& v : prob) v /= mass;

  std::vector<long> count(total_cells, 0);
  for (long s = 0; s < n_samples; ++s) {
    RngStream sub = rng.substream(static_cast<std::uint64_t>(s));
    auto v = p.draw(sub);
    int i = bin_index(x_edges, v[0]);
    count[offset[i] + (p.dim == 2 ? bin_index(y_edges[i], v[1]) : 0)]++;
  }
  TestReport r = p_value_report(chi_square_gof(count, prob, n_samples), alpha);
  r.n_samples = n_samples;
  r.detail += ", cells " + std::to_string(total_cells) + ", reference mass " + fmt(mass);
  return r;
}

TestReport check_sampler_density(const EnsembleSpec& spec, long n_samples, double alpha, RngStream& rng) {
  if (spec.m > 2) throw UnsupportedError("binned tests need m <= 2");
  auto d = std::make_shared<EigenvalueDensity>(spec);
  GofProblem p;
  p.dim = spec.m;
  if (spec.m == 1) {
    p.draw = [spec](RngStream& g) { return std::array<double, 2>{sample_eigenvalues(spec, g)[0], 0.0}; };
    p.pdf = [d](double x, double) { return d->pdf_unchecked(std::span<const double>(&x, 1)); };
    p.x_support = d->support();
  } else {
    auto c = std::make_shared<OrderedChart>(chart_for(spec));
    p.draw = [spec, c](RngStream& g) {
      std::vector<double> l = sample_eigenvalues(spec, g);
      return c->from_lambda(l[0], l[1]);
    };
    p.pdf = [d, c](double x, double y) {
      double l[2], j;
      c->to_lambda(x, y, l[0], l[1], j);
      return d->pdf_unchecked(std::span<const double>(l, 2)) * j;
    };
    p.x_support = c->x;
    p.y_support = c->y;
  }
  return check_binned_gof(spec.describe(), p, n_samples, alpha, rng);
}

GofProblem eigen_gof_problem(const EnsembleSpec& density_spec,
                             std::function<std::vector<double>(RngStream&)> draw_eigenvalues, bool renormalize) {
  auto d = std::make_shared<EigenvalueDensity>(density_spec);
  GofProblem p;
  p.dim = density_spec.m;
  p.renormalize = renormalize;
  if (p.dim == 1) {
    p.draw = [draw_eigenvalues](RngStream& g) { return std::array<double, 2>{draw_eigenvalues(g)[0], 0.0}; };
    p.pdf = [d](double x, double) { return d->pdf_unchecked(std::span<const double>(&x, 1)); };
    p.x_support = d->support();
    return p;
  }
  auto c = std::make_shared<OrderedChart>(chart_for(density_spec));
  p.draw = [draw_eigenvalues, c](RngStream& g) {
    std::vector<double> l = draw_eigenvalues(g);
    return c->from_lambda(l[0], l[1]);
  };
  p.pdf = [d, c](double x, double y) {
    double l[2], j;
    c->to_lambda(x, y, l[0], l[1], j);
    return d->pdf_unchecked(std::span<const double>(l, 2)) * j;
  };
  p.x_support = c->x;
  p.y_support = c->y;
  return p;
}

double eigenvalue_mass(const EnsembleSpec& spec, double tol) { return eigen_mass(EigenvalueDensity(spec), tol); }

// ---- invariance ----

std::string_view functional_name(Functional f) {
  switch (f) {
    case Functional::Trace: return "trace";
    case Functional::LambdaMax: return "lambda-max";
    case Functional::Entry: return "entry";
  }
  return "?";
}

TestReport check_two_sample(const std::function<double(RngStream&)>& a, const std::function<double(RngStream&)>& b,
                            long n_samples, double alpha, RngStream& rng) {
  std::vector<double> xa(n_samples), xb(n_samples);
  for (long i = 0; i < n_samples; ++i) {
    RngStream sa = rng.substream(static_cast<std::uint64_t>(i));
    RngStream sb = rng.substream(static_cast<std::uint64_t>(n_samples + i));
    xa[i] = a(sa);
    xb[i] = b(sb);
  }
  TestReport r = p_value_report(ks_two_sample(xa, xb), alpha);
  r.n_samples = 2 * n_samples;
  return r;
}

TestReport check_invariance(const EnsembleSpec& spec, Functional functional, long n_samples, double alpha,
                            RngStream& rng) {
  spec.validate();
  const bool rect = spec.shape == Shape::Rectangular;
  const int m = spec.m, n = static_cast<int>(spec.n), beta = spec.beta;
  std::function<DMatrix(RngStream&)> draw;
  if (!rect) {
    draw = [spec](RngStream& g) { return sample_vs_ensemble(spec, g).matrix(); };
  } else if (is_vector_spherical(spec.family)) {
    draw = [spec, m, n](RngStream& g) { return sample_radial_family(spec, m, n, g); };
  } else {
    const int nu = static_cast<int>(spec.nu);
    draw = [spec, m, n, nu](RngStream& g) { return std::get<DMatrix>(sample_quotient_family(spec, m, n, nu, g)); };
  }
  auto f = [functional, rect](const DMatrix& a) {
    switch (functional) {
      case Functional::Trace: return rect ? std::pow(frobenius_norm(a), 2) : trace(a).w;
      case Functional::LambdaMax:
        return rect ? hermitian_eigenvalues(gram(a)).front() : hermitian_eigenvalues(HermitianMatrix(a)).front();
      case Functional::Entry: return a(0, 0).w;
    }
    return 0.0;
  };
  auto plain = [&](RngStream& g) { return f(draw(g)); };
  auto rotated = [&](RngStream& g) {
    DMatrix a = draw(g);
    if (rect) {
      DMatrix q = sample_haar(n, beta, g), p = sample_haar(m, beta, g);
      return f(q * a * p);
    }
    DMatrix u = sample_haar(m, beta, g);
    return f(u * a * adjoint(u));
  };
  return check_two_sample(plain, rotated, n_samples, alpha, rng);
}

// ---- runner ----

std::vector<TestReport> run_cases(const std::vector<TestCase>& cases, std::uint64_t seed, unsigned threads) {
  std::vector<TestReport> out(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < cases.size(); i = next++) {
      const TestCase& c = cases[i];
      RngStream rng(seed, hash_name(c.name.c_str()));
      auto t0 = std::chrono::steady_clock::now();
      TestReport r;
      try {
        r = c.run(rng);
      } catch (const UnsupportedError& e) {
        r = skipped(e.what());
      } catch (const std::exception& e) {
        r = TestReport{};
        r.status = Status::Fail;
        r.detail = std::string("error: ") + e.what();
      }
      r.name = c.name;
      r.seed = seed;
      r.informational = c.informational;
      r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out[i] = std::move(r);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const TestReport& a, const TestReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace rmx
