#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rmx/charts.hpp"
#include "rmx/ensemble.hpp"
#include "rmx/matrix_variate.hpp"
#include "rmx/quadrature.hpp"
#include "rmx/rng.hpp"

namespace rmx {

enum class Status { Pass, Fail, Skip };
std::string_view status_name(Status s);

struct TestReport {
  std::string name;
  Status status = Status::Skip;
  double statistic = 0.0;  // observed value of the criterion
  double threshold = 0.0;
  std::string criterion;   // e.g. "p_value > threshold"
  long n_samples = 0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
  std::string detail;      // observed vs expected on failure, reason on skip
  bool informational = false;  // reported, never fails a run
};

// One JSON object per line. wall_time is only written when `timings` is set,
// so that reports are reproducible byte for byte.
std::string to_json_line(const TestReport& r, bool timings = false);

// ---- checks ----

// Max relative error between the lemma's closed form and the FD oracle over
// n_points random points.
TestReport certify_jacobian(Lemma lemma, int m, int n, int beta, int n_points, RngStream& rng);

enum class NormMethod { Quadrature, ImportanceMc };

// What is integrated: eigenvalue density of `spec`, its element density, a
// Laguerre density, the Fourier angle density, or a scalar matrix-variate
// density.
enum class NormTarget { Eigenvalues, Element, FourierAngles };

TestReport check_normalization(const EnsembleSpec& spec, NormTarget target, NormMethod method, long budget,
                               RngStream& rng);

// Scalar (m = 1) matrix-variate density by quadrature.
TestReport check_normalization(const MatrixVariateSpec& spec);

// Mass of the ordered eigenvalue density (m <= 2) by quadrature.
double eigenvalue_mass(const EnsembleSpec& spec, double tol = 1e-10);

// Binned goodness of fit in chart coordinates (1 or 2 dims). The chart maps
// the sampled quantity into a rectangle on which `pdf` is the density.
struct GofProblem {
  int dim = 1;
  std::function<std::array<double, 2>(RngStream&)> draw;
  std::function<double(double, double)> pdf;
  Interval x_support;
  Interval y_support;
  // Compare shapes only (cell probabilities divided by their total).
  bool renormalize = false;
};

TestReport check_binned_gof(const std::string& name, const GofProblem& problem, long n_samples, double alpha,
                            RngStream& rng);

// Eigenvalues from `draw` (descending) against the density of
// `density_spec` (m <= 2), in the family's ordered chart.
GofProblem eigen_gof_problem(const EnsembleSpec& density_spec,
                             std::function<std::vector<double>(RngStream&)> draw, bool renormalize = false);

// Sampler against the eigenvalue density of spec (m <= 2).
TestReport check_sampler_density(const EnsembleSpec& spec, long n_samples, double alpha, RngStream& rng);

// Two-sample KS between independent draws of a and b.
TestReport check_two_sample(const std::function<double(RngStream&)>& a, const std::function<double(RngStream&)>& b,
                            long n_samples, double alpha, RngStream& rng);

enum class Functional { Trace, LambdaMax, Entry };
std::string_view functional_name(Functional f);

// Two-sample KS between functional(A) and functional(Q A P) (rectangular) or
// functional(U A U*) (ensemble) from independent draws.
TestReport check_invariance(const EnsembleSpec& spec, Functional functional, long n_samples, double alpha,
                            RngStream& rng);

// ---- suites ----

struct TestCase {
  std::string name;
  std::string suite;
  int beta = 0;  // 0: not tied to a beta
  int m = 0;
  std::string family;
  bool informational = false;
  std::function<TestReport(RngStream&)> run;
};

struct SuiteFilter {
  std::string suite = "all";  // suite name or glob over test names
  std::vector<int> betas;
  std::vector<int> ms;
  std::vector<std::string> families;
};

const std::vector<std::string>& suite_names();
// Suite name, "all", a single test name, or a glob over test names.
bool is_known_suite(const std::string& pattern);
std::vector<TestCase> select_cases(const SuiteFilter& filter);

// Runs the cases on `threads` workers. Each case draws from its own stream
// keyed by (seed, name), and results come back sorted by name, so output does
// not depend on the thread count.
std::vector<TestReport> run_cases(const std::vector<TestCase>& cases, std::uint64_t seed, unsigned threads);

// All registered cases (unfiltered).
std::vector<TestCase> all_cases();

}  // namespace rmx
