#include <doctest.h>

#include <nlohmann/json.hpp>

#include "rmx/verify.hpp"

using namespace rmx;

namespace {

EnsembleSpec spec(Family f, int beta, int m, double n = 1, double nu = 1, double q = 0,
                  Shape shape = Shape::Rectangular) {
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

}  // namespace

TEST_CASE("report lines are stable JSON") {
  TestReport r;
  r.name = "x/y";
  r.status = Status::Fail;
  r.statistic = 0.5;
  r.threshold = 0.25;
  r.criterion = "a < b";
  r.n_samples = 10;
  r.seed = 3;
  r.wall_time = 1.5;
  r.detail = "observed 0.5, expected < 0.25";
  std::string line = to_json_line(r);
  CHECK(line.find("wall_time") == std::string::npos);
  CHECK(line.rfind("{\"name\":\"x/y\",\"status\":\"fail\"", 0) == 0);
  auto j = nlohmann::json::parse(line);
  CHECK(j["threshold"] == 0.25);
  CHECK(j["detail"] == r.detail);
  CHECK(nlohmann::json::parse(to_json_line(r, true))["wall_time"] == 1.5);

  r.informational = true;
  auto labels = nlohmann::json::parse(to_json_line(r))["labels"];
  CHECK(labels.size() == 2);
}

TEST_CASE("normalization examples") {
  RngStream rng(1);
  TestReport h = check_normalization(spec(Family::Hermite, 1, 2, 2), NormTarget::Eigenvalues, NormMethod::Quadrature,
                                     0, rng);
  CHECK(h.status == Status::Pass);
  CHECK(h.statistic < 1e-6);

  MatrixVariateSpec w = MatrixVariateSpec::standard(MatrixVariateKind::Wishart, spec(Family::Hermite, 1, 1, 3));
  CHECK(check_normalization(w).status == Status::Pass);

  for (int beta : {1, 2, 4}) {
    RngStream g(100 + beta);
    CHECK(check_normalization(spec(Family::Fourier, beta, 2, 2), NormTarget::FourierAngles, NormMethod::ImportanceMc,
                              200000, g)
              .status == Status::Pass);
  }
}

TEST_CASE("quadrature and Monte Carlo agree on an element density") {
  RngStream rng(4);
  EnsembleSpec t1 = spec(Family::TI, 1, 1, 2, 3.0);
  TestReport mc = check_normalization(t1, NormTarget::Element, NormMethod::ImportanceMc, 100000, rng);
  CHECK(mc.status == Status::Pass);
}

TEST_CASE("sampler examples") {
  RngStream rng(2);
  CHECK(check_sampler_density(spec(Family::Hermite, 2, 2, 2, 1, 0, Shape::Ensemble), 20000, 0.01, rng).status ==
        Status::Pass);
}

TEST_CASE("invariance examples") {
  RngStream rng(3);
  CHECK(check_invariance(spec(Family::TI, 2, 2, 2, 2.0), Functional::Trace, 5000, 0.01, rng).status ==
        Status::Pass);
  CHECK(check_invariance(spec(Family::GegenbauerII, 1, 2, 2, 3.0), Functional::LambdaMax, 5000, 0.01, rng).status ==
        Status::Pass);
}

TEST_CASE("the binned test rejects a wrong density") {
  RngStream rng(5);
  GofProblem p;
  p.dim = 1;
  p.draw = [](RngStream& g) { return std::array<double, 2>{g.uniform() * g.uniform(), 0.0}; };
  p.pdf = [](double, double) { return 1.0; };
  p.x_support = {0.0, 1.0};
  TestReport r = check_binned_gof("uniform", p, 20000, 0.01, rng);
  CHECK(r.status == Status::Fail);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("suite selection") {
  CHECK(is_known_suite("all"));
  CHECK(is_known_suite("jacobians"));
  CHECK(is_known_suite("jacobians/cholesky/*"));
  CHECK_FALSE(is_known_suite("nonsense"));

  SuiteFilter f;
  f.suite = "jacobians";
  f.betas = {2};
  f.ms = {3};
  auto cases = select_cases(f);
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) {
    CHECK(c.beta == 2);
    CHECK(c.m == 3);
  }
}

TEST_CASE("results do not depend on the thread count") {
  SuiteFilter f;
  f.suite = "samplers/eigenvalues/hermite/m=1/*";
  auto cases = select_cases(f);
  REQUIRE(cases.size() >= 2);
  auto one = run_cases(cases, 99, 1), many = run_cases(cases, 99, 3);
  REQUIRE(one.size() == many.size());
  for (size_t i = 0; i < one.size(); ++i) CHECK(to_json_line(one[i]) == to_json_line(many[i]));
  CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
}
