#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "rmx/errors.hpp"

using namespace rmx::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    out.push_back(line);
  }
  return out;
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) v.push_back(std::stod(field));
  return v;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("rmx_test_" + name); }

int run_args(std::vector<const char*> args) {
  args.insert(args.begin(), "rmx");
  return run(static_cast<int>(args.size()), args.data());
}

}  // namespace

TEST_CASE("sample eigenvalues: shape and order") {
  RunConfig c;
  c.family = "hermite";
  c.beta = 2;
  c.m = 3;
  c.n_samples = 100;
  c.seed = 7;
  c.eigenvalues = true;
  std::ostringstream out;
  REQUIRE(cmd_sample(c, out) == 0);
  auto rows = data_lines(out.str());
  REQUIRE(rows.size() == 100u);
  for (const auto& r : rows) {
    auto v = parse_row(r);
    REQUIRE(v.size() == 3u);
    CHECK(v[0] > v[1]);
    CHECK(v[1] > v[2]);
  }
  CHECK(out.str().find("# seed=7") != std::string::npos);

  std::ostringstream again;
  cmd_sample(c, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("sample then density round trip") {
  struct Case {
    std::string family, kind;
    double beta;
    int m;
    double n, nu, q;
  };
  for (const Case& k : std::vector<Case>{{"hermite", "", 1, 2, 3, 1, 0},
                                         {"t1", "", 2, 2, 3, 2.5, 0},
                                         {"gegenbauer1", "", 4, 2, 2, 1, 0.5},
                                         {"laguerre", "", 2, 2, 4, 1, 0},
                                         {"jacobi", "", 1, 2, 3, 4, 0},
                                         {"hermite", "wishart", 2, 2, 4, 1, 0}}) {
    CAPTURE(k.family);
    CAPTURE(k.kind);
    RunConfig c;
    c.family = k.family;
    c.kind = k.kind;
    c.beta = k.beta;
    c.m = k.m;
    c.n = k.n;
    c.nu = k.nu;
    c.q = k.q;
    c.seed = 3;
    c.n_samples = 25;
    fs::path samples = temp_file("roundtrip.csv");
    c.output_path = samples.string();
    std::ostringstream unused;
    REQUIRE(cmd_sample(c, unused) == 0);

    c.output_path.clear();
    c.input_path = samples.string();
    std::ostringstream dens;
    REQUIRE(cmd_density(c, dens) == 0);
    auto lines = data_lines(dens.str());
    CHECK(lines.size() == 25u);
    for (const auto& l : lines) CHECK(std::isfinite(std::stod(l)));
    fs::remove(samples);
  }
}

TEST_CASE("density examples") {
  fs::path in = temp_file("density.csv");
  RunConfig c;
  c.input_path = in.string();

  std::ofstream(in) << "0.0\n";
  c.family = "hermite";
  std::ostringstream a;
  cmd_density(c, a);
  CHECK(std::stod(data_lines(a.str()).at(0)) == doctest::Approx(-0.918939).epsilon(1e-6));

  std::ofstream(in) << "2.0\n";
  c.kind = "wishart";
  c.n = 2;
  std::ostringstream b;
  cmd_density(c, b);
  CHECK(std::stod(data_lines(b.str()).at(0)) == doctest::Approx(-1.0 - std::log(2.0)).epsilon(1e-12));

  std::ofstream(in) << "0.9,0.6\n";
  c.kind.clear();
  c.family = "gegenbauer1";
  c.q = 0.5;
  std::ostringstream g;
  cmd_density(c, g);
  CHECK(data_lines(g.str()).at(0) == "-inf");

  std::ofstream(in) << "0.1\n0.2,0.3\n";
  c.family = "hermite";
  c.q = 0;
  c.n = 1;
  std::ostringstream bad;
  try {
    cmd_density(c, bad);
    FAIL("expected an error");
  } catch (const rmx::Error& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  fs::remove(in);
}

TEST_CASE("exit codes") {
  CHECK(run_args({"sample", "--family", "gegenbauer1", "--q", "-2", "--seed", "1"}) == 2);
  CHECK(run_args({"verify", "--suite", "nonsense", "--seed", "1"}) == 2);
  CHECK(run_args({"verify", "--suite", "jacobians"}) == 2);
  CHECK(run_args({"frobnicate"}) == 2);
  CHECK(run_args({"constants", "--tau", "--beta", "8", "--m", "3"}) == 0);
}

TEST_CASE("constants") {
  RunConfig c;
  c.want_gamma = true;
  c.m = 2;
  c.beta = 2;
  c.a = 2;
  std::ostringstream out;
  cmd_constants(c, out);
  CHECK(out.str().find("1.1447298858494") != std::string::npos);

  RunConfig t;
  t.want_tau = true;
  t.beta = 8;
  t.m = 3;
  std::ostringstream tau;
  cmd_constants(t, tau);
  CHECK(tau.str().find("-12") != std::string::npos);
}

TEST_CASE("verify writes one JSON line per test") {
  RunConfig c;
  c.suite = "jacobians";
  c.betas = {1};
  c.ms = {2};
  c.seed = 5;
  std::ostringstream out, summary;
  CHECK(cmd_verify(c, out, summary) == 0);
  std::istringstream in(out.str());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    CHECK(line.front() == '{');
    ++n;
  }
  CHECK(n > 10);
  CHECK(summary.str().find("0 failed") != std::string::npos);
}
