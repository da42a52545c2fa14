#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rmx::cli {

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  // Spec fields.
  std::string family = "hermite";
  std::string shape;  // "rectangular", "ensemble" or empty for the family default
  std::string kind;   // matrix-variate kind, empty when unused
  double beta = 1;
  int m = 1;
  std::optional<double> n;
  double nu = 1.0;
  double q = 0.0;
  std::string sigma_path, theta_path, mu_path;
  bool tridiagonal = false;
  // Run fields.
  std::optional<std::uint64_t> seed;
  long n_samples = 1;
  bool eigenvalues = false;
  std::string input_path;
  std::string output_path;
  Format format = Format::Csv;
  unsigned threads = 0;
  // verify
  std::string suite = "all";
  std::vector<int> betas, ms;
  std::vector<std::string> families;
  bool timings = false;
  bool list = false;
  // constants
  bool want_gamma = false, want_mvbeta = false, want_stiefel = false, want_fourier = false, want_tau = false,
       want_symvol = false;
  std::optional<double> a, b;
};

// Exit codes: 0 success, 1 runtime failure, 2 usage or domain error.
int cmd_sample(const RunConfig& c, std::ostream& out);
int cmd_density(const RunConfig& c, std::ostream& out);
int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& summary);
int cmd_constants(const RunConfig& c, std::ostream& out);

// Parses argv and dispatches; errors go to stderr.
int run(int argc, const char* const* argv);

}  // namespace rmx::cli
