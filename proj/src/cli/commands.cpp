#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmx/densities.hpp"
#include "rmx/errors.hpp"
#include "rmx/samplers.hpp"
#include "rmx/special.hpp"
#include "rmx/verify.hpp"
#include "rmx/version.hpp"

namespace rmx::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---- CSV ----

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

bool parse_double(const std::string& s, double& v) {
  std::string t = s;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) return false;
  char* end = nullptr;
  v = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

// Numeric rows of a CSV file; '#' comments and a non-numeric header are
// skipped. Each row keeps its 1-based data row index.
std::vector<std::vector<double>> read_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  long index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw DimensionError("row " + std::to_string(index + 1) + ": non-numeric field");
    }
    first = false;
    ++index;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> read_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_rows(in);
}

DMatrix read_matrix(const std::string& path, Algebra alg, int rows, int cols, const char* field) {
  auto data = read_rows_file(path);
  const int b = beta_of(alg);
  if (static_cast<int>(data.size()) != rows)
    throw DomainError(field, "expected " + std::to_string(rows) + " rows in '" + path + "'");
  std::vector<double> coords;
  for (const auto& r : data) {
    if (static_cast<int>(r.size()) != cols * b)
      throw DomainError(field, "expected " + std::to_string(cols * b) + " values per row in '" + path + "'");
    coords.insert(coords.end(), r.begin(), r.end());
  }
  return DMatrix::from_coordinates(alg, rows, cols, coords);
}

// ---- specs ----

int integer_beta(double beta) {
  if (beta != std::floor(beta)) throw DomainError("beta", "must be 1, 2, 4 or 8");
  algebra_from_beta(static_cast<int>(beta));
  return static_cast<int>(beta);
}

EnsembleSpec build_spec(const RunConfig& c) {
  EnsembleSpec s;
  s.family = parse_family(c.family);
  s.beta = integer_beta(c.beta);
  s.m = c.m;
  s.n = c.n.value_or(c.m);
  s.nu = c.nu;
  s.q = c.q;
  if (c.shape == "rectangular") s.shape = Shape::Rectangular;
  else if (c.shape == "ensemble") s.shape = Shape::Ensemble;
  else if (c.shape.empty()) s.shape = c.n ? Shape::Rectangular : Shape::Ensemble;
  else throw DomainError("shape", "must be 'rectangular' or 'ensemble'");
  if (!c.kind.empty()) s.shape = Shape::Rectangular;
  s.validate();
  return s;
}

MatrixVariateSpec build_variate(const RunConfig& c, const EnsembleSpec& core) {
  MatrixVariateSpec mv = MatrixVariateSpec::standard(parse_kind(c.kind), core);
  const Algebra alg = algebra_from_beta(core.beta);
  const int m = core.m, n = mv.n();
  if (!c.sigma_path.empty()) mv.sigma = HermitianMatrix(read_matrix(c.sigma_path, alg, m, m, "sigma"));
  if (!c.theta_path.empty()) mv.theta = HermitianMatrix(read_matrix(c.theta_path, alg, n, n, "theta"));
  if (!c.mu_path.empty()) mv.mu = read_matrix(c.mu_path, alg, n, m, "mu");
  mv.validate();
  return mv;
}

std::vector<double> full_coordinates(const HermitianMatrix& s) { return s.matrix().coordinates(); }

std::vector<std::string> matrix_columns(const char* prefix, int rows, int cols, int beta) {
  static const char* basis[] = {"1", "i", "j", "k"};
  std::vector<std::string> out;
  for (int r = 1; r <= rows; ++r)
    for (int k = 1; k <= cols; ++k)
      for (int b = 0; b < beta; ++b)
        out.push_back(std::string(prefix) + "_" + std::to_string(r) + "_" + std::to_string(k) + "_" + basis[b]);
  return out;
}

std::vector<std::string> eigen_columns(int m, const char* prefix = "lambda") {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(std::string(prefix) + "_" + std::to_string(i));
  return out;
}

struct SamplePlan {
  std::function<std::vector<double>(RngStream&)> draw;
  std::vector<std::string> columns;
  std::string layout;
  std::string spec;
  std::string model;
};

SamplePlan plan_sample(const RunConfig& c) {
  SamplePlan p;
  if (c.tridiagonal) {
    if (!(c.beta > 0)) throw DomainError("beta", "must be positive");
    if (c.m < 1) throw DomainError("m", "must be at least 1");
    const std::string fam(family_name(parse_family(c.family)));
    TridiagonalFamily tf;
    if (fam == "hermite") tf = TridiagonalFamily::Hermite;
    else if (fam == "laguerre") tf = TridiagonalFamily::Laguerre;
    else throw DomainError("family", "tridiagonal models exist for hermite and laguerre only");
    const double n = c.n.value_or(c.m);
    if (tf == TridiagonalFamily::Laguerre && !(n > c.m - 1)) throw DomainError("n", "must exceed m - 1");
    const int m = c.m;
    const double beta = c.beta;
    p.draw = [tf, m, beta, n](RngStream& g) { return sample_tridiagonal_beta(tf, m, beta, n, g); };
    p.columns = eigen_columns(m);
    p.layout = "eigenvalues, descending";
    p.spec = "family=" + fam + ";beta=" + fmt17(beta) + ";m=" + std::to_string(m) +
             (tf == TridiagonalFamily::Laguerre ? ";n=" + fmt17(n) : "");
    p.model = beta == 1 || beta == 2 || beta == 4 ? "tridiagonal" : "tridiagonal (extrapolated beta)";
    return p;
  }
  EnsembleSpec s = build_spec(c);
  const int m = s.m, beta = s.beta;
  const Algebra alg = algebra_from_beta(beta);
  p.spec = s.describe();
  p.model = "dense";
  const bool eig = c.eigenvalues;
  auto hermitian_out = [eig](const HermitianMatrix& h) {
    return eig ? hermitian_eigenvalues(h) : full_coordinates(h);
  };
  auto set_layout = [&](bool hermitian, int rows, int cols) {
    if (eig) {
      p.columns = eigen_columns(m);
      p.layout = hermitian ? "eigenvalues, descending" : "eigenvalues of A*A, descending";
    } else {
      p.columns = matrix_columns(hermitian ? "s" : "a", rows, cols, beta);
      p.layout = std::string(hermitian ? "Hermitian " : "") + std::to_string(rows) + " x " + std::to_string(cols) +
                 " matrix, row major, " + std::to_string(beta) + " real components per entry (1, i, j, k)";
    }
  };
  if (!c.kind.empty()) {
    MatrixVariateSpec mv = build_variate(c, s);
    const bool herm = kind_is_hermitian(mv.kind);
    p.spec = "kind=" + std::string(kind_name(mv.kind)) + ";" + p.spec;
    set_layout(herm, herm ? m : mv.n(), m);
    p.draw = [mv, eig, hermitian_out](RngStream& g) {
      MatrixSample x = sample_matrix_variate(mv, g);
      if (auto* h = std::get_if<HermitianMatrix>(&x)) return hermitian_out(*h);
      const DMatrix& a = std::get<DMatrix>(x);
      return eig ? hermitian_eigenvalues(gram(a)) : a.coordinates();
    };
    return p;
  }
  if (s.family == Family::Fourier) {
    p.columns = eigen_columns(m, "theta");
    p.layout = "eigenangles in (-pi, pi], descending";
    p.draw = [m, beta](RngStream& g) { return sample_fourier(m, beta, g); };
    return p;
  }
  if (is_laguerre_family(s.family)) {
    if (s.n != std::floor(s.n)) throw DomainError("n", "sampling needs integer n");
    const int n = static_cast<int>(s.n);
    set_layout(true, m, m);
    p.draw = [s, m, n, hermitian_out](RngStream& g) { return hermitian_out(sample_laguerre(s, m, n, g)); };
    return p;
  }
  if (s.shape == Shape::Rectangular) {
    if (s.n != std::floor(s.n)) throw DomainError("n", "sampling needs integer n");
    const int n = static_cast<int>(s.n);
    set_layout(false, n, m);
    std::function<DMatrix(RngStream&)> draw;
    if (is_vector_spherical(s.family)) {
      draw = [s, m, n](RngStream& g) { return sample_radial_family(s, m, n, g); };
    } else {
      if (s.nu != std::floor(s.nu)) throw DomainError("nu", "quotient sampling needs integer nu");
      const int nu = static_cast<int>(s.nu);
      draw = [s, m, n, nu](RngStream& g) { return std::get<DMatrix>(sample_quotient_family(s, m, n, nu, g)); };
    }
    p.draw = [draw, eig](RngStream& g) {
      DMatrix a = draw(g);
      return eig ? hermitian_eigenvalues(gram(a)) : a.coordinates();
    };
    return p;
  }
  set_layout(true, m, m);
  (void)alg;
  if (!is_vector_spherical(s.family))
    throw UnsupportedError(std::string(family_name(s.family)) + " has no Hermitian ensemble sampler; use --n for the rectangular law");
  p.draw = [s, hermitian_out](RngStream& g) { return hermitian_out(sample_vs_ensemble(s, g)); };
  return p;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw Error("cannot write '" + path + "'");
  return file;
}

}  // namespace

// ---- commands ----

int cmd_sample(const RunConfig& c, std::ostream& out) {
  if (c.n_samples < 0) throw DomainError("n-samples", "must be non-negative");
  SamplePlan p = plan_sample(c);
  const std::uint64_t seed = c.seed ? *c.seed : entropy_seed();
  const RngStream root(seed);
  std::vector<std::vector<double>> rows(static_cast<size_t>(c.n_samples));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (long i = next++; i < c.n_samples; i = next++) {
      try {
        RngStream g = root.substream(static_cast<std::uint64_t>(i));
        rows[i] = p.draw(g);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = c.n_samples;
      }
    }
  };
  unsigned threads = c.threads ? c.threads : default_threads();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(1L, c.n_samples / 64))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ofstream file;
  std::ostream& os = open_output(c.output_path, file, out);
  if (c.format == Format::Json) {
    nlohmann::ordered_json j;
    j["metadata"] = {{"library", std::string("rmx ") + kVersion}, {"seed", seed},     {"spec", p.spec},
                     {"model", p.model},                           {"layout", p.layout}};
    j["columns"] = p.columns;
    j["rows"] = rows;
    os << j.dump() << "\n";
  } else {
    os << "# rmx " << kVersion << "\n";
    os << "# seed=" << seed << "\n";
    os << "# spec=" << p.spec << "\n";
    os << "# model=" << p.model << "\n";
    os << "# layout=" << p.layout << "\n";
    for (size_t k = 0; k < p.columns.size(); ++k) os << (k ? "," : "") << csv_field(p.columns[k]);
    os << "\n";
    for (const auto& r : rows) {
      for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << fmt17(r[k]);
      os << "\n";
    }
  }
  if (!os) throw Error("write failed");
  return 0;
}

int cmd_density(const RunConfig& c, std::ostream& out) {
  EnsembleSpec s = build_spec(c);
  const int m = s.m, beta = s.beta;
  const Algebra alg = algebra_from_beta(beta);
  std::function<LogValue(const std::vector<double>&)> eval;
  int expected = 0;
  if (!c.kind.empty()) {
    MatrixVariateSpec mv = build_variate(c, s);
    const bool herm = kind_is_hermitian(mv.kind);
    const int rows = herm ? m : mv.n();
    expected = rows * m * beta;
    eval = [mv, alg, rows, m](const std::vector<double>& x) {
      return log_density_matrix_variate(mv, DMatrix::from_coordinates(alg, rows, m, x));
    };
  } else if (c.eigenvalues || s.family == Family::Fourier) {
    auto d = std::make_shared<EigenvalueDensity>(s);
    expected = m;
    eval = [d](const std::vector<double>& x) { return (*d)(x); };
  } else {
    const bool rect = s.shape == Shape::Rectangular && !is_laguerre_family(s.family);
    if (rect && s.n != std::floor(s.n)) throw DomainError("n", "element densities need integer n");
    const int rows = rect ? static_cast<int>(s.n) : m;
    expected = rows * m * beta;
    eval = [s, alg, rows, m](const std::vector<double>& x) {
      return log_density_element(s, DMatrix::from_coordinates(alg, rows, m, x));
    };
  }
  std::vector<std::vector<double>> rows;
  if (c.input_path.empty() || c.input_path == "-") rows = read_rows(std::cin);
  else rows = read_rows_file(c.input_path);
  std::vector<std::string> values;
  for (size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "row " + std::to_string(i + 1);
    if (static_cast<int>(rows[i].size()) != expected)
      throw DimensionError(where + ": expected " + std::to_string(expected) + " values, got " +
                           std::to_string(rows[i].size()));
    try {
      values.push_back(format_log_value(eval(rows[i])));
    } catch (const DomainError& e) {
      throw DomainError(e.field(), where + ": " + e.what());
    } catch (const Error& e) {
      throw DimensionError(where + ": " + e.what());
    }
  }
  std::ofstream file;
  std::ostream& os = open_output(c.output_path, file, out);
  if (c.format == Format::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& v : values) {
      double d;
      if (parse_double(v, d) && std::isfinite(d)) j.push_back(d);
      else j.push_back(v);
    }
    os << j.dump() << "\n";
  } else {
    os << "log_density\n";
    for (const auto& v : values) os << v << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& summary) {
  if (!is_known_suite(c.suite)) {
    summary << "error: unknown suite '" << c.suite << "'\n";
    return 2;
  }
  SuiteFilter f;
  f.suite = c.suite;
  f.betas = c.betas;
  f.ms = c.ms;
  for (const auto& fam : c.families) {
    // Accept family aliases as well as lemma and kind names.
    try {
      f.families.emplace_back(family_name(parse_family(fam)));
    } catch (const DomainError&) {
      f.families.push_back(fam);
    }
  }
  std::vector<TestCase> cases = select_cases(f);
  if (c.list) {
    for (const auto& tc : cases) out << tc.name << "\n";
    return 0;
  }
  if (!c.seed) {
    summary << "error: verify requires --seed\n";
    return 2;
  }
  if (cases.empty()) {
    summary << "error: no tests match the selection\n";
    return 2;
  }
  std::vector<TestReport> reports = run_cases(cases, *c.seed, c.threads ? c.threads : default_threads());
  std::ofstream file;
  std::ostream& os = open_output(c.output_path, file, out);
  int pass = 0, fail = 0, skip = 0, info_fail = 0;
  for (const auto& r : reports) {
    os << to_json_line(r, c.timings) << "\n";
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Skip) ++skip;
    else if (r.informational) ++info_fail;
    else ++fail;
  }
  for (const auto& r : reports) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-72s %12.4g %s%s\n", std::string(status_name(r.status)).c_str(),
                  r.name.c_str(), r.statistic, r.criterion.c_str(), r.informational ? " [informational]" : "");
    summary << line;
  }
  summary << pass << " passed, " << fail << " failed, " << skip << " skipped";
  if (info_fail) summary << ", " << info_fail << " informational failures";
  summary << "\n";
  return fail ? 1 : 0;
}

int cmd_constants(const RunConfig& c, std::ostream& out) {
  const int beta = integer_beta(c.beta);
  if (c.m < 1) throw DomainError("m", "must be at least 1");
  const int m = c.m;
  bool any = c.want_gamma || c.want_mvbeta || c.want_stiefel || c.want_fourier || c.want_tau || c.want_symvol;
  if (!any) throw DomainError("constants", "choose at least one of --gamma, --mvbeta, --stiefel, --fourier, --tau, --symvol");
  auto need = [](const std::optional<double>& v, const char* field) {
    if (!v) throw DomainError(field, "is required");
    return *v;
  };
  if (c.want_gamma) out << "log_gamma_m\t" << format_log_value(mv_gamma_log(m, beta, need(c.a, "a"))) << "\n";
  if (c.want_mvbeta)
    out << "log_beta_m\t" << format_log_value(mv_beta_log(m, beta, need(c.a, "a"), need(c.b, "b"))) << "\n";
  if (c.want_stiefel) {
    double n = need(c.n, "n");
    if (n != std::floor(n)) throw DomainError("n", "must be an integer");
    out << "log_stiefel_volume\t" << format_log_value(stiefel_log_volume(m, static_cast<int>(n), beta)) << "\n";
  }
  if (c.want_fourier) out << "log_fourier_constant\t" << format_log_value(fourier_constant_log(m, beta)) << "\n";
  if (c.want_symvol)
    out << "log_symmetric_space_volume\t" << format_log_value(symmetric_space_log_volume(m, beta)) << "\n";
  if (c.want_tau) out << "tau\t" << tau(beta, m) << "\n";
  return 0;
}

// ---- argument parsing ----

int run(int argc, const char* const* argv) {
  CLI::App app{"Random matrix ensembles: sampling, densities and verification", "rmx"};
  app.set_version_flag("--version", std::string("rmx ") + kVersion);
  app.require_subcommand(1);
  RunConfig c;
  std::uint64_t seed = 0;
  std::string format = "csv";

  auto spec_options = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "Ensemble family (hermite, t1, gegenbauer1, t2, gegenbauer2, laguerre, "
                                          "t-laguerre1, gegenbauer-laguerre1, modified-jacobi, jacobi, fourier)");
    sub->add_option("--beta", c.beta, "1 (real), 2 (complex), 4 (quaternion); any positive value with --tridiagonal");
    sub->add_option("--m", c.m, "Matrix size m");
    sub->add_option("--n", c.n, "Rows n of a rectangular law, or the Laguerre degrees of freedom");
    sub->add_option("--nu", c.nu, "nu parameter (T and Jacobi families)");
    sub->add_option("--q", c.q, "q parameter (Gegenbauer-I families)");
    sub->add_option("--shape", c.shape, "rectangular or ensemble (default: rectangular when --n is given)");
    sub->add_option("--kind", c.kind, "Matrix-variate kind (normal, wishart, beta1, beta2, sgw, vsgw, ...)");
    sub->add_option("--sigma", c.sigma_path, "CSV file with Sigma (m x m)");
    sub->add_option("--theta", c.theta_path, "CSV file with Theta (n x n)");
    sub->add_option("--mu", c.mu_path, "CSV file with mu (n x m)");
    sub->add_flag("--eigenvalues", c.eigenvalues, "Work with (descending) eigenvalues");
    sub->add_option("--output,-o", c.output_path, "Output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* sample = app.add_subcommand("sample", "Draw samples");
  spec_options(sample);
  CLI::Option* sample_seed = sample->add_option("--seed", seed, "Seed (default: OS entropy)");
  sample->add_option("--n-samples", c.n_samples, "Number of samples");
  sample->add_flag("--tridiagonal", c.tridiagonal, "General-beta tridiagonal model (hermite or laguerre)");
  sample->add_option("--threads", c.threads, "Worker threads");

  CLI::App* density = app.add_subcommand("density", "Evaluate log-densities of CSV rows");
  spec_options(density);
  density->add_option("--input,-i", c.input_path, "Input CSV (default stdin)");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", c.suite, "Suite name (jacobians, normalization, samplers, invariance, "
                                         "reductions, conjecture, all) or a glob over test names");
  verify->add_option("--beta", c.betas, "Restrict to these beta values")->delimiter(',');
  verify->add_option("--m", c.ms, "Restrict to these m values")->delimiter(',');
  verify->add_option("--family", c.families, "Restrict to these families, lemmas or kinds")->delimiter(',');
  CLI::Option* verify_seed = verify->add_option("--seed", seed, "Seed (required)");
  verify->add_option("--report,-o", c.output_path, "JSONL report file (default stdout)");
  verify->add_option("--threads", c.threads, "Worker threads (default: hardware, capped by RMX_THREADS)");
  verify->add_flag("--timings", c.timings, "Include wall_time in the report");
  verify->add_flag("--list", c.list, "List the selected test names");

  CLI::App* constants = app.add_subcommand("constants", "Print special constants");
  constants->add_flag("--gamma", c.want_gamma, "log multivariate gamma at a");
  constants->add_flag("--mvbeta", c.want_mvbeta, "log multivariate beta at (a, b)");
  constants->add_flag("--stiefel", c.want_stiefel, "log Stiefel manifold volume (m, n)");
  constants->add_flag("--fourier", c.want_fourier, "log Fourier (Morris) constant");
  constants->add_flag("--symvol", c.want_symvol, "log volume of the symmetric space");
  constants->add_flag("--tau", c.want_tau, "tau(beta, m)");
  constants->add_option("--m", c.m, "m");
  constants->add_option("--n", c.n, "n");
  constants->add_option("--beta", c.beta, "beta");
  constants->add_option("--a", c.a, "a");
  constants->add_option("--b", c.b, "b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.format = format == "json" ? Format::Json : Format::Csv;
  try {
    if (sample->parsed()) {
      c.command = "sample";
      if (sample_seed->count()) c.seed = seed;
      return cmd_sample(c, std::cout);
    }
    if (density->parsed()) {
      c.command = "density";
      return cmd_density(c, std::cout);
    }
    if (verify->parsed()) {
      c.command = "verify";
      if (verify_seed->count()) c.seed = seed;
      return cmd_verify(c, std::cout, std::cerr);
    }
    c.command = "constants";
    return cmd_constants(c, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rmx::cli
