// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion other than the informational beta = 8 check fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "rmx/charts.hpp"
#include "rmx/rng.hpp"
#include "rmx/verify.hpp"

using namespace rmx;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  const TestCase* tc;
  const TestReport* r;
};

std::string part(const std::string& name, int k) {
  size_t pos = 0;
  for (int i = 0; i < k; ++i) pos = name.find('/', pos) + 1;
  return name.substr(pos, name.find('/', pos) - pos);
}

struct Tally {
  int total = 0, pass = 0;
  double worst = 0.0;
  std::vector<std::string> failures;

  void add(const Outcome& o) {
    ++total;
    if (o.r->status == Status::Pass) ++pass;
    else failures.push_back(o.r->name + " (" + std::string(status_name(o.r->status)) + ": " + o.r->detail + ")");
    worst = std::max(worst, o.r->statistic);
  }
  bool ok() const { return total > 0 && pass == total; }
};

bool report(const char* id, bool ok, const std::string& text, const Tally* t = nullptr) {
  std::printf("%s %s %s\n", id, ok ? "PASS" : "FAIL", text.c_str());
  if (t)
    for (size_t i = 0; i < std::min<size_t>(t->failures.size(), 10); ++i)
      std::printf("    %s\n", t->failures[i].c_str());
  return ok;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string jsonl(const std::vector<TestReport>& rs) {
  std::string s;
  for (const auto& r : rs) s += to_json_line(r) + "\n";
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::vector<TestCase> cases = all_cases();
  std::map<std::string, const TestCase*> by_name;
  for (const auto& c : cases) by_name[c.name] = &c;

  std::map<std::string, double> suite_time;
  std::vector<TestReport> reports;
  for (const auto& suite : suite_names()) {
    std::vector<TestCase> sel;
    for (const auto& c : cases)
      if (c.suite == suite) sel.push_back(c);
    auto t0 = std::chrono::steady_clock::now();
    auto rs = run_cases(sel, kSeed, 1);
    suite_time[suite] = seconds_since(t0);
    reports.insert(reports.end(), rs.begin(), rs.end());
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.name < b.name; });

  std::vector<Outcome> all;
  for (const auto& r : reports) all.push_back({by_name.at(r.name), &r});

  bool ok = true;

  // AC1 / AC2: Jacobians.
  Tally explicit_charts, stiefel_charts;
  for (const auto& o : all) {
    if (o.tc->suite != "jacobians" || o.tc->beta == 8) continue;
    if (o.tc->m != 2 && o.tc->m != 3) continue;
    Lemma l = parse_lemma(part(o.r->name, 1));
    if (lemma_uses_stiefel(l) || l == Lemma::WishartMap) stiefel_charts.add(o);
    else {
      explicit_charts.add(o);
      if (o.r->n_samples < 20) explicit_charts.failures.push_back(o.r->name + " used fewer than 20 points");
    }
  }
  const double jac_time = suite_time["jacobians"];
  ok &= report("AC1",
               explicit_charts.ok() && explicit_charts.worst < 1e-5 && jac_time < 120.0 &&
                   explicit_charts.failures.empty(),
               "explicit-chart Jacobians: " + std::to_string(explicit_charts.pass) + "/" +
                   std::to_string(explicit_charts.total) + " pass, max rel err " +
                   fmt("%.2e", explicit_charts.worst) + " (< 1e-05), suite time " + fmt("%.1f", jac_time) +
                   " s (< 120 s)",
               &explicit_charts);
  ok &= report("AC2", stiefel_charts.ok() && stiefel_charts.worst < 1e-4,
               "Stiefel-chart Jacobians (QR, QDR, polar, SVD, spectral, Wishart map): " + std::to_string(stiefel_charts.pass) +
                   "/" + std::to_string(stiefel_charts.total) + " pass, max rel err " +
                   fmt("%.2e", stiefel_charts.worst) + " (< 1e-04)",
               &stiefel_charts);

  // AC3: normalization.
  Tally norm;
  int fourier = 0, quad = 0;
  for (const auto& o : all) {
    if (o.tc->suite != "normalization") continue;
    norm.add(o);
    if (o.r->name.rfind("normalization/fourier/", 0) == 0) {
      ++fourier;
      if (o.r->n_samples < 1000000) norm.failures.push_back(o.r->name + " used fewer than 1e6 points");
    }
    if (o.r->criterion.find("3 SE") == std::string::npos) ++quad;
  }
  ok &= report("AC3", norm.ok() && norm.failures.empty() && fourier == 6,
               "normalization: " + std::to_string(norm.pass) + "/" + std::to_string(norm.total) + " pass (" +
                   std::to_string(quad) + " quadrature |err| < 1e-06, " + std::to_string(fourier) +
                   " Fourier MC at 1e6 points within 3 SE)",
               &norm);

  // AC4 - AC6.
  auto suite_tally = [&](const char* suite) {
    Tally t;
    for (const auto& o : all)
      if (o.tc->suite == suite) t.add(o);
    return t;
  };
  Tally samp = suite_tally("samplers");
  ok &= report("AC4", samp.ok(),
               "sampler-density agreement: " + std::to_string(samp.pass) + "/" + std::to_string(samp.total) +
                   " pass at Bonferroni-corrected 0.01, 1e5 samples each",
               &samp);
  Tally inv = suite_tally("invariance");
  ok &= report("AC5", inv.ok(),
               "invariance two-sample KS: " + std::to_string(inv.pass) + "/" + std::to_string(inv.total) +
                   " pass, N = 1e4",
               &inv);
  Tally red = suite_tally("reductions");
  ok &= report("AC6", red.ok() && red.total >= 12 && red.worst < 1e-10,
               "scalar reductions: " + std::to_string(red.pass) + "/" + std::to_string(red.total) +
                   " pass on 100-point grids, max rel err " + fmt("%.2e", red.worst) + " (< 1e-10)",
               &red);

  // AC7: informational.
  const TestReport* shape = nullptr;
  for (const auto& r : reports)
    if (r.name == "conjecture/tridiagonal/hermite/m=2/beta=8/shape") shape = &r;
  report("AC7", shape && shape->status == Status::Pass,
         std::string("beta = 8 tridiagonal Hermite vs joint density, m = 2 (conjectural, informational): p = ") +
             (shape ? fmt("%.4f", shape->statistic) : std::string("missing")) +
             (shape ? ", threshold " + fmt("%.2e", shape->threshold) : std::string()));

  // AC8: determinism.
  const std::string first = jsonl(reports);
  auto t0 = std::chrono::steady_clock::now();
  const std::string second = jsonl(run_cases(cases, kSeed, 1));
  const unsigned many = std::max(4u, default_threads());
  const std::string threaded = jsonl(run_cases(cases, kSeed, many));
  ok &= report("AC8", first == second && first == threaded,
               "determinism: " + std::to_string(reports.size()) + " reports byte-identical across two 1-thread runs " +
                   (first == second ? "(yes)" : "(NO)") + " and 1 vs " + std::to_string(many) + " threads " +
                   (first == threaded ? "(yes)" : "(NO)") + ", rerun time " + fmt("%.1f", seconds_since(t0)) + " s");

  return ok ? 0 : 1;
}
