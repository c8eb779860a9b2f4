// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when all
// criteria hold.  Heavier sweeps are shared across criteria where they
// overlap, so the binary runs each computation once.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "gauss_spectra/chord_diagram.hpp"
#include "gauss_spectra/int_polynomial.hpp"
#include "gauss_spectra/linear_ordered_graph.hpp"
#include "gauss_spectra/pretzel.hpp"
#include "gauss_spectra/skew_spectra.hpp"
#include "gauss_spectra/smoothing.hpp"
#include "gauss_spectra/verification.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gauss_spectra;

int hardware_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(GAUSS_SPECTRA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status)) return {-1, output};
  return {WEXITSTATUS(status), output};
}

bool figure_fidelity(std::string& detail) {
  const auto check_once = [] {
    ChordDiagram d = parse_gauss_code("1 2 3 1 4 3 2 4");
    if (interlacement_graph(d) !=
        LinearlyOrderedGraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}))
      return false;
    IntMatrix expected(4, 4);
    expected << 0, 1, 1, 0,
               -1, 0, 0, 1,
               -1, 0, 0, 1,
                0, -1, -1, 0;
    return skew_adjacency(interlacement_graph(d)) == expected;
  };
  if (!check_once()) {
    detail = "matrices differ";
    return false;
  }
  const auto start = std::chrono::steady_clock::now();
  const bool ok = check_once();
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  detail = std::to_string(micros) + "us";
  return ok && micros < 1000;
}

std::string family_detail(const FamilyResult& f) {
  std::ostringstream os;
  os << f.checks << " checks, " << f.failures << " failures";
  return os.str();
}

bool closed_form_families(std::string& detail) {
  long long checks = 0, failures = 0;
  for (int n = 1; n <= 12; ++n) {
    IntPolynomial path_direct = char_poly(skew_adjacency(path_graph(n)));
    IntPolynomial complete_direct = char_poly(skew_adjacency(complete_graph(n)));
    checks += 3;
    if (path_poly(n) != path_direct) ++failures;
    if (complete_poly(n) != complete_direct) ++failures;
    const Int det = (n % 2 == 0) ? complete_direct.coeff(0) : -complete_direct.coeff(0);
    if (det != (n % 2 == 0 ? 1 : 0)) ++failures;
  }
  checks += 2;
  if (path_poly(1) != IntPolynomial{0, 1}) ++failures;
  if (path_poly(2) != IntPolynomial{1, 0, 1}) ++failures;
  detail = std::to_string(checks) + " checks, " + std::to_string(failures) +
           " failures";
  return failures == 0;
}

bool lemma_value_sweep(std::string& detail) {
  long long checks = 0, failures = 0;
  for (CoverFamily which :
       {CoverFamily::glued_cliques, CoverFamily::glued_cliques_doubled,
        CoverFamily::join_union_doubled, CoverFamily::offset_glued_doubled})
    for (int alpha = 1; alpha <= 5; ++alpha)
      for (int beta = 1; beta <= 5; ++beta) {
        IntPolynomial direct =
            char_poly(skew_adjacency(lemma_family_graph(which, alpha, beta)));
        LemmaValues values = lemma_values(which, alpha, beta);
        checks += 2;
        if (direct(Int(0)) != values.at_zero) ++failures;
        if (direct.derivative()(Int(0)) != values.derivative_at_zero) ++failures;
      }
  detail = std::to_string(checks) + " checks, " + std::to_string(failures) +
           " failures";
  return failures == 0;
}

bool census_row_ok(const CensusRow& row, long long& checks, long long& failures) {
  ++checks;
  if (row.agrees) return true;
  ++failures;
  json report{{"p", row.params.p},
              {"q", row.params.q},
              {"r", row.params.r},
              {"m", row.m},
              {"j", row.j},
              {"closed_form", row.closed_form ? row.closed_form->str() : "none"},
              {"brute_force", row.brute_force}};
  std::cout << "  discrepancy " << report.dump() << "\n";
  return false;
}

bool pretzel_censuses(std::string& detail) {
  const int threads = hardware_threads();
  long long checks = 0, failures = 0;
  for (std::int64_t p : {1, 3, 5})
    for (std::int64_t q : {1, 3, 5})
      for (std::int64_t r : {1, 3, 5}) {
        PretzelParams params = pretzel_params(p, q, r);
        const int total = static_cast<int>(p + q + r);
        for (int m = 1; m <= total; ++m)
          for (int j = 0; j <= 1; ++j)
            census_row_ok(census(params, m, j, threads), checks, failures);
      }
  const auto one_even = [&](std::int64_t p, std::int64_t q, std::int64_t r) {
    PretzelParams params = pretzel_params(p, q, r);
    const int total = static_cast<int>(p + q + r);
    for (int m = 1; m <= total; ++m)
      for (int j = 0; j <= 1; ++j)
        census_row_ok(census(params, m, j, threads), checks, failures);
  };
  for (std::int64_t even : {2, 4})
    for (std::int64_t first : {1, 3})
      for (std::int64_t second : {1, 3}) {
        one_even(even, first, second);
        one_even(first, even, second);
        one_even(first, second, even);
      }
  detail = std::to_string(checks) + " rows, " + std::to_string(failures) +
           " discrepancies";
  return failures == 0;
}

bool cli_golden(std::string& detail) {
  long long failures = 0;
  const auto expect = [&](const std::string& args, int code,
                          const std::string& output) {
    CliResult r = run_cli(args);
    if (r.exit_code == code && r.output == output) return;
    ++failures;
    std::cout << "  cli mismatch: " << args << " -> exit " << r.exit_code
              << ", output " << json(r.output).dump() << "\n";
  };

  expect("parse \"1 2 3 1 2 3\"", 0, "1 2 3 1 2 3\n");
  expect("charpoly \"1 2 3 1 2 3\"", 0, "0 3 0 1\n");
  expect("count \"1 2 3 1 2 3\" ooo --method all", 0, "2\n");
  expect("graph \"1 2 3 1 4 3 2 4\"", 0, "4\n1 2\n1 3\n2 4\n3 4\n");
  expect("cover \"1 2 1 2\" uu --chord 1", 0, "1 2 3 3 2 1\n");

  CliResult pretzel = run_cli("pretzel 1 1 1 --m 2 --j 0");
  bool pretzel_ok = pretzel.exit_code == 0;
  if (pretzel_ok) {
    json row = json::parse(pretzel.output, nullptr, false);
    pretzel_ok = !row.is_discarded() && row["closed_form"] == 3 &&
                 row["brute_force"] == 3 && row["agrees"] == true;
  }
  if (!pretzel_ok) {
    ++failures;
    std::cout << "  cli mismatch: pretzel 1 1 1 --m 2 --j 0 -> "
              << json(pretzel.output).dump() << "\n";
  }

  CliResult verify = run_cli("verify --max-chords 5 --threads " +
                             std::to_string(hardware_threads()));
  if (verify.exit_code != 0) {
    ++failures;
    std::cout << "  verify --max-chords 5 exited " << verify.exit_code << "\n"
              << verify.output;
  }

  detail = std::to_string(failures) + " failures";
  return failures == 0;
}

}  // namespace

int main() {
  bool all = true;
  const auto report = [&](int id, const std::string& name, bool ok,
                          const std::string& detail) {
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n" << std::flush;
  };

  std::string detail;
  bool ok = figure_fidelity(detail);
  report(1, "figure fidelity", ok, detail);

  VerifyOptions sweep_options;
  sweep_options.max_chords = 6;
  sweep_options.threads = hardware_threads();
  std::vector<FamilyResult> sweep = verify_counting_sweep(sweep_options);
  const FamilyResult& agree = sweep[0];
  const FamilyResult& cover = sweep[1];
  const FamilyResult& zero = sweep[2];
  const FamilyResult& kernel = sweep[3];
  report(2, "counting paths agree to 6 chords",
         agree.passed() && kernel.passed(),
         family_detail(agree) + "; kernel " + family_detail(kernel));
  report(3, "double covers count double", cover.passed(), family_detail(cover));

  VerifyOptions random_options;
  random_options.random_matrices = 10000;
  random_options.random_matrix_dim = 10;
  FamilyResult random_matrices = verify_random_matrices(random_options);
  report(4, "zero-root multiplicity equals nullity",
         zero.passed() && random_matrices.passed(),
         family_detail(zero) + "; random " + family_detail(random_matrices));

  VerifyOptions calculus_options;
  calculus_options.max_chords = 6;
  calculus_options.max_graph_vertices = 5;
  calculus_options.random_graphs = 1000;
  FamilyResult mirror = verify_mirror_spectrum(calculus_options);
  FamilyResult calculus = verify_spectral_calculus(calculus_options);
  report(5, "spectral calculus identities", mirror.passed() && calculus.passed(),
         "mirror " + family_detail(mirror) + "; calculus " +
             family_detail(calculus));

  ok = closed_form_families(detail);
  report(6, "path and complete closed forms", ok, detail);

  ok = lemma_value_sweep(detail);
  report(7, "cover family values", ok, detail);

  ok = pretzel_censuses(detail);
  report(8, "pretzel censuses", ok, detail);

  ok = cli_golden(detail);
  report(9, "command line golden outputs", ok, detail);

  return all ? 0 : 1;
}
