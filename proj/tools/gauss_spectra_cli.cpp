#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
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

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json int_json(const Int& value) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();
}

json polynomial_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const Int& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"degree", p.degree()}, {"coefficients", coeffs}};
}

json graph_json(const LinearlyOrderedGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

json census_json(const CensusRow& row, bool with_closed, bool with_census) {
  json out{{"p", row.params.p}, {"q", row.params.q}, {"r", row.params.r},
           {"m", row.m},        {"j", row.j}};
  if (with_closed)
    out["closed_form"] = row.closed_form ? int_json(*row.closed_form) : json(nullptr);
  if (with_census) out["brute_force"] = row.brute_force;
  if (with_closed && with_census)
    out["agrees"] = row.closed_form ? json(row.agrees) : json(nullptr);
  return out;
}

void emit(const json& value) { std::cout << value.dump(2) << "\n"; }

int run_count(const ChordDiagram& d, const PartialState& state,
              const std::string& method, const std::string& format) {
  std::optional<int> spectral, boundary, parity;
  if (method == "rlcp" || method == "all") spectral = loop_count_rlcp(d, state);
  if (method == "oracle" || method == "all") {
    BoundaryScratch scratch;
    boundary = boundary_component_count(d, state, scratch);
  }
  if (method == "zlcp" || (method == "all" && !state.has_erased()))
    parity = loop_count_zlcp(d, state);

  const int count = spectral ? *spectral : (boundary ? *boundary : *parity);
  for (const auto& other : {spectral, boundary, parity})
    if (other && *other != count) {
      std::cerr << "error (MethodDisagreement): counting methods disagree: "
                << *other << " vs " << count << "\n";
      return 1;
    }

  if (format == "json") {
    json methods;
    if (spectral) methods["rlcp"] = *spectral;
    if (boundary) methods["oracle"] = *boundary;
    if (parity) methods["zlcp"] = *parity;
    emit(json{{"count", count}, {"methods", methods}});
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact loop counting for smoothed virtual-knot Gauss diagrams"};
  app.require_subcommand(1);

  struct {
    std::string code, state, format = "text", method = "all", flavor = "first";
    std::int64_t p = 0, q = 0, r = 0;
    int chord = 0, m = 0, j = 0, max_chords = 5;
    int threads = default_threads();
    bool sweep = false, closed_only = false, census_only = false, m_set = false;
  } opt;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->transform(CLI::IsMember({"text", "json"}));
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "Echo a Gauss code canonically");
  parse_cmd->add_option("code", opt.code, "Gauss code")->required();
  add_format(parse_cmd);

  CLI::App* graph_cmd =
      app.add_subcommand("graph", "Interlacement graph of a Gauss code");
  graph_cmd->add_option("code", opt.code, "Gauss code")->required();
  add_format(graph_cmd);

  CLI::App* charpoly_cmd = app.add_subcommand(
      "charpoly", "Characteristic polynomial of the skew-adjacency matrix");
  charpoly_cmd->add_option("code", opt.code, "Gauss code")->required();
  add_format(charpoly_cmd);

  CLI::App* count_cmd = app.add_subcommand("count", "Count loops of a smoothing");
  count_cmd->add_option("code", opt.code, "Gauss code")->required();
  count_cmd->add_option("state", opt.state, "State string over o/u/x")->required();
  count_cmd->add_option("--method", opt.method, "Counting route")
      ->transform(CLI::IsMember({"rlcp", "zlcp", "oracle", "all"}));
  add_format(count_cmd);

  CLI::App* cover_cmd =
      app.add_subcommand("cover", "Orientable double cover of an unoriented chord");
  cover_cmd->add_option("code", opt.code, "Gauss code")->required();
  cover_cmd->add_option("state", opt.state, "State string over o/u/x")->required();
  cover_cmd->add_option("--chord", opt.chord, "Unoriented chord to cut along")
      ->required();
  cover_cmd->add_option("--flavor", opt.flavor, "Sheet gluing choice")
      ->transform(CLI::IsMember({"first", "second"}));
  add_format(cover_cmd);

  CLI::App* pretzel_cmd =
      app.add_subcommand("pretzel", "Closed-form vs brute-force pretzel census");
  pretzel_cmd->add_option("p", opt.p, "First twist count")->required();
  pretzel_cmd->add_option("q", opt.q, "Second twist count")->required();
  pretzel_cmd->add_option("r", opt.r, "Third twist count")->required();
  CLI::Option* m_opt = pretzel_cmd->add_option("--m", opt.m, "Crossings smoothed");
  pretzel_cmd->add_option("--j", opt.j, "Unoriented smoothings among them");
  pretzel_cmd->add_flag("--sweep", opt.sweep, "All m from 1 to the crossing count");
  CLI::Option* closed_opt =
      pretzel_cmd->add_flag("--closed-only", opt.closed_only, "Skip the census");
  pretzel_cmd->add_flag("--census-only", opt.census_only, "Skip the closed form")
      ->excludes(closed_opt);
  pretzel_cmd->add_option("--threads", opt.threads, "Census worker threads");
  add_format(pretzel_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Exhaustive small-instance property suite");
  verify_cmd->add_option("--max-chords", opt.max_chords, "Diagram sweep bound");
  verify_cmd->add_option("--threads", opt.threads, "Sweep worker threads");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.m_set = m_opt->count() > 0;

  try {
    if (*parse_cmd) {
      ChordDiagram d = parse_gauss_code(opt.code);
      if (opt.format == "json")
        emit(json{{"code", serialize(d)}, {"chords", d.chord_count()}});
      else
        std::cout << serialize(d) << "\n";
    } else if (*graph_cmd) {
      LinearlyOrderedGraph g = interlacement_graph(parse_gauss_code(opt.code));
      if (opt.format == "json")
        emit(graph_json(g));
      else
        std::cout << to_text(g);
    } else if (*charpoly_cmd) {
      IntPolynomial p = char_poly(skew_adjacency(
          interlacement_graph(parse_gauss_code(opt.code))));
      if (opt.format == "json")
        emit(polynomial_json(p));
      else
        std::cout << p.to_string() << "\n";
    } else if (*count_cmd) {
      ChordDiagram d = parse_gauss_code(opt.code);
      return run_count(d, PartialState::parse(opt.state), opt.method, opt.format);
    } else if (*cover_cmd) {
      ChordDiagram d = parse_gauss_code(opt.code);
      DoubleCover cover = double_cover(
          d, PartialState::parse(opt.state), opt.chord,
          opt.flavor == "first" ? CoverFlavor::first : CoverFlavor::second);
      if (opt.format == "json") {
        json sources = json::array();
        for (int src : cover.source_chord) sources.push_back(src);
        emit(json{{"code", serialize(cover.diagram)},
                  {"state", cover.state.to_string()},
                  {"source_chord", sources}});
      } else {
        std::cout << serialize(cover.diagram) << "\n";
      }
    } else if (*pretzel_cmd) {
      PretzelParams params = pretzel_params(opt.p, opt.q, opt.r);
      const bool with_closed = !opt.census_only;
      const bool with_census = !opt.closed_only;
      const auto row_for = [&](int m) {
        if (opt.closed_only) {
          CensusRow row;
          row.params = params;
          row.m = m;
          row.j = opt.j;
          if (m >= 1 && opt.j <= 1 && opt.j >= 0)
            row.closed_form =
                opt.j == 0 ? n0_closed(params, m) : n1_closed(params, m);
          return row;
        }
        return census(params, m, opt.j, opt.threads);
      };
      if (opt.sweep) {
        json rows = json::array();
        const int total = static_cast<int>(params.P() + params.Q() + params.R());
        for (int m = 1; m <= total; ++m)
          rows.push_back(census_json(row_for(m), with_closed, with_census));
        emit(rows);
      } else {
        if (!opt.m_set) {
          std::cerr << "pretzel requires --m unless --sweep is given\n";
          return 2;
        }
        emit(census_json(row_for(opt.m), with_closed, with_census));
      }
    } else if (*verify_cmd) {
      VerifyOptions options;
      options.max_chords = opt.max_chords;
      options.threads = opt.threads;
      VerifyReport report = run_verification(options);
      if (opt.format == "json") {
        json families = json::array();
        for (const auto& f : report.families)
          families.push_back(json{{"name", f.name},
                                  {"checks", f.checks},
                                  {"failures", f.failures},
                                  {"examples", f.examples}});
        emit(json{{"passed", report.all_passed()}, {"families", families}});
      } else {
        for (const auto& f : report.families) {
          std::cout << (f.passed() ? "PASS" : "FAIL") << " " << f.name << " ("
                    << f.checks << " checks)\n";
          for (const auto& example : f.examples)
            std::cout << "  failed: " << example << "\n";
        }
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error (" << e.name() << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
