// pdcopt: command-line front end for the polyhedral DC toolkit.
//
// Exit codes: 0 success, 1 malformed input, 2 violated precondition or
// hypothesis, 3 a verification or trace check failed.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pdc/error.hpp"
#include "pdc/io.hpp"

namespace {

using namespace pdc;

constexpr int kInputError = 1;
constexpr int kPreconditionError = 2;
constexpr int kCheckFailed = 3;

SelectionRule parse_rule(const std::string& spec, std::size_t dimension) {
  if (spec == "min-index") return MinIndexActive{};
  if (spec == "max-index") return MaxIndexActive{};
  if (spec.rfind("table:", 0) == 0) return parse_table(read_file(spec.substr(6)));
  if (spec.rfind("script:", 0) == 0) return parse_script(read_file(spec.substr(7)), dimension);
  throw ParseError("unknown rule \"" + spec + "\" (use min-index, max-index, table:FILE or script:FILE)", "");
}

Vec parse_point(const std::string& csv, std::size_t dimension, const char* what) {
  Vec v;
  try {
    v = parse_vector(csv);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what(), "");
  }
  if (v.size() != dimension) {
    throw DimensionError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(dimension));
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of polyhedral DC programs"};
  app.require_subcommand(1);

  std::string problem_path;
  auto add_problem = [&](CLI::App* cmd) {
    cmd->add_option("--problem", problem_path, "Problem document (JSON)")->required()->check(CLI::ExistingFile);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a point (critical, stationary, local, global)");
  add_problem(classify_cmd);
  std::string point_csv;
  bool with_global = false;
  classify_cmd->add_option("--point", point_csv, "Point as comma-separated rationals")->required();
  classify_cmd->add_flag("--global", with_global, "Also decide global optimality");

  auto* dca_cmd = app.add_subcommand("dca", "Run DCA from a starting point");
  add_problem(dca_cmd);
  std::string x0_csv, rule_spec = "min-index";
  std::size_t max_iter = 1000;
  dca_cmd->add_option("--x0", x0_csv, "Starting point")->required();
  dca_cmd->add_option("--rule", rule_spec, "min-index, max-index, table:FILE or script:FILE")->capture_default_str();
  dca_cmd->add_option("--max-iter", max_iter, "Iteration limit")->capture_default_str();

  auto* structure_cmd = app.add_subcommand("structure", "Global and local solution sets");
  add_problem(structure_cmd);
  std::string path_from, path_to;
  structure_cmd->add_option("--path-from", path_from, "Start of a connecting polyline");
  structure_cmd->add_option("--path-to", path_to, "End of a connecting polyline");

  auto* dual_cmd = app.add_subcommand("dual", "Dual objective values");
  add_problem(dual_cmd);
  std::string xi_csv;
  dual_cmd->add_option("--xi", xi_csv, "Evaluate the dual objective at this vector only");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check classifiers on a grid (dimension <= 2)");
  add_problem(verify_cmd);
  std::string step_text = "1/8";
  verify_cmd->add_option("--grid-step", step_text, "Grid step p/q")->capture_default_str();

  auto* trace_cmd = app.add_subcommand("validate-trace", "Check a DCA trace");
  add_problem(trace_cmd);
  std::string trace_path;
  trace_cmd->add_option("--trace", trace_path, "Trace document with points and subgradients")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const DcProblem prob = parse_problem(read_file(problem_path));
    const std::size_t n = prob.dimension();

    if (*classify_cmd) {
      const Vec x = parse_point(point_csv, n, "point");
      std::cout << render(classification_report(prob, x, classify(prob, x, with_global)));
    } else if (*dca_cmd) {
      const SelectionRule rule = parse_rule(rule_spec, n);
      const DcaTrace trace = run_dca(prob, parse_point(x0_csv, n, "x0"), rule, max_iter);
      std::cout << render(dca_report(trace, rule));
    } else if (*structure_cmd) {
      const SolutionStructure s = analyze_structure(prob);
      Json report = structure_report(prob, s);
      if (path_from.empty() != path_to.empty()) throw ParseError("--path-from and --path-to go together", "");
      if (!path_from.empty()) {
        const auto path = segment_path(prob, s.pieces, s.analysis, parse_point(path_from, n, "path start"),
                                       parse_point(path_to, n, "path end"));
        Json points = Json::array();
        for (const auto& p : path) points.push_back(to_json(p));
        report["path"] = path.empty() ? Json(nullptr) : points;
      }
      std::cout << render(report);
    } else if (*dual_cmd) {
      if (!xi_csv.empty()) {
        const Vec xi = parse_point(xi_csv, n, "xi");
        const MaxAffine restricted = restrict_sum(prob.g, prob.C);
        std::cout << render({{"xi", to_json(xi)},
                             {"h_conjugate", to_json(conjugate_value(prob.h, xi))},
                             {"restricted_g_conjugate", to_json(conjugate_value(restricted, xi))},
                             {"dual_value", to_json(dual_objective(prob, xi))}});
      } else {
        std::cout << render(dual_report(toland_singer_check(prob)));
      }
    } else if (*verify_cmd) {
      Rational step;
      try {
        step = parse_rational(step_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad grid step: ") + e.what(), "");
      }
      const GridReport report = verify_on_grid(prob, step);
      std::cout << render(grid_report(report));
      if (!report.passed()) return kCheckFailed;
    } else if (*trace_cmd) {
      const auto [xs, xis] = parse_trace(read_file(trace_path), n);
      const TraceReport report = validate_trace(prob, xs, xis);
      std::cout << render(trace_report(report));
      if (!report.valid) return kCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPreconditionError;
  }
  return 0;
}
