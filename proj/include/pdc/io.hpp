#pragma once

// JSON problem documents and machine-readable reports.
//
// Rationals travel as strings "p" or "p/q" (plain JSON integers are also
// accepted on input). A set is {"eq": [{"a": [...], "y": r}], "ineq":
// [{"a": [...], "b": r}]}; a function is {"pieces": [{"u": [...], "alpha":
// r}], "domain": set-or-null}; a problem is {"dimension": n, "C": set,
// "g": function, "h": function}. Piece indices are 0-based.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pdc/dca.hpp"
#include "pdc/duality.hpp"
#include "pdc/optimality.hpp"
#include "pdc/structure.hpp"
#include "pdc/verify.hpp"

namespace pdc {

using Json = nlohmann::ordered_json;

/// Throws ParseError (syntax errors carry line/column, semantic errors a
/// JSON pointer), or PreconditionError when dom g and C do not meet.
DcProblem parse_problem(std::string_view text);

/// Reads a file and parses it. Throws ParseError if it cannot be read.
std::string read_file(const std::string& path);

Json problem_to_json(const DcProblem& prob);

/// {"table": [{"active": [j, ...], "choose": j}, ...]}
ActiveSetTable parse_table(std::string_view text);

/// {"subgradients": [[r, ...], ...]}
Scripted parse_script(std::string_view text, std::size_t dimension);

/// {"points": [[r, ...], ...], "subgradients": [[r, ...], ...]}
std::pair<std::vector<Vec>, std::vector<Vec>> parse_trace(std::string_view text, std::size_t dimension);

Json to_json(const Rational& r);
Json to_json(const ExtendedRational& r);
Json to_json(const Vec& v);
Json to_json(const IndexSet& s);
Json to_json(const PolyhedralSet& s);
Json to_json(const ConvexBody& b);

Json classification_report(const DcProblem& prob, const Vec& x, const Classification& c);
Json structure_report(const DcProblem& prob, const SolutionStructure& s);
Json dca_report(const DcaTrace& trace, const SelectionRule& rule);
Json trace_report(const TraceReport& report);
Json dual_report(const DualReport& report);
Json grid_report(const GridReport& report);

/// Pretty-printed with a trailing newline.
std::string render(const Json& j);

}  // namespace pdc
