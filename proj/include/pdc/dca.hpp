#pragma once

// DCA: alternate a subgradient xi^k of h at x^k with a minimizer x^{k+1} of
// g(x) - xi^k . x over C. Deterministic selection rules make the iteration a
// map, so exact state comparison finds fixed points and cycles.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pdc/model.hpp"

namespace pdc {

struct MinIndexActive {};
struct MaxIndexActive {};
/// Active set of h -> chosen piece index (must belong to the set).
struct ActiveSetTable {
  std::map<IndexSet, std::size_t> choice;
};
/// Step k uses subgradients[k]; each one is checked against dh(x^k).
struct Scripted {
  std::vector<Vec> subgradients;
};

using SelectionRule = std::variant<MinIndexActive, MaxIndexActive, ActiveSetTable, Scripted>;

bool is_deterministic(const SelectionRule& rule);
std::string rule_name(const SelectionRule& rule);

/// Subgradient of h at x chosen by `rule` at iteration `step`. Throws
/// DomainError when x is outside dom h and PreconditionError when the table
/// lacks the active set, the script is exhausted, or a scripted vector is not
/// a subgradient (the message names the step).
Vec select_subgradient(const MaxAffine& h, const Vec& x, const SelectionRule& rule, std::size_t step);

struct SubproblemResult {
  bool bounded = false;
  Vec x;
  Rational value;  // min of g(x) - xi . x over C
};

/// Lexicographically smallest minimizer of g(x) - xi . x over dom g n C.
SubproblemResult solve_subproblem(const MaxAffine& g, const PolyhedralSet& C, const Vec& xi);

struct DcaIterate {
  Vec x;
  std::optional<Vec> xi;  // absent on the final recorded iterate
  ExtendedRational f;
};

enum class Termination { FixedPoint, Cycle, MaxIterations, SubproblemUnbounded, SubdifferentialEmpty };

const char* to_string(Termination t);

struct DcaTrace {
  std::vector<DcaIterate> iterates;
  Termination termination = Termination::MaxIterations;
  /// FixedPoint: k with x^{k+1} = x^k. Unbounded / empty: step that failed.
  std::size_t step = 0;
  /// Cycle: x^{first + period} = x^{first}.
  std::size_t cycle_start = 0;
  std::size_t period = 0;
};

/// Iterates from x0 for at most max_iter subproblem solves. The state for
/// cycle detection is x; with a deterministic rule the next state is a
/// function of x alone. Throws PreconditionError if x0 is not in dom g n C.
DcaTrace run_dca(const DcProblem& prob, const Vec& x0, const SelectionRule& rule, std::size_t max_iter);

struct StepCheck {
  bool subgradient = false;  // xi^k in dh(x^k)
  bool minimizer = false;    // xi^k in d(g + indicator C)(x^{k+1}) and x^{k+1} solves the subproblem
  bool descent = false;      // f(x^{k+1}) <= f(x^k)
};

struct TraceReport {
  std::vector<StepCheck> steps;  // one per consecutive pair of points
  /// Result for a trailing xi paired with the last point, if one was given.
  std::optional<bool> trailing_subgradient;
  std::vector<ExtendedRational> values;
  bool valid = false;
};

/// Checks a user trace. `xis` has |xs| - 1 entries (or |xs|, the last one
/// then only checked as a subgradient). Throws DimensionError on bad lengths.
TraceReport validate_trace(const DcProblem& prob, const std::vector<Vec>& xs, const std::vector<Vec>& xis);

}  // namespace pdc
