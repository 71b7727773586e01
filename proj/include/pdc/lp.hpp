#pragma once

// Exact rational linear programming.
//
// lp_solve runs a dense two-phase simplex with Bland's rule over rationals,
// so every answer is exact and a pure function of its input. All decision
// procedures in the library (containment, feasibility of mixed strict/weak
// systems, conjugate values, linearized subproblems) reduce to it.

#include <cstddef>
#include <optional>
#include <vector>

#include "pdc/rational.hpp"

namespace pdc {

/// a . x (== or <=) rhs, depending on which list holds it.
struct LinearConstraint {
  Vec a;
  Rational rhs;
};

using Constraints = std::vector<LinearConstraint>;

/// minimize <objective, x> subject to the equalities and `a . x <= rhs`
/// inequalities. An empty objective is the zero objective.
struct LinearProgram {
  std::size_t dimension = 0;
  Vec objective;
  Constraints equalities;
  Constraints inequalities;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec point;
  /// Inequality rows satisfied with equality at `point`, ascending.
  std::vector<std::size_t> tight;
  /// Optimality certificate: lambda >= 0 per inequality, mu per equality with
  /// objective + A^T lambda + E^T mu = 0 and value = -(b . lambda + e . mu).
  Vec inequality_multipliers;
  Vec equality_multipliers;

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Solves `lp` exactly. Optimal answers are basic solutions (vertices
/// whenever the feasible region has one). Throws DimensionError on rows of
/// the wrong length.
LpOutcome lp_solve(const LinearProgram& lp);

/// Checks an Optimal outcome against its certificate: primal feasibility,
/// dual feasibility, complementary slackness and equal objective values,
/// all exactly. Returns false for non-optimal outcomes.
bool check_certificate(const LinearProgram& lp, const LpOutcome& outcome);

/// A point satisfying every constraint, or nullopt when the system is empty.
std::optional<Vec> lp_feasible(const Constraints& equalities, const Constraints& inequalities,
                               std::size_t dimension);

/// Result of max_slack: the supremum margin and a point attaining it (or,
/// for an infinite supremum, a point with margin at least 1).
struct SlackResult {
  ExtendedRational slack;  // -inf when the weak system itself is empty
  std::optional<Vec> witness;

  /// True iff the strict rows can all hold strictly together with the rest.
  bool positive() const { return slack > ExtendedRational(0); }
};

/// sup of eps >= 0 such that some x meets the equalities and weak rows and
/// every strict row `a . x <= rhs - eps`.
SlackResult max_slack(const Constraints& equalities, const Constraints& weak, const Constraints& strict,
                      std::size_t dimension);

/// Lexicographically smallest point of the optimal face of `lp` with respect
/// to the first `coordinates` coordinates, found by fixing the optimal value
/// and minimizing each coordinate in turn. If a coordinate is unbounded below
/// on the face the refinement stops there and the current vertex is kept.
/// Returns the outcome of the base solve when it is not Optimal.
LpOutcome lp_solve_lexmin(const LinearProgram& lp, std::size_t coordinates);

}  // namespace pdc
