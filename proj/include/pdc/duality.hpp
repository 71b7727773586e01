#pragma once

// Value oracles for the dual DC program min h*(xi) - (g + indicator C)*(xi)
// and a check that its values never fall below the primal optimum.

#include <optional>
#include <string>
#include <vector>

#include "pdc/model.hpp"

namespace pdc {

/// h*(xi) - (g + indicator C)*(xi), with (+inf) - (+inf) = +inf.
ExtendedRational dual_objective(const DcProblem& prob, const Vec& xi);

struct DualCandidate {
  Vec xi;
  ExtendedRational value;
  std::string origin;  // "piece j" or "dca from face j"
};

struct DualReport {
  ExtendedRational primal_value;
  std::vector<DualCandidate> candidates;
  /// Gradient of an active piece of h at a global solution whose dual value
  /// equals the primal value, when one exists.
  std::optional<Vec> attained_at;
  /// Every candidate value is >= the primal value.
  bool bounded_below = false;
};

/// Candidates: every gradient of h, plus the subgradients visited by
/// min-index DCA runs started at a point of each global face. Throws
/// HypothesisError when the decomposition hypotheses fail.
DualReport toland_singer_check(const DcProblem& prob);

}  // namespace pdc
