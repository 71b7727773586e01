#pragma once

// Cross-checks of the classifiers against direct evaluation of f on a
// rational grid. Only for dimension <= 2 and a bounded feasible region.
//
// The neighborhood checks are exact statements only when f is affine on
// every grid cell edge (kinks aligned with the grid); elsewhere a failure
// means the grid is too coarse rather than a wrong classification.

#include <cstddef>
#include <string>
#include <vector>

#include "pdc/model.hpp"

namespace pdc {

struct GridCheck {
  std::string name;
  bool skipped = false;
  std::string skip_reason;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First offending grid point, when there is one.
  std::optional<Vec> first_failure;
};

struct GridReport {
  Rational step;
  Vec lower;
  Vec upper;
  std::size_t points = 0;  // feasible grid points
  std::vector<GridCheck> checks;

  bool passed() const;
};

/// Axis-aligned bounding box of dom g n dom h n C. Throws
/// PreconditionError if that set is unbounded.
std::pair<Vec, Vec> bounding_box(const DcProblem& prob);

/// Feasible points of the step grid inside the bounding box, in
/// lexicographic order.
std::vector<Vec> grid_points(const DcProblem& prob, const Rational& step);

/// Runs the implication-chain, neighborhood-minimum, descent, piece-union
/// and global-value checks. Throws PreconditionError for dimension > 2, a
/// nonpositive step, or an unbounded region.
GridReport verify_on_grid(const DcProblem& prob, const Rational& step);

}  // namespace pdc
