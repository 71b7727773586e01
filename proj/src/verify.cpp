#include "pdc/verify.hpp"

#include <algorithm>

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"
#include "pdc/optimality.hpp"
#include "pdc/structure.hpp"

namespace pdc {

namespace {

PolyhedralSet region_of(const DcProblem& prob) {
  return intersect(intersect(prob.C, prob.g.domain), prob.h.domain);
}

void record(GridCheck& check, bool ok, const Vec& x) {
  ++check.checked;
  if (ok) return;
  if (check.failures++ == 0) check.first_failure = x;
}

// All offsets in {-1, 0, 1}^n except zero.
std::vector<Vec> neighbor_offsets(std::size_t n, const Rational& step) {
  std::vector<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Vec d(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) d[i] = step * (static_cast<long>(c % 3) - 1);
    if (!is_zero(d)) out.push_back(std::move(d));
  }
  return out;
}

GridCheck named(std::string name) {
  GridCheck c;
  c.name = std::move(name);
  return c;
}

}  // namespace

bool GridReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GridCheck& c) { return c.failures == 0; });
}

std::pair<Vec, Vec> bounding_box(const DcProblem& prob) {
  const PolyhedralSet region = region_of(prob);
  const std::size_t n = prob.dimension();
  Vec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const int sign : {1, -1}) {
      const LpOutcome out = lp_solve({n, scale(Rational(sign), unit(n, i)), region.equalities, region.inequalities});
      if (!out.optimal()) throw PreconditionError("feasible region is unbounded or empty along coordinate " + std::to_string(i));
      (sign > 0 ? lo : hi)[i] = sign * out.value;
    }
  }
  return {lo, hi};
}

std::vector<Vec> grid_points(const DcProblem& prob, const Rational& step) {
  if (sgn(step) <= 0) throw PreconditionError("grid step must be positive");
  const auto [lo, hi] = bounding_box(prob);
  const PolyhedralSet region = region_of(prob);
  const std::size_t n = prob.dimension();
  Vec first(n), last(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = ceil_to_multiple(lo[i], step);
    last[i] = floor_to_multiple(hi[i], step);
    if (first[i] > last[i]) return {};
  }
  std::vector<Vec> out;
  Vec x = first;
  while (true) {
    if (membership(region, x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < last[i]) {
        x[i] += step;
        for (std::size_t k = i + 1; k < n; ++k) x[k] = first[k];
        break;
      }
      if (i == 0) return out;
    }
  }
}

GridReport verify_on_grid(const DcProblem& prob, const Rational& step) {
  const std::size_t n = prob.dimension();
  if (n > 2) throw PreconditionError("grid verification supports dimension 1 and 2 only");
  GridReport report;
  report.step = step;
  std::tie(report.lower, report.upper) = bounding_box(prob);
  const std::vector<Vec> points = grid_points(prob, step);
  report.points = points.size();
  const PolyhedralSet region = region_of(prob);
  const std::vector<Vec> offsets = neighbor_offsets(n, step);

  std::optional<SolutionStructure> structure;
  std::string hypothesis_failure;
  try {
    structure = analyze_structure(prob);
  } catch (const HypothesisError& e) {
    hypothesis_failure = e.what();
  }

  GridCheck chain = named("implication-chain");
  GridCheck local_min = named("local-solutions-are-grid-minima");
  GridCheck descent = named("interior-nonstationary-has-better-neighbor");
  GridCheck pieces = named("stationary-equals-piece-union");
  GridCheck global = named("global-value-consistency");
  if (!structure) {
    for (GridCheck* c : {&pieces, &global}) {
      c->skipped = true;
      c->skip_reason = hypothesis_failure;
    }
  } else if (structure->global.unbounded()) {
    global.skipped = true;
    global.skip_reason = "problem is unbounded below";
  }

  for (const Vec& x : points) {
    const Classification c = structure ? classify(prob, x, structure->global) : classify(prob, x, false);
    const ExtendedRational fx = objective(prob, x);
    record(chain, (c.local != LocalVerdict::Yes || c.stationary) && (!c.stationary || c.critical) &&
                      (c.global != GlobalVerdict::Yes || c.local == LocalVerdict::Yes),
           x);

    bool better = false;
    for (const Vec& d : offsets) {
      const Vec y = add(x, d);
      if (!membership(region, y)) continue;
      const ExtendedRational fy = objective(prob, y);
      if (fy < fx) better = true;
    }
    if (c.local == LocalVerdict::Yes) record(local_min, !better, x);
    if (!c.stationary && is_interior(region, x)) record(descent, better, x);

    if (!structure) continue;
    const bool in_union = std::any_of(structure->pieces.begin(), structure->pieces.end(),
                                      [&](const SemiClosedPiece& p) { return piece_membership(p, prob.h, x); });
    record(pieces, in_union == c.stationary, x);
    if (!global.skipped) {
      const bool in_face = std::any_of(structure->global.j_star.begin(), structure->global.j_star.end(), [&](std::size_t j) {
        return membership(*structure->global.linearizations[j].face, x);
      });
      const bool ok = in_face ? fx == structure->global.alpha_bar : fx > structure->global.alpha_bar;
      record(global, ok && ((c.global == GlobalVerdict::Yes) == in_face), x);
    }
  }
  report.checks = {chain, local_min, descent, pieces, global};
  return report;
}

}  // namespace pdc
