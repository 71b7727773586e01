#include "pdc/duality.hpp"

#include <algorithm>

#include "pdc/dca.hpp"
#include "pdc/structure.hpp"

namespace pdc {

namespace {

constexpr std::size_t kDualRunLimit = 1000;

void add_candidate(DualReport& report, const DcProblem& prob, const Vec& xi, std::string origin) {
  const bool known = std::any_of(report.candidates.begin(), report.candidates.end(),
                                 [&](const DualCandidate& c) { return c.xi == xi; });
  if (!known) report.candidates.push_back({xi, dual_objective(prob, xi), std::move(origin)});
}

}  // namespace

ExtendedRational dual_objective(const DcProblem& prob, const Vec& xi) {
  return conjugate_value(prob.h, xi) - conjugate_value(restrict_sum(prob.g, prob.C), xi);
}

DualReport toland_singer_check(const DcProblem& prob) {
  const GlobalSolutions global = global_solutions(prob);
  DualReport report;
  report.primal_value = global.alpha_bar;

  for (std::size_t j = 0; j < prob.h.pieces.size(); ++j) {
    add_candidate(report, prob, prob.h.pieces[j].u, "piece " + std::to_string(j));
  }
  if (!global.unbounded()) {
    for (std::size_t j : global.j_star) {
      const auto& start = global.linearizations[j].witness;
      const DcaTrace trace = run_dca(prob, *start, MinIndexActive{}, kDualRunLimit);
      for (const auto& it : trace.iterates) {
        if (it.xi) add_candidate(report, prob, *it.xi, "dca from face " + std::to_string(j));
      }
    }
    const Vec& solution = *global.linearizations[global.j_star.front()].witness;
    for (std::size_t j : active_indices(prob.h, solution)) {
      if (dual_objective(prob, prob.h.pieces[j].u) == global.alpha_bar) {
        report.attained_at = prob.h.pieces[j].u;
        break;
      }
    }
  }
  report.bounded_below = std::all_of(report.candidates.begin(), report.candidates.end(),
                                     [&](const DualCandidate& c) { return c.value >= report.primal_value; });
  return report;
}

}  // namespace pdc
