#include "pdc/dca.hpp"

#include <algorithm>

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"
#include "pdc/optimality.hpp"

namespace pdc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool in_domain(const DcProblem& prob, const Vec& x) { return membership(prob.C, x) && membership(prob.g.domain, x); }

}  // namespace

bool is_deterministic(const SelectionRule& rule) { return !std::holds_alternative<Scripted>(rule); }

std::string rule_name(const SelectionRule& rule) {
  return std::visit(overloaded{[](const MinIndexActive&) { return std::string("min-index"); },
                               [](const MaxIndexActive&) { return std::string("max-index"); },
                               [](const ActiveSetTable&) { return std::string("table"); },
                               [](const Scripted&) { return std::string("script"); }},
                    rule);
}

Vec select_subgradient(const MaxAffine& h, const Vec& x, const SelectionRule& rule, std::size_t step) {
  const IndexSet active = active_indices(h, x);
  return std::visit(
      overloaded{
          [&](const MinIndexActive&) { return h.pieces[active.front()].u; },
          [&](const MaxIndexActive&) { return h.pieces[active.back()].u; },
          [&](const ActiveSetTable& t) {
            const auto it = t.choice.find(active);
            std::string key;
            for (std::size_t j : active) key += (key.empty() ? "" : ",") + std::to_string(j);
            if (it == t.choice.end()) throw PreconditionError("selection table has no entry for active set {" + key + "}");
            if (!std::binary_search(active.begin(), active.end(), it->second)) {
              throw PreconditionError("selection table picks inactive piece " + std::to_string(it->second) +
                                      " for active set {" + key + "}");
            }
            return h.pieces[it->second].u;
          },
          [&](const Scripted& s) {
            if (step >= s.subgradients.size()) {
              throw PreconditionError("script exhausted at step " + std::to_string(step));
            }
            const Vec& xi = s.subgradients[step];
            if (xi.size() != h.dimension()) throw DimensionError("scripted vector has the wrong dimension");
            if (!body_contains(subdifferential(h, x), xi)) {
              throw PreconditionError("scripted vector at step " + std::to_string(step) +
                                      " is not a subgradient of h at " + to_string(x));
            }
            return xi;
          }},
      rule);
}

SubproblemResult solve_subproblem(const MaxAffine& g, const PolyhedralSet& C, const Vec& xi) {
  const std::size_t n = C.dimension;
  if (xi.size() != n || g.dimension() != n) throw DimensionError("subproblem data of mixed dimension");
  const PolyhedralSet region = intersect(g.domain, C);

  LinearProgram lp;
  lp.dimension = n + 1;
  lp.objective = negate(xi);
  lp.objective.push_back(1);
  for (const auto& e : region.equalities) {
    lp.equalities.push_back({e.a, e.rhs});
    lp.equalities.back().a.push_back(0);
  }
  for (const auto& r : region.inequalities) {
    lp.inequalities.push_back({r.a, r.rhs});
    lp.inequalities.back().a.push_back(0);
  }
  for (const auto& p : g.pieces) {
    Vec row = p.u;
    row.push_back(-1);
    lp.inequalities.push_back({std::move(row), Rational(-p.alpha)});
  }
  const LpOutcome out = lp_solve_lexmin(lp, n);
  SubproblemResult result;
  if (out.status == LpStatus::Infeasible) throw PreconditionError("dom g and C do not intersect");
  if (out.status == LpStatus::Unbounded) return result;
  result.bounded = true;
  result.value = out.value;
  result.x.assign(out.point.begin(), out.point.end() - 1);
  return result;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::FixedPoint: return "fixed-point";
    case Termination::Cycle: return "cycle";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::SubproblemUnbounded: return "subproblem-unbounded";
    case Termination::SubdifferentialEmpty: return "subdifferential-empty";
  }
  return "?";
}

DcaTrace run_dca(const DcProblem& prob, const Vec& x0, const SelectionRule& rule, std::size_t max_iter) {
  if (x0.size() != prob.dimension()) throw DimensionError("starting point has the wrong dimension");
  if (!in_domain(prob, x0)) throw PreconditionError("starting point is not in dom g n C");

  const bool deterministic = is_deterministic(rule);
  const auto* script = std::get_if<Scripted>(&rule);
  DcaTrace trace;
  std::map<Vec, std::size_t> seen;
  trace.iterates.push_back({x0, std::nullopt, objective(prob, x0)});

  for (std::size_t k = 0;; ++k) {
    const Vec x = trace.iterates[k].x;
    if (k >= max_iter || (script && k >= script->subgradients.size())) {
      trace.termination = Termination::MaxIterations;
      trace.step = k;
      return trace;
    }
    seen.emplace(x, k);
    if (!membership(prob.h.domain, x)) {
      trace.termination = Termination::SubdifferentialEmpty;
      trace.step = k;
      return trace;
    }
    Vec xi = select_subgradient(prob.h, x, rule, k);
    const SubproblemResult next = solve_subproblem(prob.g, prob.C, xi);
    trace.iterates[k].xi = std::move(xi);
    if (!next.bounded) {
      trace.termination = Termination::SubproblemUnbounded;
      trace.step = k;
      return trace;
    }
    trace.iterates.push_back({next.x, std::nullopt, objective(prob, next.x)});
    if (next.x == x) {
      trace.termination = Termination::FixedPoint;
      trace.step = k;
      return trace;
    }
    if (deterministic) {
      const auto it = seen.find(next.x);
      if (it != seen.end()) {
        trace.termination = Termination::Cycle;
        trace.cycle_start = it->second;
        trace.period = k + 1 - it->second;
        return trace;
      }
    }
  }
}

TraceReport validate_trace(const DcProblem& prob, const std::vector<Vec>& xs, const std::vector<Vec>& xis) {
  if (xs.empty()) throw DimensionError("trace has no points");
  if (xis.size() + 1 != xs.size() && xis.size() != xs.size()) {
    throw DimensionError("trace needs one subgradient per step (" + std::to_string(xs.size() - 1) + " or " +
                         std::to_string(xs.size()) + "), got " + std::to_string(xis.size()));
  }
  const std::size_t n = prob.dimension();
  for (const auto& v : xs) {
    if (v.size() != n) throw DimensionError("trace point has the wrong dimension");
  }
  for (const auto& v : xis) {
    if (v.size() != n) throw DimensionError("trace subgradient has the wrong dimension");
  }

  auto subgradient_ok = [&](const Vec& x, const Vec& xi) {
    return membership(prob.h.domain, x) && body_contains(subdifferential(prob.h, x), xi);
  };

  TraceReport report;
  for (const auto& x : xs) report.values.push_back(objective(prob, x));
  report.valid = true;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    StepCheck step;
    const Vec& xi = xis[k];
    const Vec& next = xs[k + 1];
    step.subgradient = subgradient_ok(xs[k], xi);
    if (in_domain(prob, next)) {
      const SubproblemResult sub = solve_subproblem(prob.g, prob.C, xi);
      const Rational at_next = eval(prob.g, next).value() - dot(xi, next);
      step.minimizer = body_contains(restricted_subdifferential(prob, next), xi) && sub.bounded &&
                       at_next == sub.value;
    }
    step.descent = report.values[k + 1] <= report.values[k];
    report.valid = report.valid && step.subgradient && step.minimizer && step.descent;
    report.steps.push_back(step);
  }
  if (xis.size() == xs.size()) {
    report.trailing_subgradient = subgradient_ok(xs.back(), xis.back());
    report.valid = report.valid && *report.trailing_subgradient;
  }
  return report;
}

}  // namespace pdc
