#include "pdc/optimality.hpp"

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"
#include "pdc/structure.hpp"

namespace pdc {

namespace {

void require_nonempty(const ConvexBody& b, const char* name) {
  if (b.empty()) throw PreconditionError(std::string(name) + " body is empty");
}

// Column layout for one body's generators inside a weight LP.
struct Block {
  const ConvexBody* body;
  std::size_t offset;
  std::size_t size() const { return body->points.size() + body->rays.size() + body->lineality.size(); }
};

Vec combine(const ConvexBody& body, const Vec& weights, std::size_t offset) {
  Vec out = zeros(body.dimension);
  std::size_t k = offset;
  for (const auto& p : body.points) out = axpy(out, weights[k++], p);
  for (const auto& r : body.rays) out = axpy(out, weights[k++], r);
  for (const auto& l : body.lineality) out = axpy(out, weights[k++], l);
  return out;
}

void require_feasible(const DcProblem& prob, const Vec& x) {
  if (x.size() != prob.dimension()) throw DimensionError("point has the wrong dimension");
  if (!membership(prob.C, x)) throw PreconditionError("point is not in C");
  if (!membership(prob.g.domain, x)) throw PreconditionError("point is not in dom g");
  if (!membership(prob.h.domain, x)) throw PreconditionError("point is not in dom h");
}

bool feasible_point(const DcProblem& prob, const Vec& x) {
  return membership(prob.C, x) && membership(prob.g.domain, x) && membership(prob.h.domain, x);
}

}  // namespace

bool body_in_body(const ConvexBody& p, const ConvexBody& q) {
  if (p.dimension != q.dimension) throw DimensionError("bodies of different dimension");
  require_nonempty(p, "inner");
  require_nonempty(q, "outer");
  for (const auto& pt : p.points) {
    if (!body_contains(q, pt)) return false;
  }
  for (const auto& r : p.rays) {
    if (!recession_contains(q, r)) return false;
  }
  for (const auto& l : p.lineality) {
    if (!recession_contains(q, l) || !recession_contains(q, negate(l))) return false;
  }
  return true;
}

std::optional<Vec> bodies_intersect(const ConvexBody& p, const ConvexBody& q) {
  if (p.dimension != q.dimension) throw DimensionError("bodies of different dimension");
  if (p.empty() || q.empty()) return std::nullopt;
  const Block a{&p, 0};
  const Block b{&q, a.size()};
  const std::size_t vars = a.size() + b.size();
  const std::size_t n = p.dimension;

  Constraints eqs;
  for (std::size_t coord = 0; coord < n; ++coord) {
    LinearConstraint row{zeros(vars), 0};
    for (const auto& [blk, sign] : {std::pair{a, 1}, std::pair{b, -1}}) {
      std::size_t k = blk.offset;
      for (const auto& v : blk.body->points) row.a[k++] = sign * v[coord];
      for (const auto& v : blk.body->rays) row.a[k++] = sign * v[coord];
      for (const auto& v : blk.body->lineality) row.a[k++] = sign * v[coord];
    }
    eqs.push_back(std::move(row));
  }
  Constraints nonneg;
  for (const Block& blk : {a, b}) {
    LinearConstraint sum{zeros(vars), 1};
    const std::size_t signed_count = blk.body->points.size() + blk.body->rays.size();
    for (std::size_t k = 0; k < blk.body->points.size(); ++k) sum.a[blk.offset + k] = 1;
    eqs.push_back(std::move(sum));
    for (std::size_t k = 0; k < signed_count; ++k) nonneg.push_back({negate(unit(vars, blk.offset + k)), 0});
  }
  const auto weights = lp_feasible(eqs, nonneg, vars);
  if (!weights) return std::nullopt;
  return combine(p, *weights, 0);
}

ConvexBody restricted_subdifferential(const DcProblem& prob, const Vec& x) {
  return minkowski_sum(subdifferential(prob.g, x), normal_cone(prob.C, x));
}

bool is_critical(const DcProblem& prob, const Vec& x) {
  require_feasible(prob, x);
  return bodies_intersect(subdifferential(prob.h, x), restricted_subdifferential(prob, x)).has_value();
}

bool is_stationary(const DcProblem& prob, const Vec& x) {
  require_feasible(prob, x);
  return body_in_body(subdifferential(prob.h, x), restricted_subdifferential(prob, x));
}

bool is_stationary_by_generators(const DcProblem& prob, const Vec& x) {
  require_feasible(prob, x);
  ConvexBody target{prob.dimension(), {}, {}, {}};
  for (std::size_t i : active_indices(prob.g, x)) target.points.push_back(prob.g.pieces[i].u);
  for (const PolyhedralSet* set : {&prob.C, &prob.g.domain}) {
    for (const auto& r : set->inequalities) {
      if (dot(r.a, x) == r.rhs) target.rays.push_back(r.a);
    }
    for (const auto& e : set->equalities) target.lineality.push_back(e.a);
  }
  for (std::size_t j : active_indices(prob.h, x)) {
    if (!body_contains(target, prob.h.pieces[j].u)) return false;
  }
  return true;
}

const char* to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::Yes: return "yes";
    case LocalVerdict::No: return "no";
    case LocalVerdict::UnknownHypothesisNotMet: return "unknown-hypothesis-not-met";
  }
  return "?";
}

const char* to_string(GlobalVerdict v) {
  switch (v) {
    case GlobalVerdict::Yes: return "yes";
    case GlobalVerdict::No: return "no";
    case GlobalVerdict::NotComputed: return "not-computed";
  }
  return "?";
}

LocalVerdict is_local_solution(const DcProblem& prob, const Vec& x) {
  const bool stationary = is_stationary(prob, x);
  if (!stationary) return LocalVerdict::No;
  return is_interior(prob.h.domain, x) ? LocalVerdict::Yes : LocalVerdict::UnknownHypothesisNotMet;
}

namespace {

Classification classify_local(const DcProblem& prob, const Vec& x) {
  if (x.size() != prob.dimension()) throw DimensionError("point has the wrong dimension");
  Classification c;
  c.feasible = feasible_point(prob, x);
  if (!c.feasible) {
    c.local = LocalVerdict::No;
    return c;
  }
  c.flags.interior_dom_g = is_interior(prob.g.domain, x);
  c.flags.interior_dom_h = is_interior(prob.h.domain, x);
  c.flags.interior_both = c.flags.interior_dom_g && c.flags.interior_dom_h;
  for (const PolyhedralSet* dom : {&prob.g.domain, &prob.h.domain}) {
    const ConvexBody cone = normal_cone(*dom, x);
    if (!cone.rays.empty() || !cone.lineality.empty()) c.flags.boundary_extension = true;
  }
  c.critical = is_critical(prob, x);
  c.stationary = is_stationary(prob, x);
  if (!c.stationary) {
    c.local = LocalVerdict::No;
  } else {
    c.local = c.flags.interior_dom_h ? LocalVerdict::Yes : LocalVerdict::UnknownHypothesisNotMet;
  }
  return c;
}

void apply_global(Classification& c, const DcProblem& prob, const Vec& x, const GlobalSolutions& global) {
  if (!c.feasible || global.unbounded()) {
    c.global = GlobalVerdict::No;
    return;
  }
  c.global = objective(prob, x) == global.alpha_bar ? GlobalVerdict::Yes : GlobalVerdict::No;
}

}  // namespace

Classification classify(const DcProblem& prob, const Vec& x, bool compute_global) {
  Classification c = classify_local(prob, x);
  if (!compute_global) return c;
  try {
    apply_global(c, prob, x, global_solutions(prob));
  } catch (const HypothesisError&) {
    c.global = GlobalVerdict::NotComputed;
  }
  return c;
}

Classification classify(const DcProblem& prob, const Vec& x, const GlobalSolutions& global) {
  Classification c = classify_local(prob, x);
  apply_global(c, prob, x, global);
  return c;
}

}  // namespace pdc
