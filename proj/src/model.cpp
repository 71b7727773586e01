#include "pdc/model.hpp"

#include <algorithm>

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"

namespace pdc {

namespace {

void require_dimension(const Vec& x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n));
  }
}

// Inequality rows with a zero normal are either vacuous (0 <= rhs) or make
// the set empty; most geometric tests skip the vacuous ones.
bool vacuous(const LinearConstraint& row) { return is_zero(row.a) && sgn(row.rhs) >= 0; }

}  // namespace

Rational AffinePiece::dot(const Vec& a, const Vec& b) { return pdc::dot(a, b); }

bool operator==(const AffinePiece& a, const AffinePiece& b) { return a.u == b.u && a.alpha == b.alpha; }

void PolyhedralSet::validate() const {
  if (dimension == 0) throw DimensionError("polyhedral set of dimension 0");
  for (const auto& e : equalities) require_dimension(e.a, dimension, "equality row");
  for (const auto& r : inequalities) require_dimension(r.a, dimension, "inequality row");
}

bool PolyhedralSet::is_empty() const { return !some_point(); }

std::optional<Vec> PolyhedralSet::some_point() const { return lp_feasible(equalities, inequalities, dimension); }

PolyhedralSet intersect(const PolyhedralSet& a, const PolyhedralSet& b) {
  if (a.dimension != b.dimension) throw DimensionError("intersecting sets of different dimension");
  PolyhedralSet out = a;
  out.equalities.insert(out.equalities.end(), b.equalities.begin(), b.equalities.end());
  out.inequalities.insert(out.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  return out;
}

void MaxAffine::validate() const {
  domain.validate();
  if (pieces.empty()) throw PreconditionError("max-affine function without pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    require_dimension(pieces[i].u, domain.dimension, "piece gradient");
    for (std::size_t j = 0; j < i; ++j) {
      if (pieces[i] == pieces[j]) {
        throw PreconditionError("pieces " + std::to_string(j) + " and " + std::to_string(i) + " are identical");
      }
    }
  }
}

DcProblem make_problem(MaxAffine g, MaxAffine h, PolyhedralSet C) {
  C.validate();
  g.validate();
  h.validate();
  if (g.dimension() != C.dimension || h.dimension() != C.dimension) {
    throw DimensionError("g, h and C must share one dimension");
  }
  if (intersect(g.domain, C).is_empty()) {
    throw PreconditionError("standing assumption violated: dom g and C do not intersect");
  }
  return DcProblem{std::move(g), std::move(h), std::move(C)};
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  if (a.dimension != b.dimension) throw DimensionError("Minkowski sum of bodies of different dimension");
  ConvexBody out{a.dimension, {}, a.rays, a.lineality};
  for (const auto& p : a.points) {
    for (const auto& q : b.points) out.points.push_back(add(p, q));
  }
  out.rays.insert(out.rays.end(), b.rays.begin(), b.rays.end());
  out.lineality.insert(out.lineality.end(), b.lineality.begin(), b.lineality.end());
  return out;
}

namespace {

// Feasibility of  sum lambda_k p_k + sum mu_r r + sum nu_l l = target,
// lambda, mu >= 0, and sum lambda = 1 when `with_points`.
bool generated(const ConvexBody& body, const Vec& target, bool with_points) {
  const std::size_t n = body.dimension;
  require_dimension(target, n, "query vector");
  const std::size_t np = with_points ? body.points.size() : 0;
  const std::size_t nr = body.rays.size();
  const std::size_t nl = body.lineality.size();
  const std::size_t vars = np + nr + nl;
  if (with_points && np == 0) return false;

  Constraints eqs;
  for (std::size_t coord = 0; coord < n; ++coord) {
    LinearConstraint row{zeros(vars), target[coord]};
    for (std::size_t k = 0; k < np; ++k) row.a[k] = body.points[k][coord];
    for (std::size_t k = 0; k < nr; ++k) row.a[np + k] = body.rays[k][coord];
    for (std::size_t k = 0; k < nl; ++k) row.a[np + nr + k] = body.lineality[k][coord];
    eqs.push_back(std::move(row));
  }
  if (with_points) {
    LinearConstraint sum{zeros(vars), 1};
    for (std::size_t k = 0; k < np; ++k) sum.a[k] = 1;
    eqs.push_back(std::move(sum));
  }
  if (vars == 0) return is_zero(target);
  Constraints nonneg;
  for (std::size_t k = 0; k < np + nr; ++k) nonneg.push_back({negate(unit(vars, k)), 0});
  return lp_feasible(eqs, nonneg, vars).has_value();
}

}  // namespace

bool body_contains(const ConvexBody& body, const Vec& p) { return generated(body, p, true); }

bool recession_contains(const ConvexBody& body, const Vec& d) { return generated(body, d, false); }

bool membership(const PolyhedralSet& C, const Vec& x) {
  require_dimension(x, C.dimension, "point");
  for (const auto& e : C.equalities) {
    if (dot(e.a, x) != e.rhs) return false;
  }
  for (const auto& r : C.inequalities) {
    if (dot(r.a, x) > r.rhs) return false;
  }
  return true;
}

bool is_interior(const PolyhedralSet& C, const Vec& x) {
  if (!membership(C, x)) return false;
  for (const auto& e : C.equalities) {
    if (!is_zero(e.a)) return false;
  }
  Constraints strict;
  for (const auto& r : C.inequalities) {
    if (vacuous(r)) continue;
    if (dot(r.a, x) == r.rhs) return false;
    strict.push_back(r);
  }
  if (strict.empty()) return true;
  return max_slack(C.equalities, {}, strict, C.dimension).positive();
}

ConvexBody normal_cone(const PolyhedralSet& C, const Vec& x) {
  if (!membership(C, x)) throw DomainError("normal cone requested at a point outside the set");
  ConvexBody out{C.dimension, {zeros(C.dimension)}, {}, {}};
  for (const auto& r : C.inequalities) {
    if (!is_zero(r.a) && dot(r.a, x) == r.rhs) out.rays.push_back(r.a);
  }
  Matrix eq_rows;
  for (const auto& e : C.equalities) eq_rows.push_back(e.a);
  out.lineality = row_space_basis(eq_rows);
  return out;
}

ExtendedRational eval(const MaxAffine& f, const Vec& x) {
  require_dimension(x, f.dimension(), "point");
  if (!membership(f.domain, x)) return ExtendedRational::plus_infinity();
  Rational best = f.pieces.front().at(x);
  for (std::size_t i = 1; i < f.pieces.size(); ++i) {
    const Rational v = f.pieces[i].at(x);
    if (v > best) best = v;
  }
  return ExtendedRational(best);
}

IndexSet active_indices(const MaxAffine& f, const Vec& x) {
  const ExtendedRational value = eval(f, x);
  if (!value.is_finite()) throw DomainError("active set requested outside the domain");
  IndexSet out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    if (f.pieces[i].at(x) == value.value()) out.push_back(i);
  }
  return out;
}

ConvexBody subdifferential(const MaxAffine& f, const Vec& x) {
  const IndexSet active = active_indices(f, x);
  ConvexBody out = normal_cone(f.domain, x);
  out.points.clear();
  for (std::size_t i : active) out.points.push_back(f.pieces[i].u);
  return out;
}

std::optional<ContainmentViolation> containment_violation(const PolyhedralSet& outer, const PolyhedralSet& inner,
                                                          bool strictly) {
  if (outer.dimension != inner.dimension) throw DimensionError("containment test across dimensions");
  if (inner.is_empty()) throw PreconditionError("containment test with an empty inner set");

  auto maximize = [&](const Vec& a) {
    LinearProgram lp{inner.dimension, negate(a), inner.equalities, inner.inequalities};
    return lp_solve(lp);
  };

  for (std::size_t i = 0; i < outer.equalities.size(); ++i) {
    const auto& e = outer.equalities[i];
    if (is_zero(e.a)) {
      if (sgn(e.rhs) != 0) return ContainmentViolation{true, i, "equality row is inconsistent"};
      continue;
    }
    if (strictly) return ContainmentViolation{true, i, "equality row leaves the outer set without interior"};
    const LpOutcome hi = maximize(e.a);
    const LpOutcome lo = maximize(negate(e.a));
    if (!hi.optimal() || !lo.optimal() || -hi.value != e.rhs || lo.value != e.rhs) {
      return ContainmentViolation{true, i, "equality not constant on the inner set"};
    }
  }
  for (std::size_t i = 0; i < outer.inequalities.size(); ++i) {
    const auto& r = outer.inequalities[i];
    if (vacuous(r)) continue;
    if (is_zero(r.a)) return ContainmentViolation{false, i, "inequality row is inconsistent"};
    const LpOutcome hi = maximize(r.a);
    if (hi.status == LpStatus::Unbounded) return ContainmentViolation{false, i, "unbounded above on the inner set"};
    const Rational max_value = -hi.value;
    if (max_value > r.rhs || (strictly && max_value == r.rhs)) {
      return ContainmentViolation{false, i,
                                  "maximum " + to_string(max_value) + (strictly ? " not below " : " exceeds ") +
                                      "bound " + to_string(r.rhs)};
    }
  }
  return std::nullopt;
}

bool contains_set(const PolyhedralSet& outer, const PolyhedralSet& inner, bool strictly) {
  return !containment_violation(outer, inner, strictly).has_value();
}

MaxAffine restrict_sum(const MaxAffine& g, const PolyhedralSet& C) {
  MaxAffine out{g.pieces, intersect(g.domain, C)};
  if (out.domain.is_empty()) throw PreconditionError("dom g and C do not intersect");
  return out;
}

ExtendedRational conjugate_value(const MaxAffine& f, const Vec& xi) {
  const std::size_t n = f.dimension();
  require_dimension(xi, n, "dual vector");
  // Variables (x, t): minimize t - xi . x with u_i . x + alpha_i <= t on dom f.
  LinearProgram lp;
  lp.dimension = n + 1;
  lp.objective = negate(xi);
  lp.objective.push_back(1);
  auto lift = [](const LinearConstraint& row) {
    LinearConstraint out = row;
    out.a.push_back(0);
    return out;
  };
  for (const auto& e : f.domain.equalities) lp.equalities.push_back(lift(e));
  for (const auto& r : f.domain.inequalities) lp.inequalities.push_back(lift(r));
  for (const auto& p : f.pieces) {
    Vec row = p.u;
    row.push_back(-1);
    lp.inequalities.push_back({std::move(row), Rational(-p.alpha)});
  }
  const LpOutcome out = lp_solve(lp);
  switch (out.status) {
    case LpStatus::Infeasible: throw PreconditionError("conjugate of a function with empty domain");
    case LpStatus::Unbounded: return ExtendedRational::plus_infinity();
    case LpStatus::Optimal: break;
  }
  return ExtendedRational(Rational(-out.value));
}

ExtendedRational objective(const DcProblem& prob, const Vec& x) {
  if (!membership(prob.C, x)) return ExtendedRational::plus_infinity();
  return eval(prob.g, x) - eval(prob.h, x);
}

}  // namespace pdc
