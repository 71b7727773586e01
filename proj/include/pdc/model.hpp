#pragma once

// Problem data: polyhedral sets in H-representation, max-affine functions
// over a polyhedral domain, and DC problems f = g - h on a polyhedron C.
// Subdifferentials and normal cones come back as generator bodies.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdc/lp.hpp"
#include "pdc/rational.hpp"

namespace pdc {

using IndexSet = std::vector<std::size_t>;  // ascending, duplicate-free

/// {x in Q^n : a . x = y for every equality, a . x <= rhs for every inequality}.
/// No constraints means the whole space.
struct PolyhedralSet {
  std::size_t dimension = 0;
  Constraints equalities;
  Constraints inequalities;

  static PolyhedralSet whole_space(std::size_t n) { return PolyhedralSet{n, {}, {}}; }

  /// Throws DimensionError if any row has the wrong length.
  void validate() const;
  bool is_empty() const;
  std::optional<Vec> some_point() const;
};

/// Constraint-list concatenation (set intersection).
PolyhedralSet intersect(const PolyhedralSet& a, const PolyhedralSet& b);

/// x -> u . x + alpha
struct AffinePiece {
  Vec u;
  Rational alpha;

  Rational at(const Vec& x) const { return dot(u, x) + alpha; }
  static Rational dot(const Vec& a, const Vec& b);
};

bool operator==(const AffinePiece& a, const AffinePiece& b);

/// max_i (u_i . x + alpha_i) on `domain`, +inf outside it.
struct MaxAffine {
  std::vector<AffinePiece> pieces;
  PolyhedralSet domain;

  std::size_t dimension() const { return domain.dimension; }
  /// Throws on an empty piece list, wrong lengths, or exactly repeated pieces.
  void validate() const;
};

/// Minimize f = g - h over C. Construct through make_problem, which checks
/// dimensions and that dom g meets C.
struct DcProblem {
  MaxAffine g;
  MaxAffine h;
  PolyhedralSet C;

  std::size_t dimension() const { return C.dimension; }
};

/// Validates the data and the standing assumption (dom g) n C != empty.
/// Throws DimensionError or PreconditionError.
DcProblem make_problem(MaxAffine g, MaxAffine h, PolyhedralSet C);

/// conv(points) + cone(rays) + span(lineality). Empty iff `points` is empty;
/// a cone has the single point 0.
struct ConvexBody {
  std::size_t dimension = 0;
  std::vector<Vec> points;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;

  bool empty() const { return points.empty(); }
};

/// Minkowski sum: pairwise point sums, rays and lineality concatenated.
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// Exact membership of a point in a body (one feasibility LP).
bool body_contains(const ConvexBody& body, const Vec& p);

/// Membership of a direction in the body's recession cone cone(rays) + span(lineality).
bool recession_contains(const ConvexBody& body, const Vec& d);

bool membership(const PolyhedralSet& C, const Vec& x);

/// Topological interior in Q^n: x in C, every nonvacuous inequality strict
/// at x, no nonzero equality rows, and a positive slack with all
/// inequalities made strict.
bool is_interior(const PolyhedralSet& C, const Vec& x);

/// Tight inequality normals plus a basis of the equality row space.
/// Throws DomainError if x is not in C.
ConvexBody normal_cone(const PolyhedralSet& C, const Vec& x);

/// Value of f at x; +inf outside dom f. Throws DimensionError.
ExtendedRational eval(const MaxAffine& f, const Vec& x);

/// Indices of the pieces attaining the max at x. Throws DomainError if
/// x is not in dom f.
IndexSet active_indices(const MaxAffine& f, const Vec& x);

/// conv{u_i : i active} + N_{dom f}(x). At interior points of the domain the
/// cone part is {0} and this is the plain hull of active gradients.
/// Throws DomainError if x is not in dom f.
ConvexBody subdifferential(const MaxAffine& f, const Vec& x);

/// Why containment fails: which outer constraint is violated.
struct ContainmentViolation {
  bool equality = false;
  std::size_t index = 0;
  std::string reason;
};

/// inner inside outer (or inside int(outer) when `strictly`), decided per
/// outer constraint by maximizing it over inner. nullopt means contained.
/// Throws PreconditionError if inner is empty.
std::optional<ContainmentViolation> containment_violation(const PolyhedralSet& outer, const PolyhedralSet& inner,
                                                          bool strictly);

bool contains_set(const PolyhedralSet& outer, const PolyhedralSet& inner, bool strictly);

/// g + indicator(C): same pieces, domain dom g n C. Throws PreconditionError
/// when the intersection is empty.
MaxAffine restrict_sum(const MaxAffine& g, const PolyhedralSet& C);

/// f*(xi) = sup_x xi . x - f(x), +inf when unbounded. Throws
/// PreconditionError when dom f is empty.
ExtendedRational conjugate_value(const MaxAffine& f, const Vec& xi);

/// Objective f = g - h with the (+inf) - (+inf) = +inf convention, and
/// +inf off C.
ExtendedRational objective(const DcProblem& prob, const Vec& x);

}  // namespace pdc
