#pragma once

// Point classification: critical, stationary, local and global solutions
// of a DC problem, decided through containment and intersection of
// generator bodies.

#include <optional>

#include "pdc/model.hpp"

namespace pdc {

struct GlobalSolutions;  // structure.hpp

/// P inside Q, exactly. Both bodies must be nonempty.
bool body_in_body(const ConvexBody& p, const ConvexBody& q);

/// A point of P n Q, or nullopt when they are disjoint.
std::optional<Vec> bodies_intersect(const ConvexBody& p, const ConvexBody& q);

/// dg(x) + N_C(x), the subdifferential of g + indicator(C) at x.
ConvexBody restricted_subdifferential(const DcProblem& prob, const Vec& x);

/// dh(x) meets dg(x) + N_C(x). Throws PreconditionError naming the set
/// (dom g, dom h or C) that x lies outside of.
bool is_critical(const DcProblem& prob, const Vec& x);

/// dh(x) inside dg(x) + N_C(x). Same errors as is_critical.
bool is_stationary(const DcProblem& prob, const Vec& x);

/// Stationarity checked one active gradient of h at a time against
/// hull{active u_i} + pos{tight normals of C and dom g} + span{equality rows},
/// built directly from the raw constraint rows. Agrees with is_stationary
/// whenever x is interior to dom h.
bool is_stationary_by_generators(const DcProblem& prob, const Vec& x);

enum class LocalVerdict { Yes, No, UnknownHypothesisNotMet };
enum class GlobalVerdict { Yes, No, NotComputed };

const char* to_string(LocalVerdict v);
const char* to_string(GlobalVerdict v);

/// Yes/No when x is interior to dom h; otherwise No if x is not stationary
/// and UnknownHypothesisNotMet if it is.
LocalVerdict is_local_solution(const DcProblem& prob, const Vec& x);

struct HypothesisFlags {
  bool interior_dom_g = false;
  bool interior_dom_h = false;
  /// x in int(dom g) n int(dom h) n C.
  bool interior_both = false;
  /// Some subdifferential picked up a domain normal cone because x sits
  /// on the boundary of dom g or dom h.
  bool boundary_extension = false;
};

struct Classification {
  bool feasible = false;
  bool critical = false;
  bool stationary = false;
  LocalVerdict local = LocalVerdict::No;
  GlobalVerdict global = GlobalVerdict::NotComputed;
  HypothesisFlags flags;
};

/// Runs every test at x. With compute_global the global verdict compares
/// f(x) with the optimal value; if the decomposition hypotheses fail it
/// stays NotComputed. Infeasible points get all-negative verdicts.
Classification classify(const DcProblem& prob, const Vec& x, bool compute_global);

/// Same, reusing an already computed global decomposition.
Classification classify(const DcProblem& prob, const Vec& x, const GlobalSolutions& global);

}  // namespace pdc
