#pragma once

// Decomposition of the global and local solution sets.
//
// Fixing one piece h_j of h turns the problem into the convex program
// min (g + indicator(C))(x) - h_j(x); its value and optimal face give the
// global solutions. Local solutions split into semi-closed pieces indexed by
// nonempty subsets J1 of h's pieces: points of C where every piece in J1 is
// a minimizing linearization and the active set of h stays inside J1.

#include <cstddef>
#include <optional>
#include <vector>

#include "pdc/model.hpp"

namespace pdc {

struct LinearizationResult {
  std::size_t j = 0;
  ExtendedRational alpha;
  /// Optimal face; nullopt when alpha is -inf.
  std::optional<PolyhedralSet> face;
  /// An optimal point of the epigraph LP.
  std::optional<Vec> witness;
};

/// min over C n dom g of g(x) - v_j . x (minus beta_j when `shifted`), by an
/// epigraph LP, and its optimal face written with the substitution
/// t = v_j . x + shift + alpha.
LinearizationResult solve_linearization(const DcProblem& prob, std::size_t j, bool shifted);

/// Throws HypothesisError unless C lies in dom g and in int(dom h); the
/// message names the set and the failing constraint.
void check_decomposition_hypotheses(const DcProblem& prob);

struct GlobalSolutions {
  ExtendedRational alpha_bar;
  IndexSet j_star;
  /// One entry per piece of h, in index order.
  std::vector<LinearizationResult> linearizations;

  bool unbounded() const { return alpha_bar.is_minus_infinity(); }
};

/// Optimal value and global solution set as a union of faces. Throws
/// HypothesisError (see check_decomposition_hypotheses).
GlobalSolutions global_solutions(const DcProblem& prob);

/// One leader piece j0 of a semi-closed piece: points of the closed part
/// where h_{j0} is maximal and the excluded pieces are strictly below it.
struct PieceCell {
  std::size_t leader = 0;
  Constraints equalities;
  Constraints weak;
  Constraints strict;
  /// Satisfies every strict row strictly.
  Vec witness;
};

struct SemiClosedPiece {
  IndexSet subset;  // J1
  PolyhedralSet closed_part;
  IndexSet excluded;
  std::vector<PieceCell> cells;  // nonempty cells only

  const Vec& witness() const { return cells.front().witness; }
};

inline constexpr std::size_t kDefaultPieceCap = 16;

/// Nonempty semi-closed pieces, ordered by subset size then lexicographically,
/// with pieces of equal member sets merged into the one of smallest subset.
/// Throws HypothesisError, or PreconditionError when h has more than `cap`
/// pieces.
std::vector<SemiClosedPiece> local_pieces(const DcProblem& prob, std::size_t cap = kDefaultPieceCap);

/// x in the closed part and J(x) inside the subset.
bool piece_membership(const SemiClosedPiece& piece, const MaxAffine& h, const Vec& x);

/// Piece a meets the closure of piece b, or the other way round.
struct Adjacency {
  std::size_t a = 0;
  std::size_t b = 0;
  Vec witness;
  /// True when witness lies in piece b and in the closure of piece a.
  bool witness_in_b = false;
  /// Cell of the piece whose closure holds the witness.
  std::size_t closure_cell = 0;
};

struct Component {
  IndexSet pieces;
  Vec representative;
  ExtendedRational value;
  /// f took the same value at every checked point of the component.
  bool constant = true;
};

struct ComponentAnalysis {
  std::vector<Adjacency> adjacencies;
  std::vector<Component> components;  // ordered by smallest piece index
};

ComponentAnalysis components(const DcProblem& prob, const std::vector<SemiClosedPiece>& pieces);

/// Polyline z = p_0, ..., p_r = w inside the union of the pieces, crossing
/// between adjacent pieces through adjacency witnesses. Empty when z and w
/// lie in different components. Throws DomainError if z or w is in no piece.
std::vector<Vec> segment_path(const DcProblem& prob, const std::vector<SemiClosedPiece>& pieces,
                              const ComponentAnalysis& analysis, const Vec& z, const Vec& w);

struct SolutionStructure {
  GlobalSolutions global;
  std::vector<SemiClosedPiece> pieces;
  ComponentAnalysis analysis;
};

SolutionStructure analyze_structure(const DcProblem& prob, std::size_t cap = kDefaultPieceCap);

}  // namespace pdc
