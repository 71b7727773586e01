#include "pdc/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"

namespace pdc {

namespace {

LinearConstraint lift(const LinearConstraint& row) {
  LinearConstraint out = row;
  out.a.push_back(0);
  return out;
}

PolyhedralSet feasible_region(const DcProblem& prob) { return intersect(prob.C, prob.g.domain); }

std::string describe(const ContainmentViolation& v) {
  return std::string(v.equality ? "equality " : "inequality ") + std::to_string(v.index) + ": " + v.reason;
}

// h_j(x) - h_k(x) <= 0 as a row.
LinearConstraint piece_gap(const MaxAffine& h, std::size_t j, std::size_t k) {
  return {sub(h.pieces[j].u, h.pieces[k].u), Rational(h.pieces[k].alpha - h.pieces[j].alpha)};
}

LinearConstraint flipped(const LinearConstraint& row) { return {negate(row.a), Rational(-row.rhs)}; }

bool nonempty(const Constraints& eqs, const Constraints& weak, const Constraints& strict, std::size_t n) {
  return max_slack(eqs, weak, strict, n).positive();
}

// Does some point of `cell` lie outside the member set of `piece`?
bool escapes(const PieceCell& cell, const SemiClosedPiece& piece, const MaxAffine& h, std::size_t n) {
  auto with_strict = [&](const LinearConstraint& row) {
    Constraints strict = cell.strict;
    strict.push_back(row);
    return nonempty(cell.equalities, cell.weak, strict, n);
  };
  for (const auto& r : piece.closed_part.inequalities) {
    if (with_strict(flipped(r))) return true;
  }
  for (const auto& e : piece.closed_part.equalities) {
    if (with_strict(e) || with_strict(flipped(e))) return true;
  }
  // Some excluded piece attains the max.
  for (std::size_t jx : piece.excluded) {
    Constraints weak = cell.weak;
    for (std::size_t k = 0; k < h.pieces.size(); ++k) {
      if (k != jx) weak.push_back(piece_gap(h, k, jx));
    }
    if (nonempty(cell.equalities, weak, cell.strict, n)) return true;
  }
  return false;
}

bool piece_inside(const SemiClosedPiece& inner, const SemiClosedPiece& outer, const MaxAffine& h, std::size_t n) {
  return std::none_of(inner.cells.begin(), inner.cells.end(),
                      [&](const PieceCell& c) { return escapes(c, outer, h, n); });
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Closure of a cell: strict rows relaxed.
Constraints closure_rows(const PieceCell& c) {
  Constraints out = c.weak;
  out.insert(out.end(), c.strict.begin(), c.strict.end());
  return out;
}

std::optional<Vec> closure_meets(const PieceCell& closed, const PieceCell& open, std::size_t n) {
  Constraints eqs = closed.equalities;
  eqs.insert(eqs.end(), open.equalities.begin(), open.equalities.end());
  Constraints weak = closure_rows(closed);
  weak.insert(weak.end(), open.weak.begin(), open.weak.end());
  SlackResult r = max_slack(eqs, weak, open.strict, n);
  if (!r.positive()) return std::nullopt;
  return r.witness;
}

}  // namespace

LinearizationResult solve_linearization(const DcProblem& prob, std::size_t j, bool shifted) {
  if (j >= prob.h.pieces.size()) throw PreconditionError("piece index " + std::to_string(j) + " out of range");
  const std::size_t n = prob.dimension();
  const AffinePiece& hj = prob.h.pieces[j];
  const PolyhedralSet region = feasible_region(prob);

  LinearProgram lp;
  lp.dimension = n + 1;
  lp.objective = negate(hj.u);
  lp.objective.push_back(1);
  for (const auto& e : region.equalities) lp.equalities.push_back(lift(e));
  for (const auto& r : region.inequalities) lp.inequalities.push_back(lift(r));
  for (const auto& p : prob.g.pieces) {
    Vec row = p.u;
    row.push_back(-1);
    lp.inequalities.push_back({std::move(row), Rational(-p.alpha)});
  }
  const LpOutcome out = lp_solve(lp);

  LinearizationResult result;
  result.j = j;
  switch (out.status) {
    case LpStatus::Infeasible: throw PreconditionError("dom g and C do not intersect");
    case LpStatus::Unbounded: result.alpha = ExtendedRational::minus_infinity(); return result;
    case LpStatus::Optimal: break;
  }
  const Rational shift = shifted ? hj.alpha : Rational(0);
  const Rational alpha = out.value - shift;
  result.alpha = alpha;
  Vec x = out.point;
  x.pop_back();
  result.witness = std::move(x);

  PolyhedralSet face = region;
  for (const auto& p : prob.g.pieces) {
    face.inequalities.push_back({sub(p.u, hj.u), Rational(shift + alpha - p.alpha)});
  }
  result.face = std::move(face);
  return result;
}

void check_decomposition_hypotheses(const DcProblem& prob) {
  if (auto v = containment_violation(prob.g.domain, prob.C, false)) {
    throw HypothesisError("C is not contained in dom g (" + describe(*v) + ")");
  }
  if (auto v = containment_violation(prob.h.domain, prob.C, true)) {
    throw HypothesisError("C is not contained in int(dom h) (" + describe(*v) + ")");
  }
}

GlobalSolutions global_solutions(const DcProblem& prob) {
  check_decomposition_hypotheses(prob);
  GlobalSolutions out;
  out.alpha_bar = ExtendedRational::plus_infinity();
  for (std::size_t j = 0; j < prob.h.pieces.size(); ++j) {
    out.linearizations.push_back(solve_linearization(prob, j, true));
    out.alpha_bar = std::min(out.alpha_bar, out.linearizations.back().alpha);
  }
  if (out.unbounded()) return out;
  for (const auto& lin : out.linearizations) {
    if (lin.alpha == out.alpha_bar) out.j_star.push_back(lin.j);
  }
  return out;
}

std::vector<SemiClosedPiece> local_pieces(const DcProblem& prob, std::size_t cap) {
  check_decomposition_hypotheses(prob);
  const std::size_t m = prob.h.pieces.size();
  const std::size_t n = prob.dimension();
  if (m > cap) {
    throw PreconditionError("h has " + std::to_string(m) + " pieces, above the enumeration cap of " +
                            std::to_string(cap));
  }

  std::vector<std::optional<PolyhedralSet>> omega(m);
  for (std::size_t j = 0; j < m; ++j) omega[j] = solve_linearization(prob, j, false).face;

  std::vector<IndexSet> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    IndexSet s;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::size_t{1} << j)) s.push_back(j);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  const PolyhedralSet base = intersect(feasible_region(prob), prob.h.domain);
  std::vector<SemiClosedPiece> kept;
  for (const IndexSet& subset : subsets) {
    SemiClosedPiece piece;
    piece.subset = subset;
    piece.closed_part = base;
    bool possible = true;
    for (std::size_t j : subset) {
      if (!omega[j]) {
        possible = false;
        break;
      }
      piece.closed_part = intersect(piece.closed_part, *omega[j]);
    }
    if (!possible) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (!std::binary_search(subset.begin(), subset.end(), j)) piece.excluded.push_back(j);
    }
    for (std::size_t leader : subset) {
      PieceCell cell;
      cell.leader = leader;
      cell.equalities = piece.closed_part.equalities;
      cell.weak = piece.closed_part.inequalities;
      for (std::size_t j : subset) {
        if (j != leader) cell.weak.push_back(piece_gap(prob.h, j, leader));
      }
      for (std::size_t j : piece.excluded) cell.strict.push_back(piece_gap(prob.h, j, leader));
      SlackResult slack = max_slack(cell.equalities, cell.weak, cell.strict, n);
      if (!slack.positive()) continue;
      cell.witness = std::move(*slack.witness);
      piece.cells.push_back(std::move(cell));
    }
    if (piece.cells.empty()) continue;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const SemiClosedPiece& other) {
      return piece_inside(piece, other, prob.h, n) && piece_inside(other, piece, prob.h, n);
    });
    if (!duplicate) kept.push_back(std::move(piece));
  }
  return kept;
}

bool piece_membership(const SemiClosedPiece& piece, const MaxAffine& h, const Vec& x) {
  if (!membership(piece.closed_part, x) || !membership(h.domain, x)) return false;
  const IndexSet active = active_indices(h, x);
  return std::includes(piece.subset.begin(), piece.subset.end(), active.begin(), active.end());
}

ComponentAnalysis components(const DcProblem& prob, const std::vector<SemiClosedPiece>& pieces) {
  const std::size_t n = prob.dimension();
  ComponentAnalysis out;
  UnionFind uf(pieces.size());

  for (std::size_t a = 0; a < pieces.size(); ++a) {
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      std::optional<Adjacency> found;
      for (std::size_t ca = 0; ca < pieces[a].cells.size() && !found; ++ca) {
        for (std::size_t cb = 0; cb < pieces[b].cells.size() && !found; ++cb) {
          if (auto w = closure_meets(pieces[a].cells[ca], pieces[b].cells[cb], n)) {
            found = Adjacency{a, b, std::move(*w), true, ca};
          } else if (auto w2 = closure_meets(pieces[b].cells[cb], pieces[a].cells[ca], n)) {
            found = Adjacency{a, b, std::move(*w2), false, cb};
          }
        }
      }
      if (found) {
        uf.unite(a, b);
        out.adjacencies.push_back(std::move(*found));
      }
    }
  }

  std::vector<std::size_t> slot(pieces.size(), static_cast<std::size_t>(-1));
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const std::size_t root = uf.find(p);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.components.size();
      Component c;
      c.representative = pieces[p].witness();
      c.value = objective(prob, c.representative);
      out.components.push_back(std::move(c));
    }
    Component& c = out.components[slot[root]];
    c.pieces.push_back(p);
    for (const auto& cell : pieces[p].cells) {
      if (objective(prob, cell.witness) != c.value) c.constant = false;
    }
  }
  for (const auto& adj : out.adjacencies) {
    Component& c = out.components[slot[uf.find(adj.a)]];
    if (objective(prob, adj.witness) != c.value) c.constant = false;
  }
  return out;
}

std::vector<Vec> segment_path(const DcProblem& prob, const std::vector<SemiClosedPiece>& pieces,
                              const ComponentAnalysis& analysis, const Vec& z, const Vec& w) {
  auto locate = [&](const Vec& x, const char* name) {
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (piece_membership(pieces[p], prob.h, x)) return p;
    }
    throw DomainError(std::string(name) + " lies in no piece");
  };
  const std::size_t start = locate(z, "start point");
  const std::size_t goal = locate(w, "end point");

  // Breadth-first search over the adjacency graph; edges in discovery order.
  std::vector<std::size_t> via(pieces.size(), static_cast<std::size_t>(-1));
  std::vector<bool> seen(pieces.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    if (p == goal) break;
    for (std::size_t e = 0; e < analysis.adjacencies.size(); ++e) {
      const Adjacency& adj = analysis.adjacencies[e];
      std::size_t q;
      if (adj.a == p) {
        q = adj.b;
      } else if (adj.b == p) {
        q = adj.a;
      } else {
        continue;
      }
      if (seen[q]) continue;
      seen[q] = true;
      via[q] = e;
      queue.push_back(q);
    }
  }
  if (!seen[goal]) return {};

  std::vector<std::size_t> hops;  // edges from start to goal
  for (std::size_t p = goal; p != start;) {
    const Adjacency& adj = analysis.adjacencies[via[p]];
    hops.push_back(via[p]);
    p = adj.a == p ? adj.b : adj.a;
  }
  std::reverse(hops.begin(), hops.end());

  std::vector<Vec> path{z};
  auto push = [&](const Vec& p) {
    if (path.back() != p) path.push_back(p);
  };
  std::size_t current = start;
  for (std::size_t e : hops) {
    const Adjacency& adj = analysis.adjacencies[e];
    const std::size_t next = adj.a == current ? adj.b : adj.a;
    // Which piece holds the witness, and whose closure it touches.
    const std::size_t holder = adj.witness_in_b ? adj.b : adj.a;
    const std::size_t closure_piece = adj.witness_in_b ? adj.a : adj.b;
    const Vec& anchor = pieces[closure_piece].cells[adj.closure_cell].witness;
    if (holder == next) {
      // Witness only in the closure of the current piece: approach it from
      // the strict side of that cell.
      push(anchor);
      push(adj.witness);
    } else {
      push(adj.witness);
      push(anchor);
    }
    current = next;
  }
  push(w);
  return path;
}

SolutionStructure analyze_structure(const DcProblem& prob, std::size_t cap) {
  SolutionStructure out;
  out.global = global_solutions(prob);
  out.pieces = local_pieces(prob, cap);
  out.analysis = components(prob, out.pieces);
  return out;
}

}  // namespace pdc
