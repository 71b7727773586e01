#include "pdc/lp.hpp"

#include <stdexcept>
#include <string>

#include "pdc/error.hpp"
#include "pdc/linalg.hpp"

namespace pdc {

namespace {

void validate_rows(const Constraints& rows, std::size_t n, const char* what) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].a.size() != n) {
      throw DimensionError(std::string(what) + " row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].a.size()) + ", expected " + std::to_string(n));
    }
  }
}

void validate(const LinearProgram& lp) {
  if (!lp.objective.empty() && lp.objective.size() != lp.dimension) {
    throw DimensionError("objective length " + std::to_string(lp.objective.size()) + " != dimension " +
                         std::to_string(lp.dimension));
  }
  validate_rows(lp.equalities, lp.dimension, "equality");
  validate_rows(lp.inequalities, lp.dimension, "inequality");
}

// The affine hull of the equality system, parametrized as
// x = origin + sum_k y_k * directions[k] with y free.
struct Parametrization {
  Vec origin;
  Matrix directions;
};

std::optional<Parametrization> eliminate_equalities(const Constraints& eqs, std::size_t n) {
  Matrix aug;
  aug.reserve(eqs.size());
  for (const auto& e : eqs) {
    Vec row = e.a;
    row.push_back(e.rhs);
    aug.push_back(std::move(row));
  }
  const RowEchelon ech = reduced_row_echelon(std::move(aug), n);
  if (ech.rows.size() > ech.pivots.size()) return std::nullopt;

  Parametrization p;
  p.origin = zeros(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    is_pivot[ech.pivots[r]] = true;
    p.origin[ech.pivots[r]] = ech.rows[r][n];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec dir = zeros(n);
    dir[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) dir[ech.pivots[r]] = -ech.rows[r][f];
    p.directions.push_back(std::move(dir));
  }
  return p;
}

// Dense simplex tableau. Row i reads
//   x_basis[i] + sum_j t[i][j] x_j = rhs[i]
// and the objective is z + sum_j d[j] x_j. Columns [0, free_count) are
// unrestricted in sign; every other column is >= 0.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vec& b, std::size_t free_count)
      : free_count_(free_count),
        rows_(a.size()),
        artificial_(free_count + a.size()),
        cols_(free_count + a.size() + 1),
        t_(a.size(), zeros(cols_)),
        rhs_(b),
        basis_(a.size()),
        basic_(cols_, false),
        active_(cols_, true),
        d_(zeros(cols_)) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < free_count_; ++j) t_[i][j] = a[i][j];
      t_[i][free_count_ + i] = 1;
      basis_[i] = free_count_ + i;
      basic_[free_count_ + i] = true;
    }
    active_[artificial_] = false;
  }

  enum class Result { Optimal, Unbounded, Infeasible };

  Result solve(const Vec& cost) {
    price_out_free_variables();
    if (!find_feasible_basis()) return Result::Infeasible;
    Vec full = zeros(cols_);
    for (std::size_t j = 0; j < free_count_; ++j) full[j] = cost[j];
    set_objective(full);
    return run() ? Result::Optimal : Result::Unbounded;
  }

  Vec free_values() const {
    Vec y = zeros(free_count_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < free_count_) y[basis_[i]] = rhs_[i];
    }
    return y;
  }

  // Reduced cost of each slack column: the inequality multipliers.
  Vec slack_reduced_costs() const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = d_[free_count_ + i];
    return out;
  }

 private:
  bool restricted(std::size_t col) const { return col >= free_count_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& e : t_[r]) {
      if (sgn(e) != 0) e *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(d_[c]) != 0) {
      const Rational f = d_[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(t_[r][j]) != 0) d_[j] -= f * t_[r][j];
      }
      z_ += f * rhs_[r];
    }
    basic_[basis_[r]] = false;
    basis_[r] = c;
    basic_[c] = true;
  }

  void set_objective(const Vec& cost) {
    d_ = cost;
    z_ = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational f = d_[basis_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(t_[i][j]) != 0) d_[j] -= f * t_[i][j];
      }
      z_ += f * rhs_[i];
    }
  }

  // Moves every free variable that can be made basic into the basis. Free
  // columns left nonbasic are zero in all sign-restricted rows afterwards.
  void price_out_free_variables() {
    for (std::size_t j = 0; j < free_count_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) {
        if (restricted(basis_[i]) && sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 1 with a single artificial column that relaxes every
  // sign-restricted row. Returns false when the system is infeasible.
  bool find_feasible_basis() {
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!restricted(basis_[i]) || sgn(rhs_[i]) >= 0) continue;
      if (!worst || rhs_[i] < rhs_[*worst]) worst = i;
    }
    if (!worst) return true;

    active_[artificial_] = true;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (restricted(basis_[i])) t_[i][artificial_] = -1;
    }
    pivot(*worst, artificial_);
    set_objective(unit(cols_, artificial_));
    run();
    if (sgn(z_) > 0) return false;

    if (basic_[artificial_]) {
      std::size_t r = 0;
      while (basis_[r] != artificial_) ++r;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != artificial_ && active_[j] && !basic_[j] && sgn(t_[r][j]) != 0) {
          pivot(r, j);
          break;
        }
      }
      if (basic_[artificial_]) throw std::logic_error("simplex: artificial variable stuck in basis");
    }
    for (std::size_t i = 0; i < rows_; ++i) t_[i][artificial_] = 0;
    active_[artificial_] = false;
    return true;
  }

  // Primal simplex with Bland's rule. Returns false on unboundedness.
  bool run() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!active_[j] || basic_[j]) continue;
        if (!restricted(j)) {
          // Nonbasic free columns are lineality directions of the region.
          if (sgn(d_[j]) != 0) return false;
          continue;
        }
        if (sgn(d_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!restricted(basis_[i]) || sgn(t_[i][*enter]) <= 0) continue;
        const Rational ratio = rhs_[i] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  std::size_t free_count_;
  std::size_t rows_;
  std::size_t artificial_;
  std::size_t cols_;
  Matrix t_;
  Vec rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_;
  std::vector<bool> active_;
  Vec d_;
  Rational z_;
};

std::vector<std::size_t> tight_rows(const Constraints& rows, const Vec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (dot(rows[i].a, x) == rows[i].rhs) out.push_back(i);
  }
  return out;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.dimension;
  const Vec c = lp.objective.empty() ? zeros(n) : lp.objective;

  LpOutcome out;
  const auto param = eliminate_equalities(lp.equalities, n);
  if (!param) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  const std::size_t k = param->directions.size();
  Vec reduced_cost(k);
  for (std::size_t j = 0; j < k; ++j) reduced_cost[j] = dot(c, param->directions[j]);
  Matrix a(lp.inequalities.size(), Vec(k));
  Vec b(lp.inequalities.size());
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    const auto& row = lp.inequalities[i];
    for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(row.a, param->directions[j]);
    b[i] = row.rhs - dot(row.a, param->origin);
  }

  Tableau tableau(a, b, k);
  switch (tableau.solve(reduced_cost)) {
    case Tableau::Result::Infeasible: out.status = LpStatus::Infeasible; return out;
    case Tableau::Result::Unbounded: out.status = LpStatus::Unbounded; return out;
    case Tableau::Result::Optimal: break;
  }

  const Vec y = tableau.free_values();
  Vec x = param->origin;
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(y[j]) != 0) x = axpy(x, y[j], param->directions[j]);
  }

  out.status = LpStatus::Optimal;
  out.value = dot(c, x);
  out.tight = tight_rows(lp.inequalities, x);
  out.inequality_multipliers = tableau.slack_reduced_costs();

  // Equality multipliers: E^T mu = -(c + A^T lambda), solvable because the
  // reduced problem's reduced costs vanish on the affine hull.
  Vec residual = negate(c);
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    if (sgn(out.inequality_multipliers[i]) != 0) {
      residual = axpy(residual, -out.inequality_multipliers[i], lp.inequalities[i].a);
    }
  }
  Matrix et(n, Vec(lp.equalities.size()));
  for (std::size_t r = 0; r < lp.equalities.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) et[j][r] = lp.equalities[r].a[j];
  }
  auto mu = solve_linear_system(et, residual, lp.equalities.size());
  if (!mu) throw std::logic_error("simplex: equality multipliers not recoverable");
  out.equality_multipliers = std::move(*mu);
  out.point = std::move(x);
  return out;
}

bool check_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
  if (!outcome.optimal()) return false;
  const std::size_t n = lp.dimension;
  const Vec c = lp.objective.empty() ? zeros(n) : lp.objective;
  const Vec& x = outcome.point;
  if (x.size() != n || outcome.inequality_multipliers.size() != lp.inequalities.size() ||
      outcome.equality_multipliers.size() != lp.equalities.size()) {
    return false;
  }
  for (const auto& e : lp.equalities) {
    if (dot(e.a, x) != e.rhs) return false;
  }
  Vec stationarity = c;
  Rational dual_value = 0;
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    const auto& row = lp.inequalities[i];
    const Rational& lambda = outcome.inequality_multipliers[i];
    const Rational slack = row.rhs - dot(row.a, x);
    if (sgn(slack) < 0 || sgn(lambda) < 0) return false;
    if (sgn(lambda) != 0 && sgn(slack) != 0) return false;
    stationarity = axpy(stationarity, lambda, row.a);
    dual_value -= lambda * row.rhs;
  }
  for (std::size_t r = 0; r < lp.equalities.size(); ++r) {
    stationarity = axpy(stationarity, outcome.equality_multipliers[r], lp.equalities[r].a);
    dual_value -= outcome.equality_multipliers[r] * lp.equalities[r].rhs;
  }
  return is_zero(stationarity) && dual_value == outcome.value && dot(c, x) == outcome.value;
}

std::optional<Vec> lp_feasible(const Constraints& equalities, const Constraints& inequalities,
                               std::size_t dimension) {
  LinearProgram lp{dimension, {}, equalities, inequalities};
  LpOutcome out = lp_solve(lp);
  if (!out.optimal()) return std::nullopt;
  return std::move(out.point);
}

namespace {

LinearConstraint lift(const LinearConstraint& row, const Rational& eps_coefficient) {
  LinearConstraint out{row.a, row.rhs};
  out.a.push_back(eps_coefficient);
  return out;
}

}  // namespace

SlackResult max_slack(const Constraints& equalities, const Constraints& weak, const Constraints& strict,
                      std::size_t dimension) {
  validate_rows(equalities, dimension, "equality");
  validate_rows(weak, dimension, "weak");
  validate_rows(strict, dimension, "strict");

  SlackResult result;
  if (strict.empty()) {
    result.witness = lp_feasible(equalities, weak, dimension);
    result.slack = result.witness ? ExtendedRational::plus_infinity() : ExtendedRational::minus_infinity();
    return result;
  }

  // Variables (x, eps): maximize eps.
  LinearProgram lp;
  lp.dimension = dimension + 1;
  lp.objective = unit(dimension + 1, dimension);
  lp.objective.back() = -1;
  for (const auto& e : equalities) lp.equalities.push_back(lift(e, 0));
  for (const auto& w : weak) lp.inequalities.push_back(lift(w, 0));
  for (const auto& s : strict) lp.inequalities.push_back(lift(s, 1));
  lp.inequalities.push_back({negate(unit(dimension + 1, dimension)), 0});

  LpOutcome out = lp_solve(lp);
  if (out.status == LpStatus::Infeasible) {
    result.slack = ExtendedRational::minus_infinity();
    return result;
  }
  if (out.status == LpStatus::Unbounded) {
    lp.inequalities.push_back({unit(dimension + 1, dimension), 1});
    out = lp_solve(lp);
    if (!out.optimal()) throw std::logic_error("max_slack: capped problem not optimal");
    result.slack = ExtendedRational::plus_infinity();
  } else {
    result.slack = ExtendedRational(Rational(-out.value));
  }
  out.point.pop_back();
  result.witness = std::move(out.point);
  return result;
}

LpOutcome lp_solve_lexmin(const LinearProgram& lp, std::size_t coordinates) {
  LpOutcome base = lp_solve(lp);
  if (!base.optimal()) return base;
  if (coordinates > lp.dimension) throw DimensionError("lexmin coordinate count exceeds dimension");

  LinearProgram face = lp;
  if (!lp.objective.empty() && !is_zero(lp.objective)) {
    face.equalities.push_back({lp.objective, base.value});
  }
  Vec point = base.point;
  for (std::size_t k = 0; k < coordinates; ++k) {
    face.objective = unit(lp.dimension, k);
    const LpOutcome step = lp_solve(face);
    if (!step.optimal()) break;
    face.equalities.push_back({face.objective, step.value});
    point = step.point;
  }
  // The base multipliers certify every point of the optimal face.
  base.point = std::move(point);
  base.tight = tight_rows(lp.inequalities, base.point);
  return base;
}

}  // namespace pdc
