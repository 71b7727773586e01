#include "pdc/linalg.hpp"

#include <algorithm>

#include "pdc/error.hpp"

namespace pdc {

namespace {

void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Rational dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Vec negate(const Vec& a) { return scale(Rational(-1), a); }

Vec axpy(const Vec& a, const Rational& s, const Vec& b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

Vec lerp(const Vec& a, const Vec& b, const Rational& t) {
  require_same_size(a, b);
  const Rational s = 1 - t;
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  return out;
}

RowEchelon reduced_row_echelon(Matrix rows, std::size_t columns) {
  RowEchelon out;
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw DimensionError("ragged matrix in row reduction");
  }
  const std::size_t limit = std::min(columns, width);
  std::size_t next = 0;  // first row not yet holding a pivot
  for (std::size_t col = 0; col < limit && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    const Rational inv = 1 / rows[next][col];
    for (auto& e : rows[next]) e *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[next][c];
    }
    out.pivots.push_back(col);
    ++next;
  }
  // Rows past `next` are zero in the pivot columns but may carry trailing
  // entries (an inconsistent right-hand side); keep them so callers can see it.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r < next || !is_zero(rows[r])) out.rows.push_back(std::move(rows[r]));
  }
  return out;
}

Matrix row_space_basis(const Matrix& rows) { return reduced_row_echelon(rows).rows; }

std::size_t rank(const Matrix& rows) { return reduced_row_echelon(rows).pivots.size(); }

std::optional<Vec> solve_linear_system(const Matrix& a, const Vec& b, std::size_t columns) {
  if (a.size() != b.size()) throw DimensionError("right-hand side length does not match row count");
  Matrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != columns) throw DimensionError("row length does not match column count");
    Vec row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const RowEchelon ech = reduced_row_echelon(std::move(aug), columns);
  Vec x = zeros(columns);
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (r >= ech.pivots.size()) return std::nullopt;  // 0 = nonzero
    x[ech.pivots[r]] = ech.rows[r][columns];
  }
  return x;
}

}  // namespace pdc
