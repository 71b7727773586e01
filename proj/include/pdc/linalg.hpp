#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdc/rational.hpp"

namespace pdc {

using Matrix = std::vector<Vec>;

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);
Vec negate(const Vec& a);
/// a + s * b
Vec axpy(const Vec& a, const Rational& s, const Vec& b);
/// (1 - t) a + t b
Vec lerp(const Vec& a, const Vec& b, const Rational& t);

/// Reduced row echelon form. Pivot columns are taken left to right and the
/// first row with a nonzero entry is used, so the result is a pure function
/// of the input. Zero rows are dropped.
struct RowEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Echelon form over the first `columns` entries of each row; trailing
/// entries (for example a right-hand side) are carried along. When
/// `columns` is npos all entries are pivot candidates.
RowEchelon reduced_row_echelon(Matrix rows, std::size_t columns = static_cast<std::size_t>(-1));

/// Linearly independent spanning set of the row space of `rows`.
/// Empty for an empty or all-zero matrix.
Matrix row_space_basis(const Matrix& rows);

std::size_t rank(const Matrix& rows);

/// Some solution of A x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. `columns` is the width of A, needed when A
/// has no rows.
std::optional<Vec> solve_linear_system(const Matrix& a, const Vec& b, std::size_t columns);

}  // namespace pdc
