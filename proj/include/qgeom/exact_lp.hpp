#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgeom/errors.hpp"

namespace qgeom {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact feasibility of { x : A x = b, x >= 0 }.
///
/// Phase I of the primal simplex method on a rational tableau with one
/// artificial variable per row, pivoting by Bland's rule (smallest entering
/// index, smallest leaving basic variable on ratio ties), which cannot cycle.
/// Returns a feasible x when one exists.
inline std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                                      std::span<const Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw InputError("right-hand side length does not match the row count");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw InputError("ragged constraint matrix");
  }
  if (rows == 0) return std::vector<Rational>(cols);

  const std::size_t width = cols + rows + 1;  // originals, artificials, rhs
  const std::size_t rhs = width - 1;
  RationalMatrix tableau(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) tableau[i][j] = sign * a[i][j];
    tableau[i][cols + i] = 1;
    tableau[i][rhs] = sign * b[i];
    basis[i] = cols + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  std::vector<Rational> objective(width);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) objective[j] -= tableau[i][j];
    objective[rhs] -= tableau[i][rhs];
  }

  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (objective[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tableau[i][entering] <= 0) continue;
      Rational ratio = tableau[i][rhs] / tableau[i][entering];
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase I is bounded below by zero, so some row always qualifies.
    if (leaving == rows) break;

    auto& pivot_row = tableau[leaving];
    const Rational pivot = pivot_row[entering];
    for (auto& x : pivot_row) x /= pivot;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[entering] == 0) return;
      const Rational factor = row[entering];
      for (std::size_t j = 0; j < width; ++j) row[j] -= factor * pivot_row[j];
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != leaving) eliminate(tableau[i]);
    }
    eliminate(objective);
    basis[leaving] = entering;
  }

  if (objective[rhs] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) x[basis[i]] = tableau[i][rhs];
  }
  return x;
}

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<RationalMatrix> invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("invert needs a square matrix");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace qgeom
