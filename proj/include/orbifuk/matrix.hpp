/**
 * matrix.hpp — sparse exact matrices over ℚ.
 *
 * Rows are stored as ordered column→value maps holding only nonzero
 * entries. rank() runs fraction-free integer elimination on a rescaled
 * copy; kernel/solve/inverse run plain rational Gauss–Jordan. Everything
 * is exact; there is no floating point anywhere in the engine.
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orbifuk/rational.hpp"

namespace orbifuk {

struct Matrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::map<int, Rat>> rows;

  Matrix() = default;
  Matrix(int r, int c) : nrows(r), ncols(c), rows(r) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = Rat(1);
    return m;
  }

  void set(int r, int c, const Rat& v) {
    if (v == 0)
      rows[r].erase(c);
    else
      rows[r][c] = v;
  }

  void add(int r, int c, const Rat& v) {
    if (v == 0) return;
    auto it = rows[r].find(c);
    if (it == rows[r].end()) {
      rows[r][c] = v;
    } else {
      Rat t = it->second + v;
      if (t == 0)
        rows[r].erase(it);
      else
        it->second = t;
    }
  }

  Rat get(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? Rat(0) : it->second;
  }

  Matrix times(const Matrix& other) const;
  Matrix transpose() const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  bool operator==(const Matrix& other) const;
};

// Rank over ℚ via fraction-free (Bareiss) elimination on an integer copy.
int rank(const Matrix& m);

// Basis of the null space; size = ncols - rank.
std::vector<std::vector<Rat>> kernel_basis(const Matrix& m);

// Some x with m·x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve_affine(const Matrix& m,
                                             const std::vector<Rat>& b);

// Coefficients a[0..n] of det(xI - m) = sum a[k] x^k (monic, a[n] = 1).
std::vector<Rat> charpoly(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

Rat determinant(const Matrix& m);

// Incremental independence filter: feed vectors one at a time; accept()
// returns true (and absorbs the vector) iff it enlarges the span so far.
struct SpanTracker {
  std::vector<std::vector<Rat>> echelon;  // reduced rows, one pivot each
  std::vector<int> pivots;
  bool accept(std::vector<Rat> v);
  int dim() const { return (int)echelon.size(); }
  // True iff v lies in the current span (v is not absorbed).
  bool contains(std::vector<Rat> v) const;
};

}  // namespace orbifuk
