#include "orbifuk/matrix.hpp"

#include <algorithm>

namespace orbifuk {

Matrix Matrix::times(const Matrix& other) const {
  Matrix out(nrows, other.ncols);
  for (int r = 0; r < nrows; ++r) {
    for (const auto& [k, v] : rows[r]) {
      for (const auto& [c, w] : other.rows[k]) {
        Rat t = v * w;
        out.add(r, c, t);
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ncols, nrows);
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) out.rows[c][r] = v;
  return out;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& x) const {
  std::vector<Rat> y(nrows, Rat(0));
  for (int r = 0; r < nrows; ++r) {
    Rat acc(0);
    for (const auto& [c, v] : rows[r]) {
      Rat t = v * x[c];
      acc += t;
    }
    y[r] = acc;
  }
  return y;
}

bool Matrix::operator==(const Matrix& other) const {
  if (nrows != other.nrows || ncols != other.ncols) return false;
  for (int r = 0; r < nrows; ++r)
    if (rows[r] != other.rows[r]) return false;
  return true;
}

// ---------------------------------------------------------------------
// rank: fraction-free Bareiss elimination on an integer-rescaled copy.
// ---------------------------------------------------------------------
int rank(const Matrix& m) {
  // Rescale each row to integers (multiply by the lcm of denominators);
  // row scaling does not change the rank.
  std::vector<std::vector<BigInt>> a(m.nrows,
                                     std::vector<BigInt>(m.ncols, BigInt(0)));
  for (int r = 0; r < m.nrows; ++r) {
    BigInt l(1);
    for (const auto& [c, v] : m.rows[r]) {
      BigInt den = boost::multiprecision::denominator(v);
      BigInt g = boost::multiprecision::gcd(l, den);
      l = (l / g) * den;
    }
    for (const auto& [c, v] : m.rows[r]) {
      BigInt num = boost::multiprecision::numerator(v);
      BigInt den = boost::multiprecision::denominator(v);
      a[r][c] = num * (l / den);
    }
  }
  int nr = m.nrows, nc = m.ncols;
  BigInt prev(1);
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int piv = -1;
    for (int i = row; i < nr; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

// ---------------------------------------------------------------------
// Gauss–Jordan to reduced row echelon form over ℚ (dense working copy).
// ---------------------------------------------------------------------
namespace {

struct RrefResult {
  std::vector<std::vector<Rat>> a;
  std::vector<int> pivot_col;  // one per pivot row
};

RrefResult rref(const Matrix& m, const std::vector<Rat>* augment) {
  int nr = m.nrows;
  int nc = m.ncols + (augment ? 1 : 0);
  RrefResult res;
  res.a.assign(nr, std::vector<Rat>(nc, Rat(0)));
  for (int r = 0; r < nr; ++r) {
    for (const auto& [c, v] : m.rows[r]) res.a[r][c] = v;
    if (augment) res.a[r][m.ncols] = (*augment)[r];
  }
  int row = 0;
  for (int col = 0; col < m.ncols && row < nr; ++col) {
    int piv = -1;
    for (int i = row; i < nr; ++i)
      if (res.a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(res.a[row], res.a[piv]);
    Rat p = res.a[row][col];
    for (int j = col; j < nc; ++j) {
      Rat t = res.a[row][j] / p;
      res.a[row][j] = t;
    }
    for (int i = 0; i < nr; ++i) {
      if (i == row || res.a[i][col] == 0) continue;
      Rat f = res.a[i][col];
      for (int j = col; j < nc; ++j) {
        Rat t = res.a[i][j] - f * res.a[row][j];
        res.a[i][j] = t;
      }
    }
    res.pivot_col.push_back(col);
    ++row;
  }
  return res;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m, nullptr);
  std::vector<bool> is_pivot(m.ncols, false);
  for (int c : r.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < m.ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m.ncols, Rat(0));
    v[free_col] = Rat(1);
    for (size_t pr = 0; pr < r.pivot_col.size(); ++pr) {
      Rat t = -r.a[pr][free_col];
      v[r.pivot_col[pr]] = t;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_affine(const Matrix& m,
                                             const std::vector<Rat>& b) {
  RrefResult r = rref(m, &b);
  // Inconsistent iff some reduced row is zero on the left, nonzero on the
  // right.
  for (int i = 0; i < m.nrows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < m.ncols; ++j)
      if (r.a[i][j] != 0) { left_zero = false; break; }
    if (left_zero && r.a[i][m.ncols] != 0) return std::nullopt;
  }
  std::vector<Rat> x(m.ncols, Rat(0));
  for (size_t pr = 0; pr < r.pivot_col.size(); ++pr)
    x[r.pivot_col[pr]] = r.a[pr][m.ncols];
  return x;
}

// ---------------------------------------------------------------------
// Characteristic polynomial via Faddeev–LeVerrier (exact over ℚ).
// det(xI - M) = x^n + c_{n-1} x^{n-1} + ... + c_0.
// ---------------------------------------------------------------------
std::vector<Rat> charpoly(const Matrix& m) {
  int n = m.nrows;
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[n] = Rat(1);
  Matrix mk = Matrix(n, n);  // running M * B_k
  Matrix b = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m.times(b);
    Rat tr(0);
    for (int i = 0; i < n; ++i) {
      Rat t = mk.get(i, i);
      tr += t;
    }
    Rat ck = -tr / Rat(k);
    coeff[n - k] = ck;
    b = mk;
    for (int i = 0; i < n; ++i) b.add(i, i, ck);
  }
  return coeff;
}

Rat determinant(const Matrix& m) {
  std::vector<Rat> p = charpoly(m);
  Rat d = p[0];
  if (m.nrows % 2 == 1) d = -d;
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.nrows != m.ncols) return std::nullopt;
  int n = m.nrows;
  // Gauss–Jordan on [m | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, v] : m.rows[r]) a[r][c] = v;
    a[r][n + r] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    Rat p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) {
      Rat t = a[col][j] / p;
      a[col][j] = t;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) {
        Rat t = a[i][j] - f * a[col][j];
        a[i][j] = t;
      }
    }
  }
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (a[r][n + c] != 0) out.rows[r][c] = a[r][n + c];
  return out;
}

// ---------------------------------------------------------------------
// SpanTracker
// ---------------------------------------------------------------------
namespace {

// Reduce v against the echelon rows in place; returns the leading index
// of the residue, or -1 if v reduced to zero.
int reduce_against(const std::vector<std::vector<Rat>>& echelon,
                   const std::vector<int>& pivots, std::vector<Rat>& v) {
  for (size_t i = 0; i < echelon.size(); ++i) {
    int p = pivots[i];
    if (v[p] == 0) continue;
    Rat f = v[p] / echelon[i][p];
    for (size_t j = 0; j < v.size(); ++j) {
      Rat t = v[j] - f * echelon[i][j];
      v[j] = t;
    }
  }
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return (int)j;
  return -1;
}

}  // namespace

bool SpanTracker::accept(std::vector<Rat> v) {
  int lead = reduce_against(echelon, pivots, v);
  if (lead < 0) return false;
  echelon.push_back(std::move(v));
  pivots.push_back(lead);
  return true;
}

bool SpanTracker::contains(std::vector<Rat> v) const {
  return reduce_against(echelon, pivots, v) < 0;
}

}  // namespace orbifuk
