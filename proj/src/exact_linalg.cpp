#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace toric {

IntVector primitive(const IntVector& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  if (g == 0) fail(ErrorCode::ZeroVector, "zero vector has no primitive form");
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::vector<Index> rref_in_place(RatMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Rat piv = m(row, col);
    m.row(row) /= piv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rat f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RankKernel rank_and_kernel(const RatMatrix& m) {
  RatMatrix r = m;
  const std::vector<Index> pivots = rref_in_place(r);
  RankKernel out;
  out.rank = static_cast<Index>(pivots.size());
  std::vector<Index> free_cols;
  {
    std::size_t p = 0;
    for (Index c = 0; c < m.cols(); ++c) {
      if (p < pivots.size() && pivots[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  out.kernel = RatMatrix::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    out.kernel(f, static_cast<Index>(k)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      out.kernel(pivots[i], static_cast<Index>(k)) = -r(static_cast<Index>(i), f);
    }
  }
  return out;
}

Index rank_of(const RatMatrix& m) {
  RatMatrix r = m;
  return static_cast<Index>(rref_in_place(r).size());
}

Index rank_of(const IntMatrix& m) { return rank_of(to_rational(m)); }

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& a, Index i, Index j) {
  for (Index c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, Index i, Index j) {
  for (Index r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row i -= q * row t
void row_sub(IntMatrix& a, Index i, Index t, const Int& q) {
  for (Index c = 0; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
}

// col j -= q * col t
void col_sub(IntMatrix& a, Index j, Index t, const Int& q) {
  for (Index r = 0; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
}

void row_add(IntMatrix& a, Index t, Index i) {
  for (Index c = 0; c < a.cols(); ++c) a(t, c) += a(i, c);
}

void row_negate(IntMatrix& a, Index t) {
  for (Index c = 0; c < a.cols(); ++c) a(t, c) = -a(t, c);
}

}  // namespace

SmithResult snf(const IntMatrix& input) {
  const Index rows = input.rows();
  const Index cols = input.cols();
  SmithResult res;
  res.left = IntMatrix::Identity(rows, rows);
  res.right = IntMatrix::Identity(cols, cols);
  IntMatrix a = input;

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    bool settled = false;
    while (!settled) {
      // Bring the submatrix entry of minimal absolute value to (t, t).
      Index pi = -1, pj = -1;
      Int best = 0;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          const Int mag = abs(a(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        settled = true;  // submatrix is zero; done entirely
        break;
      }
      if (pi != t) {
        swap_rows(a, pi, t);
        swap_rows(res.left, pi, t);
      }
      if (pj != t) {
        swap_cols(a, pj, t);
        swap_cols(res.right, pj, t);
      }
      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Int q = a(i, t) / a(t, t);
        if (q != 0) {
          row_sub(a, i, t, q);
          row_sub(res.left, i, t, q);
        }
        if (a(i, t) != 0) dirty = true;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Int q = a(t, j) / a(t, t);
        if (q != 0) {
          col_sub(a, j, t, q);
          col_sub(res.right, j, t, q);
        }
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // smaller remainders exist; re-pick the pivot
      // Row and column are clear. Enforce that a(t,t) divides the rest of
      // the submatrix; if not, folding the offending row into row t creates
      // a smaller remainder for the next sweep.
      bool fixed = true;
      for (Index i = t + 1; i < rows && fixed; ++i) {
        for (Index j = t + 1; j < cols && fixed; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            row_add(a, t, i);
            row_add(res.left, t, i);
            fixed = false;
          }
        }
      }
      settled = fixed;
    }
    if (t < steps && a(t, t) == 0) break;  // rest of the diagonal is zero
    if (a(t, t) < 0) {
      row_negate(a, t);
      row_negate(res.left, t);
    }
  }

  for (Index t = 0; t < steps; ++t) {
    if (a(t, t) != 0) res.divisors.push_back(a(t, t));
  }
  return res;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols())
    fail(ErrorCode::Internal, "unimodular_inverse needs a square matrix");
  const Index n = u.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = to_rational(u);
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  const std::vector<Index> pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) != n)
    fail(ErrorCode::Internal, "matrix is singular, cannot invert");
  IntMatrix inv(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Rat& q = aug(i, n + j);
      if (boost::multiprecision::denominator(q) != 1)
        fail(ErrorCode::Internal, "matrix is not unimodular");
      inv(i, j) = boost::multiprecision::numerator(q);
    }
  }
  return inv;
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& rhs) {
  if (a.rows() != rhs.rows())
    fail(ErrorCode::Internal, "solve_exact dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + rhs.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(rhs.cols()) = rhs;
  const std::vector<Index> pivots = rref_in_place(aug);
  RatMatrix x = RatMatrix::Zero(a.cols(), rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols())
      fail(ErrorCode::Internal, "inconsistent linear system");
    x.row(pivots[i]) = aug.row(static_cast<Index>(i)).tail(rhs.cols());
  }
  return x;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::Internal, "determinant of a non-square matrix");
  const Index n = m.rows();
  RatMatrix a = to_rational(m);
  Rat det = 1;
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    const Rat pivot = a(col, col);
    det *= pivot;
    for (Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat factor = a(r, col) / pivot;
      a.row(r) -= factor * a.row(col);
    }
  }
  if (denominator(det) != 1)
    fail(ErrorCode::Internal, "non-integral determinant of an integer matrix");
  return numerator(det);
}

}  // namespace toric
