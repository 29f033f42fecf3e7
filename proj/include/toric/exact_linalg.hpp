#pragma once

#include <vector>

#include "toric/error.hpp"
#include "toric/types.hpp"

namespace toric {

/// Divide an integer vector by the gcd of its entries, with the convention
/// that the result of a nonzero input has content 1. Throws ZeroVector on the
/// zero vector (the zero vector generates no ray and has no primitive form).
IntVector primitive(const IntVector& v);

/// Reduce `m` to reduced row echelon form in place. Returns the pivot
/// columns in increasing order. Pivot choice is the first nonzero entry in
/// each column scan, so the result is the canonical RREF of the row space
/// and is reproducible across runs and platforms.
std::vector<Index> rref_in_place(RatMatrix& m);

struct RankKernel {
  Index rank = 0;
  /// Columns form a basis of the right kernel, one per free column of the
  /// RREF, ordered by free column index. Canonical: entry at the free column
  /// is 1, entries at pivot columns are the negated RREF coefficients.
  RatMatrix kernel;
};

/// Rank and canonical right-kernel basis of a rational matrix.
RankKernel rank_and_kernel(const RatMatrix& m);

Index rank_of(const RatMatrix& m);
Index rank_of(const IntMatrix& m);

struct SmithResult {
  /// Invariant factors d_1 | d_2 | ... | d_r, all positive, followed by
  /// nothing (zeros are not stored; rank = divisors.size()).
  std::vector<Int> divisors;
  /// Unimodular transforms with left * a * right diagonal.
  IntMatrix left;
  IntMatrix right;
};

/// Smith normal form with transforms: left * a * right is diagonal with
/// positive divisors satisfying the divisibility chain.
SmithResult snf(const IntMatrix& a);

/// Inverse of a unimodular integer matrix (throws Internal if not square or
/// if the determinant is not a unit).
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Solve a * x = rhs exactly over the rationals for each rhs column.
/// Throws Internal if any column is inconsistent. When the solution is not
/// unique the free variables are set to zero (canonical particular solution).
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& rhs);

/// Exact determinant of a square integer matrix.
Int determinant(const IntMatrix& m);

}  // namespace toric
