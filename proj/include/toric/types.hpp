#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <vector>

namespace toric {

/// Exact scalar types. Everything in this library is computed over the
/// integers or rationals; no floating point appears anywhere. Cohomology
/// dimensions obtained over the rationals equal the ones over any field
/// extension (in particular the complex numbers), since ranks of matrices
/// are preserved under field extension.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using RatMatrix = DenseMatrix<Rat>;
using RatVector = DenseVector<Rat>;
using Index = Eigen::Index;

inline RatMatrix to_rational(const IntMatrix& a) { return a.cast<Rat>(); }
inline RatVector to_rational(const IntVector& v) { return v.cast<Rat>(); }

inline std::vector<Int> to_std(const IntVector& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

inline IntVector from_std(const std::vector<Int>& v) {
  IntVector out(static_cast<Index>(v.size()));
  for (Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<size_t>(i)];
  return out;
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
  Int num = numerator(q);
  Int den = denominator(q);  // always positive
  Int t = num / den;
  if (num % den != 0 && num < 0) --t;
  return t;
}

/// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string vector_to_string(const IntVector& v) {
  std::string s = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace toric
