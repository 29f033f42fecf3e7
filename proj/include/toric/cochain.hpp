#ifndef TORIC_COCHAIN_HPP
#define TORIC_COCHAIN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/types.hpp"

namespace toric {

struct ComplexTerm {
  Index dimension = 0;
  std::vector<std::string> basis_labels;  // empty, or one label per basis vector
};

// A bounded cochain complex of finite-dimensional rational vector spaces.
// Term t sits in degree lowest_degree + t; differential t maps term t to
// term t + 1. The constructor checks the shape of every differential and
// that consecutive differentials compose to zero.
class FiniteComplex {
 public:
  FiniteComplex(int lowest_degree, std::vector<ComplexTerm> terms,
                std::vector<RatMatrix> differentials);

  int lowest_degree() const { return lowest_degree_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool has_degree(int degree) const {
    return degree >= lowest_degree_ &&
           degree < lowest_degree_ + term_count();
  }

  const ComplexTerm& term(int degree) const;
  // The map out of `degree`; only valid for degrees below the top one.
  const RatMatrix& differential(int degree) const;

  // Dimension of cohomology in every occupied degree, in ascending order.
  std::vector<std::pair<int, Index>> cohomology_profile() const;
  // Same data restricted to the degrees where cohomology is nonzero.
  std::map<int, Index> cohomology_dims() const;

 private:
  int lowest_degree_;
  std::vector<ComplexTerm> terms_;
  std::vector<RatMatrix> differentials_;
};

}  // namespace toric

#endif  // TORIC_COCHAIN_HPP
