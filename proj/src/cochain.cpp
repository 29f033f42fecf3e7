#include "toric/cochain.hpp"

#include "toric/exact_linalg.hpp"

namespace toric {

FiniteComplex::FiniteComplex(int lowest_degree, std::vector<ComplexTerm> terms,
                             std::vector<RatMatrix> differentials)
    : lowest_degree_(lowest_degree),
      terms_(std::move(terms)),
      differentials_(std::move(differentials)) {
  const std::size_t n = terms_.size();
  if (differentials_.size() + (n > 0 ? 1 : 0) != n)
    fail(ErrorCode::Internal, "complex needs one differential per adjacent pair of terms");
  for (std::size_t t = 0; t < n; ++t) {
    const ComplexTerm& term = terms_[t];
    if (term.dimension < 0)
      fail(ErrorCode::Internal, "negative term dimension");
    if (!term.basis_labels.empty() &&
        static_cast<Index>(term.basis_labels.size()) != term.dimension)
      fail(ErrorCode::Internal, "basis label count differs from term dimension");
  }
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const RatMatrix& d = differentials_[t];
    if (d.rows() != terms_[t + 1].dimension || d.cols() != terms_[t].dimension)
      fail(ErrorCode::Internal, "differential shape mismatch",
           "position=" + std::to_string(static_cast<long long>(t)));
  }
  for (std::size_t t = 0; t + 2 < n; ++t) {
    RatMatrix square = differentials_[t + 1] * differentials_[t];
    for (Index i = 0; i < square.rows(); ++i)
      for (Index j = 0; j < square.cols(); ++j)
        if (square(i, j) != 0)
          fail(ErrorCode::Internal, "differentials do not compose to zero",
               "position=" + std::to_string(static_cast<long long>(t)));
  }
}

const ComplexTerm& FiniteComplex::term(int degree) const {
  if (!has_degree(degree))
    fail(ErrorCode::Internal, "degree outside complex",
         "degree=" + std::to_string(degree));
  return terms_[static_cast<std::size_t>(degree - lowest_degree_)];
}

const RatMatrix& FiniteComplex::differential(int degree) const {
  if (!has_degree(degree) || degree - lowest_degree_ + 1 >= term_count())
    fail(ErrorCode::Internal, "no differential out of degree",
         "degree=" + std::to_string(degree));
  return differentials_[static_cast<std::size_t>(degree - lowest_degree_)];
}

std::vector<std::pair<int, Index>> FiniteComplex::cohomology_profile() const {
  const int n = term_count();
  std::vector<Index> ranks(differentials_.size());
  for (std::size_t t = 0; t < differentials_.size(); ++t)
    ranks[t] = rank_of(differentials_[t]);
  std::vector<std::pair<int, Index>> profile;
  profile.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    Index h = terms_[static_cast<std::size_t>(t)].dimension;
    if (t < n - 1) h -= ranks[static_cast<std::size_t>(t)];
    if (t > 0) h -= ranks[static_cast<std::size_t>(t - 1)];
    profile.emplace_back(lowest_degree_ + t, h);
  }
  return profile;
}

std::map<int, Index> FiniteComplex::cohomology_dims() const {
  std::map<int, Index> dims;
  for (const auto& [degree, h] : cohomology_profile())
    if (h != 0) dims[degree] = h;
  return dims;
}

}  // namespace toric
