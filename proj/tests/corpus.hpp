#ifndef TORIC_TESTS_CORPUS_HPP
#define TORIC_TESTS_CORPUS_HPP

// Deterministic batch of simplicial full-dimensional cones used by the
// acceptance gate: square ray matrices in ranks 2 and 3 sampled with entries
// in [-4, 4], kept when the determinant is nonzero with |det| <= 12, columns
// scaled to their primitive generators.

#include <random>
#include <vector>

#include "toric/cone.hpp"
#include "toric/exact_linalg.hpp"

namespace corpus {

inline std::vector<toric::Cone> cones() {
  using namespace toric;
  std::mt19937 rng(20240817);
  std::vector<Cone> out;
  while (out.size() < 25) {
    const Index n = 2 + static_cast<Index>(rng() % 2);
    IntMatrix rays(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        rays(i, j) = static_cast<int>(rng() % 9) - 4;
    const Int det = determinant(rays);
    if (det == 0 || abs(det) > 12) continue;
    for (Index j = 0; j < n; ++j) rays.col(j) = primitive(rays.col(j));
    out.push_back(Cone::from_rays(rays));
  }
  return out;
}

}  // namespace corpus

#endif  // TORIC_TESTS_CORPUS_HPP
