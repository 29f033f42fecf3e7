#ifndef TORIC_KOSZUL_HPP
#define TORIC_KOSZUL_HPP

#include <vector>

#include "toric/cochain.hpp"

namespace toric {

// Quotient Koszul-type complex on n exterior generators, of which the first
// k are marked. The term in degree -p + m has basis e_I (x) f_J with
// J a size-m subset of {1..k}, I a size-(p-m) subset of {1..n} disjoint
// from J; the differential moves marked indices from I to J one at a time
// with alternating signs. Throws InvalidSpec unless 0 <= k <= n, 0 < p <= n.
FiniteComplex build_koszul_quotient(int n, int k, int p);

struct KoszulSweepEntry {
  int n = 0;
  int k = 0;
  int p = 0;
  Index bottom_dim = 0;  // dim of cohomology in degree -p
};

// Builds every admissible (n, k, p) with n <= n_max and checks that the
// cohomology is concentrated in degree -p; any other nonzero degree raises
// LemmaViolation identifying the offending triple. Returns the surviving
// bottom dimensions (expected: binomial(n - k, p)).
std::vector<KoszulSweepEntry> koszul_sweep(int n_max);

}  // namespace toric

#endif  // TORIC_KOSZUL_HPP
