#ifndef TORIC_TORIC_COMPLEXES_HPP
#define TORIC_TORIC_COMPLEXES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "toric/cochain.hpp"
#include "toric/cone.hpp"
#include "toric/fan.hpp"

namespace toric {

/// The three degreewise complexes attached to a subdivision. All are
/// indexed by subsets J of the zero set of a degree u against the base
/// cone's rays, with term ∧^(p-|J|) of the common kernel of the rays in J
/// and contraction differentials. They differ only in which J appear:
///   Ishida  — every subset: resolves the reflexive differentials of the
///             base itself, exact in positive degrees;
///   Residue — subsets that survive as cones of the fan: computes the
///             higher direct images of the log differentials upstairs;
///   Kernel  — subdivided subsets: the complement, a complex because
///             survival is closed under taking subsets.
enum class ComplexKind { Ishida, Residue, Kernel };

const char* complex_kind_name(ComplexKind kind);

/// A validated cone/fan pair with the data the graded complexes consume.
struct ComplexContext {
  Cone sigma;
  Fan fan;
  RefinementProfile profile;
  /// Subsets of sigma's ray indices that are still cones of the fan.
  std::set<std::vector<Index>> survivors;
  /// True when every maximal cone of the fan is simplicial; required for
  /// the Residue and Kernel complexes (survival is downward closed exactly
  /// then).
  bool fan_simplicial = false;
};

/// Validates the pair (see validate_refinement) and precomputes survivors.
ComplexContext make_context(const Cone& sigma, const Fan& fan);

/// Indices of sigma's rays pairing to zero with u, ascending. Throws
/// DegreeOutsideDualCone if any pairing is negative.
std::vector<Index> degree_support(const ComplexContext& ctx, const IntVector& u);

/// The weight-u piece of the chosen complex for p-forms, with terms in
/// degrees 0..min(p, |support|). Requires 0 <= p <= ambient rank.
FiniteComplex assemble_degree_complex(const ComplexContext& ctx,
                                      ComplexKind kind, int p,
                                      const IntVector& u);

struct GradedEntry {
  IntVector degree;
  std::map<int, Index> dims;  // cohomology degree -> dimension, nonzero only
};

/// Cohomology dimensions in positive degrees over every lattice degree of
/// the bounded pairing box, plus the degreewise totals.
struct GradedCohomologyTable {
  std::string kind;
  int p = 0;
  Int bound = 0;
  std::vector<GradedEntry> entries;  // lex order; degrees with no entry dropped
  std::map<int, Index> totals;
};

GradedCohomologyTable graded_cohomology(const ComplexContext& ctx,
                                        ComplexKind kind, int p,
                                        const Int& bound, int threads = 1);

/// First higher direct image of 1-forms by the closed formula
/// |support(u)| - rank(rays in support(u)); all higher ones vanish. Valid
/// for every full-dimensional base cone.
GradedCohomologyTable p1_higher_image(const ComplexContext& ctx,
                                      const Int& bound, int threads = 1);

/// A degree whose support is exactly a smallest subdivided face, produced
/// by searching integer combinations of the face's saturated kernel.
struct NonvanishingWitness {
  std::vector<Index> face;  // the subdivided face, as sigma-ray indices
  IntVector degree;
};

/// Finds the lexicographically least witness degree for the least
/// subdivided face of minimal dimension c. Requires a simplicial base and
/// p >= c; throws NoSingularLocus / PBelowC / WitnessSearchExhausted.
NonvanishingWitness nonvanishing_witness(const ComplexContext& ctx, int p);

struct CrosscheckSummary {
  long long degrees = 0;
  long long comparisons = 0;
};

/// Over every degree of the box: the Ishida complex is exact in positive
/// degrees, the Kernel complex has no terms below the minimal subdivided
/// dimension, and H^i(Residue) == H^(i+1)(Kernel) for i >= 1. Throws
/// CrosscheckFailure at the first mismatch.
CrosscheckSummary kp_crosscheck(const ComplexContext& ctx, int p,
                                const Int& bound, int threads = 1);

}  // namespace toric

#endif  // TORIC_TORIC_COMPLEXES_HPP
