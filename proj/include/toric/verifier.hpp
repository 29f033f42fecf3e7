#ifndef TORIC_VERIFIER_HPP
#define TORIC_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/toric_complexes.hpp"

namespace toric {

enum class Claim { MustVanish, MustNotVanish, NoClaim };

const char* claim_name(Claim claim);

/// One cell of the prediction grid: the claimed behaviour of the i-th
/// higher image of p-forms, which rule produced the claim, and how the
/// claim fared against the computed tables.
struct VerdictEntry {
  int p = 0;
  int i = 0;
  Claim claim = Claim::NoClaim;
  std::string clause;  // short name of the producing rule
  /// confirmed | confirmed-structural | confirmed-on-box | refuted |
  /// inconclusive | no-claim
  std::string status;
  std::optional<IntVector> witness_degree;
  std::optional<Index> witness_dim;
  std::string note;
};

struct CrosscheckRecord {
  int p = 0;
  bool ran = false;
  bool ok = true;
  long long degrees = 0;
  long long comparisons = 0;
  std::string message;  // failure detail, or why the check was skipped
};

/// Total of the first higher image of one-forms in degree rank-1, which
/// must vanish whenever the pair is a genuine resolution.
struct MopRecord {
  bool ran = false;
  bool ok = true;
  int degree = 0;
  Index total = 0;
  std::string message;
};

struct VerificationReport {
  int p_max = 0;  // after clamping to the ambient rank
  Int bound = 0;
  bool base_simplicial = false;
  bool base_smooth = false;
  std::optional<Index> singular_codim;   // of the base cone
  bool trivial_refinement = false;       // the fan subdivides nothing
  bool fan_smooth = false;
  bool fan_strong = false;
  std::vector<VerdictEntry> entries;     // grid order: p ascending, then i
  std::vector<CrosscheckRecord> crosschecks;
  MopRecord mop;
  /// No refutations, every cross-check that ran passed, and the one-form
  /// total in top degree vanished (when checked).
  bool ok = true;
};

/// Predicts the vanishing behaviour of every higher image on the grid
/// p in 0..p_max, i in 1..rank, then verifies each claim: structurally
/// where the complex shape already decides it, by explicit witness for
/// non-vanishing, and over the bounded degree box for vanishing.
/// `experimental` additionally attaches observed values to cells where no
/// rule applies (and runs those tables at all for a non-simplicial base).
VerificationReport verify(const ComplexContext& ctx, int p_max,
                          const Int& bound, bool experimental = false,
                          int threads = 1);

}  // namespace toric

#endif  // TORIC_VERIFIER_HPP
