#include "toric/verifier.hpp"

#include <algorithm>
#include <string>

#include "toric/exact_linalg.hpp"

namespace toric {

namespace {

enum class Gate { Trivial, NonSmoothFan, NonStrongFan, Theorems };

constexpr const char* kConfirmed = "confirmed";
constexpr const char* kConfirmedStructural = "confirmed-structural";
constexpr const char* kConfirmedOnBox = "confirmed-on-box";
constexpr const char* kRefuted = "refuted";
constexpr const char* kInconclusive = "inconclusive";
constexpr const char* kNoClaim = "no-claim";

Index total_at(const GradedCohomologyTable& table, int i) {
  auto it = table.totals.find(i);
  return it == table.totals.end() ? 0 : it->second;
}

const GradedEntry* first_with(const GradedCohomologyTable& table, int i) {
  for (const auto& e : table.entries)
    if (e.dims.count(i)) return &e;
  return nullptr;
}

void append_note(std::string& note, const std::string& more) {
  if (!note.empty()) note += "; ";
  note += more;
}

}  // namespace

const char* claim_name(Claim claim) {
  switch (claim) {
    case Claim::MustVanish: return "must-vanish";
    case Claim::MustNotVanish: return "must-not-vanish";
    case Claim::NoClaim: return "no-claim";
  }
  return "?";
}

VerificationReport verify(const ComplexContext& ctx, int p_max,
                          const Int& bound, bool experimental, int threads) {
  if (p_max < 0)
    fail(ErrorCode::InvalidSpec, "negative form bound",
         "p_max=" + std::to_string(p_max));
  const Index n = ctx.sigma.ambient_rank();
  const int ni = static_cast<int>(n);
  const ConeProfile base = classify(ctx.sigma);

  VerificationReport rep;
  rep.p_max = std::min(p_max, ni);
  rep.bound = bound;
  rep.base_simplicial = base.simplicial;
  rep.base_smooth = base.smooth;
  rep.singular_codim = base.codim_sing;
  rep.trivial_refinement = !ctx.profile.codim_center.has_value();
  rep.fan_smooth = ctx.profile.smooth;
  rep.fan_strong = ctx.profile.strong;

  const Gate gate = rep.trivial_refinement ? Gate::Trivial
                    : !ctx.profile.smooth  ? Gate::NonSmoothFan
                    : !ctx.profile.strong  ? Gate::NonStrongFan
                                           : Gate::Theorems;
  if (gate == Gate::Theorems &&
      (!base.codim_sing || *ctx.profile.codim_center != *base.codim_sing))
    fail(ErrorCode::Internal,
         "smooth strong refinement disagrees with the base singular locus");

  // Prediction grid. Structural claims are settled immediately; the rest
  // are verified against tables below.
  for (int p = 0; p <= rep.p_max; ++p)
    for (int i = 1; i <= ni; ++i) {
      VerdictEntry e;
      e.p = p;
      e.i = i;
      if (gate == Gate::Trivial) {
        e.claim = Claim::MustVanish;
        e.clause = "identity-refinement";
        e.status = kConfirmedStructural;
        e.note = "the fan equals the face fan, so the map changes nothing";
      } else if (p == 0) {
        e.claim = Claim::MustVanish;
        e.clause = "structure-sheaf";
        e.status = kConfirmedStructural;
        e.note = "degree-zero pieces are single terms";
      } else if (gate == Gate::NonSmoothFan) {
        e.claim = Claim::NoClaim;
        e.clause = "non-smooth-refinement";
        e.note = "the fan has singular cones, so it is not a resolution";
      } else if (gate == Gate::NonStrongFan) {
        e.claim = Claim::NoClaim;
        e.clause = "non-strong-refinement";
        e.note = "a smooth face was subdivided";
      } else if (base.simplicial) {
        const int c = static_cast<int>(*base.codim_sing);
        if (p < c) {
          e.claim = Claim::MustVanish;
          e.clause = "forms-below-center";
        } else if (i < c - 1) {
          e.claim = Claim::MustVanish;
          e.clause = "low-degrees";
        } else if (i == c - 1) {
          e.claim = Claim::MustNotVanish;
          e.clause = "center-degree";
        } else if (i >= p) {
          e.claim = Claim::MustVanish;
          e.clause = "beyond-form-degree";
        } else {
          e.claim = Claim::NoClaim;
          e.clause = "middle-window";
        }
      } else {
        if (p == 1 && i == 1) {
          e.claim = Claim::MustNotVanish;
          e.clause = "one-form-center";
        } else if (p == 1) {
          e.claim = Claim::MustVanish;
          e.clause = "one-form-tail";
          e.status = kConfirmedStructural;
          e.note = "one-form complexes have two terms";
        } else {
          e.claim = Claim::NoClaim;
          e.clause = "no-theorem";
          e.note = "no statement for higher forms over a non-simplicial base";
        }
      }
      rep.entries.push_back(std::move(e));
    }

  auto cell = [&](int p, int i) -> VerdictEntry& {
    return rep.entries[static_cast<std::size_t>(p) *
                           static_cast<std::size_t>(ni) +
                       static_cast<std::size_t>(i - 1)];
  };

  for (int p = 1; p <= rep.p_max && gate != Gate::Trivial; ++p) {
    if (gate == Gate::Theorems && !base.simplicial && p == 1) {
      // The closed formula settles one-forms over any base. The invariant
      // degree pairs to zero with every ray, so it contributes the ray
      // count minus the rank, which is positive exactly here.
      GradedCohomologyTable p1 = p1_higher_image(ctx, bound, threads);
      const IntVector zero = IntVector::Zero(n);
      const Index dim0 = ctx.sigma.num_rays() - rank_of(ctx.sigma.rays());
      const GradedEntry* at_zero = nullptr;
      for (const auto& entry : p1.entries)
        if (entry.degree == zero) {
          at_zero = &entry;
          break;
        }
      if (!at_zero || at_zero->dims.at(1) != dim0)
        fail(ErrorCode::Internal,
             "closed formula disagrees at the invariant degree");
      VerdictEntry& center = cell(1, 1);
      center.status = kConfirmed;
      center.witness_degree = zero;
      center.witness_dim = dim0;
      center.note = "invariant degree carries dimension " +
                    std::to_string(static_cast<long long>(dim0));
      continue;
    }

    const bool computable = ctx.fan_simplicial;
    bool want_table = false;
    if (gate == Gate::Theorems)
      want_table = base.simplicial || (experimental && p >= 2);
    else
      want_table = experimental;
    std::optional<GradedCohomologyTable> table;
    if (want_table && computable)
      table = graded_cohomology(ctx, ComplexKind::Residue, p, bound, threads);

    for (int i = 1; i <= ni; ++i) {
      VerdictEntry& e = cell(p, i);
      if (!e.status.empty()) continue;
      switch (e.claim) {
        case Claim::MustVanish: {
          if (!table) break;  // settled by the final sweep
          if (const GradedEntry* w = first_with(*table, i)) {
            e.status = kRefuted;
            e.witness_degree = w->degree;
            e.witness_dim = w->dims.at(i);
            append_note(e.note, "nonzero on the box");
          } else {
            e.status = kConfirmedOnBox;
            append_note(e.note, "zero across the whole box");
          }
          break;
        }
        case Claim::MustNotVanish: {
          try {
            NonvanishingWitness w = nonvanishing_witness(ctx, p);
            FiniteComplex at_witness =
                assemble_degree_complex(ctx, ComplexKind::Residue, p, w.degree);
            const std::map<int, Index> dims = at_witness.cohomology_dims();
            const Index h = dims.count(i) ? dims.at(i) : 0;
            e.witness_degree = w.degree;
            e.witness_dim = h;
            if (h > 0) {
              e.status = kConfirmed;
              append_note(e.note, "witness degree isolates the subdivided face");
            } else {
              e.status = kRefuted;
              append_note(e.note, "witness degree carries no cohomology");
            }
          } catch (const Error& err) {
            if (err.code() != ErrorCode::WitnessSearchExhausted) throw;
            if (table) {
              if (const GradedEntry* w = first_with(*table, i)) {
                e.status = kConfirmedOnBox;
                e.witness_degree = w->degree;
                e.witness_dim = w->dims.at(i);
                append_note(e.note, "found on the box after the witness "
                                    "search gave out");
              } else {
                e.status = kInconclusive;
                append_note(e.note, "witness search exhausted and the box "
                                    "shows nothing");
              }
            } else {
              e.status = kInconclusive;
              append_note(e.note, "witness search exhausted");
            }
          }
          break;
        }
        case Claim::NoClaim: {
          e.status = kNoClaim;
          if (table)
            append_note(e.note,
                        "observed box total " +
                            std::to_string(static_cast<long long>(
                                total_at(*table, i))));
          else if (want_table && !computable)
            append_note(e.note, "tables need a simplicial fan");
          break;
        }
      }
    }
  }

  for (VerdictEntry& e : rep.entries)
    if (e.status.empty()) {
      e.status = e.claim == Claim::NoClaim ? kNoClaim : kInconclusive;
      if (e.note.empty()) e.note = "not evaluated";
    }

  rep.mop.degree = ni - 1;
  if (gate == Gate::Trivial) {
    rep.mop.message = "trivial refinement";
  } else if (gate != Gate::Theorems) {
    rep.mop.message = "the fan is not a strong resolution";
  } else if (ni - 1 < 1) {
    rep.mop.message = "rank too small";
  } else {
    GradedCohomologyTable p1 = p1_higher_image(ctx, bound, threads);
    rep.mop.ran = true;
    rep.mop.total = total_at(p1, ni - 1);
    rep.mop.ok = rep.mop.total == 0;
    if (!rep.mop.ok)
      rep.mop.message = "one-forms have a nonzero image in top degree";
  }

  for (int p = 1; p <= rep.p_max; ++p) {
    CrosscheckRecord r;
    r.p = p;
    if (gate == Gate::Trivial) {
      r.message = "trivial refinement";
    } else if (!base.simplicial) {
      r.message = "needs a simplicial base cone";
    } else if (!ctx.fan_simplicial) {
      r.message = "needs a simplicial fan";
    } else {
      try {
        CrosscheckSummary s = kp_crosscheck(ctx, p, bound, threads);
        r.ran = true;
        r.degrees = s.degrees;
        r.comparisons = s.comparisons;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::CrosscheckFailure) throw;
        r.ran = true;
        r.ok = false;
        r.message = err.what();
      }
    }
    rep.crosschecks.push_back(std::move(r));
  }

  rep.ok = rep.mop.ok;
  for (const VerdictEntry& e : rep.entries)
    if (e.status == kRefuted) rep.ok = false;
  for (const CrosscheckRecord& r : rep.crosschecks)
    if (!r.ok) rep.ok = false;

  return rep;
}

}  // namespace toric
