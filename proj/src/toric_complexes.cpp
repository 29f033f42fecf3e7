#include "toric/toric_complexes.hpp"

#include <algorithm>
#include <utility>

#include "toric/exact_linalg.hpp"
#include "toric/parallel.hpp"

namespace toric {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int out = 0;
  for (Index i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

// lex-ordered q-element subsets of {0..d-1}
std::vector<std::vector<Index>> index_subsets(Index d, int q) {
  std::vector<std::vector<Index>> out;
  if (q < 0 || q > d) return out;
  std::vector<Index> cur(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int j = q - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == d - q + j) --j;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < q; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

std::string set_label(const std::vector<Index>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<long long>(s[i]));
  }
  out += "}";
  return out;
}

Rat minor_det(const RatMatrix& b, const std::vector<Index>& rows,
              const std::vector<Index>& cols) {
  const Index q = static_cast<Index>(rows.size());
  RatMatrix a(q, q);
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      a(i, j) = b(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  Rat det = 1;
  for (Index col = 0; col < q; ++col) {
    Index piv = -1;
    for (Index r = col; r < q; ++r)
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
    for (Index r = col + 1; r < q; ++r) {
      if (a(r, col) == 0) continue;
      const Rat factor = a(r, col) / pivot;
      a.row(r) -= factor * a.row(col);
    }
  }
  return det;
}

// Coordinates of the q-th exterior power of the inclusion span(basis) into
// the ambient space: rows over ambient q-subsets, columns over q-subsets of
// basis columns, entries the corresponding minors.
RatMatrix wedge_matrix(const RatMatrix& basis,
                       const std::vector<std::vector<Index>>& ambient_subsets,
                       const std::vector<std::vector<Index>>& basis_subsets) {
  RatMatrix w(static_cast<Index>(ambient_subsets.size()),
              static_cast<Index>(basis_subsets.size()));
  for (Index r = 0; r < w.rows(); ++r)
    for (Index c = 0; c < w.cols(); ++c)
      w(r, c) = minor_det(basis, ambient_subsets[static_cast<std::size_t>(r)],
                          basis_subsets[static_cast<std::size_t>(c)]);
  return w;
}

// Contraction by v on ambient wedge coordinates, mapping q-subsets to
// (q-1)-subsets with alternating signs.
RatMatrix contraction_matrix(const IntVector& v,
                             const std::vector<std::vector<Index>>& from,
                             const std::vector<std::vector<Index>>& to) {
  std::map<std::vector<Index>, Index> to_pos;
  for (std::size_t i = 0; i < to.size(); ++i)
    to_pos[to[i]] = static_cast<Index>(i);
  RatMatrix k = RatMatrix::Zero(static_cast<Index>(to.size()),
                                static_cast<Index>(from.size()));
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto& s = from[c];
    for (std::size_t l = 0; l < s.size(); ++l) {
      std::vector<Index> rest = s;
      rest.erase(rest.begin() + static_cast<long>(l));
      const Rat sign = (l % 2 == 0) ? 1 : -1;
      k(to_pos.at(rest), static_cast<Index>(c)) += sign * Rat(v[s[l]]);
    }
  }
  return k;
}

bool is_present(const ComplexContext& ctx, ComplexKind kind,
                const std::vector<Index>& j) {
  switch (kind) {
    case ComplexKind::Ishida: return true;
    case ComplexKind::Residue: return ctx.survivors.count(j) != 0;
    case ComplexKind::Kernel: return ctx.survivors.count(j) == 0;
  }
  return false;
}

struct SummandData {
  std::vector<Index> members;               // the subset J
  RatMatrix w;                              // wedge coordinates of its term
  std::vector<std::vector<Index>> columns;  // q-subsets of the kernel basis
  Index offset = 0;                         // position inside the direct sum
  Index width = 0;
};

}  // namespace

const char* complex_kind_name(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Ishida: return "ishida";
    case ComplexKind::Residue: return "residue";
    case ComplexKind::Kernel: return "kernel";
  }
  return "?";
}

ComplexContext make_context(const Cone& sigma, const Fan& fan) {
  ComplexContext ctx{sigma, fan, validate_refinement(sigma, fan), {}, true};
  const Index k = sigma.num_rays();
  for (const auto& members : fan_cone_sets(fan)) {
    bool inside = true;
    for (Index g : members)
      if (g >= k) {
        inside = false;
        break;
      }
    if (inside) ctx.survivors.insert(members);
  }
  for (const auto& members : fan.max_cones) {
    IntMatrix sub(fan.rays.rows(), static_cast<Index>(members.size()));
    for (std::size_t j = 0; j < members.size(); ++j)
      sub.col(static_cast<Index>(j)) = fan.rays.col(members[j]);
    if (rank_of(sub) != sub.cols()) ctx.fan_simplicial = false;
  }
  return ctx;
}

std::vector<Index> degree_support(const ComplexContext& ctx, const IntVector& u) {
  const Cone& sigma = ctx.sigma;
  if (u.size() != sigma.ambient_rank())
    fail(ErrorCode::MalformedInput, "degree has the wrong rank");
  std::vector<Index> support;
  for (Index j = 0; j < sigma.num_rays(); ++j) {
    Int pairing = dot(u, sigma.rays().col(j));
    if (pairing < 0)
      fail(ErrorCode::DegreeOutsideDualCone,
           "degree pairs negatively with a ray", vector_to_string(u));
    if (pairing == 0) support.push_back(j);
  }
  return support;
}

FiniteComplex assemble_degree_complex(const ComplexContext& ctx,
                                      ComplexKind kind, int p,
                                      const IntVector& u) {
  const Index n = ctx.sigma.ambient_rank();
  if (p < 0 || p > n)
    fail(ErrorCode::InvalidSpec, "form degree out of range",
         "p=" + std::to_string(p));
  if (kind != ComplexKind::Ishida && !ctx.fan_simplicial)
    fail(ErrorCode::UnsupportedNonSimplicial,
         "residue and kernel complexes need a simplicial fan");
  const std::vector<Index> support = degree_support(ctx, u);
  const int top_m = std::min<int>(p, static_cast<int>(support.size()));

  // ambient wedge coordinates for every exterior power in play
  std::vector<std::vector<std::vector<Index>>> ambient(static_cast<std::size_t>(p) + 1);
  for (int q = 0; q <= p; ++q) ambient[static_cast<std::size_t>(q)] = index_subsets(n, q);

  std::vector<std::vector<SummandData>> layers(static_cast<std::size_t>(top_m) + 1);
  std::vector<ComplexTerm> terms(static_cast<std::size_t>(top_m) + 1);
  for (int m = 0; m <= top_m; ++m) {
    const int q = p - m;
    Index offset = 0;
    ComplexTerm& term = terms[static_cast<std::size_t>(m)];
    for (auto& members_idx : index_subsets(static_cast<Index>(support.size()), m)) {
      std::vector<Index> members;
      members.reserve(members_idx.size());
      for (Index t : members_idx) members.push_back(support[static_cast<std::size_t>(t)]);
      if (!is_present(ctx, kind, members)) continue;
      RatMatrix rows(static_cast<Index>(members.size()), n);
      for (std::size_t t = 0; t < members.size(); ++t)
        rows.row(static_cast<Index>(t)) =
            to_rational(ctx.sigma.rays()).col(members[t]).transpose();
      RankKernel rk = rank_and_kernel(rows);
      SummandData data;
      data.members = members;
      data.columns = index_subsets(rk.kernel.cols(), q);
      data.w = wedge_matrix(rk.kernel, ambient[static_cast<std::size_t>(q)], data.columns);
      data.offset = offset;
      data.width = static_cast<Index>(data.columns.size());
      offset += data.width;
      for (const auto& cols : data.columns)
        term.basis_labels.push_back(set_label(members) + "|" + set_label(cols));
      layers[static_cast<std::size_t>(m)].push_back(std::move(data));
    }
    term.dimension = offset;
  }

  std::vector<RatMatrix> differentials;
  for (int m = 0; m < top_m; ++m) {
    const int q = p - m;
    const auto& src_layer = layers[static_cast<std::size_t>(m)];
    const auto& dst_layer = layers[static_cast<std::size_t>(m) + 1];
    RatMatrix d = RatMatrix::Zero(terms[static_cast<std::size_t>(m) + 1].dimension,
                                  terms[static_cast<std::size_t>(m)].dimension);
    for (const SummandData& src : src_layer) {
      if (src.width == 0) continue;
      for (Index add : support) {
        if (std::binary_search(src.members.begin(), src.members.end(), add))
          continue;
        std::vector<Index> grown = src.members;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), add), add);
        const SummandData* dst = nullptr;
        for (const SummandData& cand : dst_layer)
          if (cand.members == grown) {
            dst = &cand;
            break;
          }
        if (!dst) continue;  // absent in this kind
        RatMatrix image =
            contraction_matrix(ctx.sigma.rays().col(add),
                               ambient[static_cast<std::size_t>(q)],
                               ambient[static_cast<std::size_t>(q) - 1]) *
            src.w;
        if (dst->width == 0) {
          for (Index r = 0; r < image.rows(); ++r)
            for (Index c = 0; c < image.cols(); ++c)
              if (image(r, c) != 0)
                fail(ErrorCode::Internal,
                     "contraction does not land in the smaller term");
          continue;
        }
        d.block(dst->offset, src.offset, dst->width, src.width) =
            solve_exact(dst->w, image);
      }
    }
    differentials.push_back(std::move(d));
  }

  while (terms.size() > 1 && terms.back().dimension == 0) {
    terms.pop_back();
    differentials.pop_back();
  }

  return FiniteComplex(0, std::move(terms), std::move(differentials));
}

GradedCohomologyTable graded_cohomology(const ComplexContext& ctx,
                                        ComplexKind kind, int p,
                                        const Int& bound, int threads) {
  const std::vector<IntVector> degrees = enumerate_degrees(ctx.sigma, bound);
  std::vector<std::map<int, Index>> dims(degrees.size());
  parallel_for(degrees.size(), threads, [&](std::size_t i) {
    FiniteComplex complex = assemble_degree_complex(ctx, kind, p, degrees[i]);
    for (const auto& [degree, h] : complex.cohomology_dims())
      if (degree >= 1) dims[i][degree] = h;
  });
  GradedCohomologyTable table;
  table.kind = complex_kind_name(kind);
  table.p = p;
  table.bound = bound;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (dims[i].empty()) continue;
    table.entries.push_back({degrees[i], dims[i]});
    for (const auto& [degree, h] : dims[i]) table.totals[degree] += h;
  }
  return table;
}

GradedCohomologyTable p1_higher_image(const ComplexContext& ctx,
                                      const Int& bound, int threads) {
  const std::vector<IntVector> degrees = enumerate_degrees(ctx.sigma, bound);
  const Index n = ctx.sigma.ambient_rank();
  std::vector<Index> dims(degrees.size(), 0);
  parallel_for(degrees.size(), threads, [&](std::size_t i) {
    std::vector<Index> support = degree_support(ctx, degrees[i]);
    IntMatrix rows(static_cast<Index>(support.size()), n);
    for (std::size_t t = 0; t < support.size(); ++t)
      rows.row(static_cast<Index>(t)) = ctx.sigma.rays().col(support[t]).transpose();
    dims[i] = static_cast<Index>(support.size()) - rank_of(rows);
  });
  GradedCohomologyTable table;
  table.kind = "p1";
  table.p = 1;
  table.bound = bound;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (dims[i] == 0) continue;
    table.entries.push_back({degrees[i], {{1, dims[i]}}});
    table.totals[1] += dims[i];
  }
  return table;
}

NonvanishingWitness nonvanishing_witness(const ComplexContext& ctx, int p) {
  const Cone& sigma = ctx.sigma;
  const Index n = sigma.ambient_rank();
  if (p < 0 || p > n)
    fail(ErrorCode::InvalidSpec, "form degree out of range",
         "p=" + std::to_string(p));
  if (!sigma.faces().back().simplicial)
    fail(ErrorCode::UnsupportedNonSimplicial,
         "witness search needs a simplicial base cone");
  if (!ctx.profile.codim_center)
    fail(ErrorCode::NoSingularLocus, "the fan subdivides nothing");
  const Index c = *ctx.profile.codim_center;
  if (p < c)
    fail(ErrorCode::PBelowC, "no witness below the subdivided codimension",
         "p=" + std::to_string(p) + " c=" + std::to_string(static_cast<long long>(c)));

  const std::vector<Index>& face = ctx.profile.missing_faces.front();
  if (static_cast<Index>(face.size()) != c)
    fail(ErrorCode::Internal, "first subdivided face is not of minimal dimension");

  IntMatrix rows(c, n);
  for (std::size_t t = 0; t < face.size(); ++t)
    rows.row(static_cast<Index>(t)) = sigma.rays().col(face[t]).transpose();
  SmithResult s = snf(rows);
  const Index free = n - static_cast<Index>(s.divisors.size());
  IntMatrix kernel = s.right.rightCols(free);

  std::vector<Index> outside;
  for (Index j = 0; j < sigma.num_rays(); ++j)
    if (!std::binary_search(face.begin(), face.end(), j)) outside.push_back(j);

  for (Int tier = 1; tier <= 128; tier *= 2) {
    std::optional<IntVector> best;
    std::vector<Int> t(static_cast<std::size_t>(free), -tier);
    while (true) {
      IntVector u = IntVector::Zero(n);
      for (Index i = 0; i < free; ++i)
        u += t[static_cast<std::size_t>(i)] * kernel.col(i);
      bool feasible = true;
      for (Index j : outside)
        if (dot(u, sigma.rays().col(j)) < 1) {
          feasible = false;
          break;
        }
      if (feasible && (!best || lex_less(u, *best))) best = u;
      std::size_t pos = 0;
      while (pos < t.size()) {
        ++t[pos];
        if (t[pos] <= tier) break;
        t[pos] = -tier;
        ++pos;
      }
      if (pos == t.size()) break;
    }
    if (best) return {face, *best};
    if (free == 0) break;  // a single candidate; larger tiers add nothing
  }
  fail(ErrorCode::WitnessSearchExhausted,
       "no degree isolates the subdivided face", set_label(face));
}

CrosscheckSummary kp_crosscheck(const ComplexContext& ctx, int p,
                                const Int& bound, int threads) {
  if (!ctx.sigma.faces().back().simplicial)
    fail(ErrorCode::UnsupportedNonSimplicial,
         "the kernel comparison needs a simplicial base cone");
  const std::vector<IntVector> degrees = enumerate_degrees(ctx.sigma, bound);
  std::vector<long long> counts(degrees.size(), 0);
  parallel_for(degrees.size(), threads, [&](std::size_t i) {
    const IntVector& u = degrees[i];
    const std::string at = "u=" + vector_to_string(u);
    FiniteComplex ishida = assemble_degree_complex(ctx, ComplexKind::Ishida, p, u);
    for (const auto& [degree, h] : ishida.cohomology_profile())
      if (degree >= 1 && h != 0)
        fail(ErrorCode::CrosscheckFailure,
             "base complex has positive-degree cohomology",
             at + " i=" + std::to_string(degree));
    FiniteComplex kernel = assemble_degree_complex(ctx, ComplexKind::Kernel, p, u);
    for (int m = 0; m < kernel.term_count(); ++m) {
      const bool below =
          !ctx.profile.codim_center || m < *ctx.profile.codim_center;
      if (below && kernel.term(m).dimension != 0)
        fail(ErrorCode::CrosscheckFailure,
             "kernel complex has a term below the subdivided codimension",
             at + " m=" + std::to_string(m));
    }
    FiniteComplex residue = assemble_degree_complex(ctx, ComplexKind::Residue, p, u);
    std::map<int, Index> res_dims = residue.cohomology_dims();
    std::map<int, Index> ker_dims = kernel.cohomology_dims();
    const int top = std::max(residue.term_count(), kernel.term_count()) + 1;
    long long compared = 0;
    for (int i_deg = 1; i_deg <= top; ++i_deg) {
      Index lhs = res_dims.count(i_deg) ? res_dims[i_deg] : 0;
      Index rhs = ker_dims.count(i_deg + 1) ? ker_dims[i_deg + 1] : 0;
      if (lhs != rhs)
        fail(ErrorCode::CrosscheckFailure,
             "residue cohomology disagrees with the shifted kernel",
             at + " i=" + std::to_string(i_deg));
      ++compared;
    }
    counts[i] = compared;
  });
  CrosscheckSummary summary;
  summary.degrees = static_cast<long long>(degrees.size());
  for (long long c : counts) summary.comparisons += c;
  return summary;
}

}  // namespace toric
