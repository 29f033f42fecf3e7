#include "toric/koszul.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace toric {

namespace {

// all size-r subsets of pool, lexicographically by position
std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int r) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(pool.size());
  if (r < 0 || r > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(r));
    for (int i : idx) subset.push_back(pool[static_cast<std::size_t>(i)]);
    out.push_back(std::move(subset));
    int j = r - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - r + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < r; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[static_cast<std::size_t>(i)]);
  }
  out += "}";
  return out;
}

using BasisKey = std::pair<std::vector<int>, std::vector<int>>;  // (I, J)

}  // namespace

FiniteComplex build_koszul_quotient(int n, int k, int p) {
  if (n < 1 || k < 0 || k > n || p < 1 || p > n)
    fail(ErrorCode::InvalidSpec, "need 0 <= k <= n and 0 < p <= n",
         "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" +
             std::to_string(p));

  std::vector<int> marked(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) marked[static_cast<std::size_t>(i)] = i + 1;

  const int top_m = std::min(p, k);
  std::vector<std::vector<BasisKey>> bases(static_cast<std::size_t>(top_m) + 1);
  std::vector<std::map<BasisKey, Index>> positions(static_cast<std::size_t>(top_m) + 1);
  std::vector<ComplexTerm> terms;
  for (int m = 0; m <= top_m; ++m) {
    auto& basis = bases[static_cast<std::size_t>(m)];
    for (const auto& J : subsets_of(marked, m)) {
      std::vector<int> rest;
      for (int i = 1; i <= n; ++i)
        if (!std::binary_search(J.begin(), J.end(), i)) rest.push_back(i);
      for (auto& I : subsets_of(rest, p - m)) basis.emplace_back(std::move(I), J);
    }
    ComplexTerm term;
    term.dimension = static_cast<Index>(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      positions[static_cast<std::size_t>(m)][basis[b]] = static_cast<Index>(b);
      term.basis_labels.push_back(set_label(basis[b].first) + "|" +
                                  set_label(basis[b].second));
    }
    terms.push_back(std::move(term));
  }

  std::vector<RatMatrix> differentials;
  for (int m = 0; m < top_m; ++m) {
    const auto& src = bases[static_cast<std::size_t>(m)];
    const auto& dst_pos = positions[static_cast<std::size_t>(m) + 1];
    RatMatrix d = RatMatrix::Zero(terms[static_cast<std::size_t>(m) + 1].dimension,
                                  terms[static_cast<std::size_t>(m)].dimension);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& [I, J] = src[c];
      for (std::size_t l = 0; l < I.size(); ++l) {
        if (I[l] > k) continue;
        BasisKey target;
        target.first = I;
        target.first.erase(target.first.begin() + static_cast<long>(l));
        target.second = J;
        target.second.insert(
            std::upper_bound(target.second.begin(), target.second.end(), I[l]),
            I[l]);
        const Rat sign = (l % 2 == 0) ? 1 : -1;
        d(dst_pos.at(target), static_cast<Index>(c)) += sign;
      }
    }
    differentials.push_back(std::move(d));
  }

  return FiniteComplex(-p, std::move(terms), std::move(differentials));
}

std::vector<KoszulSweepEntry> koszul_sweep(int n_max) {
  std::vector<KoszulSweepEntry> out;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      for (int p = 1; p <= n; ++p) {
        FiniteComplex complex = build_koszul_quotient(n, k, p);
        KoszulSweepEntry entry{n, k, p, 0};
        for (const auto& [degree, h] : complex.cohomology_profile()) {
          if (degree == -p) {
            entry.bottom_dim = h;
          } else if (h != 0) {
            fail(ErrorCode::LemmaViolation,
                 "cohomology escapes the bottom degree",
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " p=" + std::to_string(p) + " degree=" +
                     std::to_string(degree));
          }
        }
        out.push_back(entry);
      }
  return out;
}

}  // namespace toric
