#include "toric/cone.hpp"

#include <algorithm>

namespace toric {

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

std::vector<Int> key_of(const IntVector& v) {
  std::vector<Int> k(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = v[i];
  return k;
}

IntMatrix pack_columns(std::vector<IntVector> cols, Index rows) {
  std::sort(cols.begin(), cols.end(),
            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  IntMatrix out(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    out.col(static_cast<Index>(j)) = cols[j];
  return out;
}

}  // namespace

DualDescription dual_description(const IntMatrix& inequalities) {
  const Index n = inequalities.cols();
  const Index m = inequalities.rows();
  if (m > 60)
    fail(ErrorCode::Internal, "double description limited to 60 inequalities");

  std::vector<IntVector> lines;
  std::vector<IntVector> rays;
  for (Index i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e[i] = 1;
    lines.push_back(e);
  }

  for (Index step = 0; step < m; ++step) {
    const IntVector a = inequalities.row(step).transpose();
    if (is_zero(a)) continue;

    Index l0 = -1;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (dot(a, lines[j]) != 0) {
        l0 = static_cast<Index>(j);
        break;
      }
    }

    if (l0 >= 0) {
      // A line crosses the new halfspace: it splits into a ray on the
      // positive side, and everything else is projected onto a^⊥ along it.
      IntVector g = lines[static_cast<std::size_t>(l0)];
      Int s0 = dot(a, g);
      if (s0 < 0) {
        g = -g;
        s0 = -s0;
      }
      std::vector<IntVector> new_lines;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (static_cast<Index>(j) == l0) continue;
        const Int sj = dot(a, lines[j]);
        new_lines.push_back(primitive(s0 * lines[j] - sj * g));
      }
      std::set<std::vector<Int>> seen;
      std::vector<IntVector> new_rays;
      auto push_ray = [&](const IntVector& r) {
        if (seen.insert(key_of(r)).second) new_rays.push_back(r);
      };
      push_ray(g);
      for (const IntVector& r : rays) {
        const Int sr = dot(a, r);
        IntVector proj = s0 * r - sr * g;
        if (!is_zero(proj)) push_ray(primitive(proj));
      }
      lines = std::move(new_lines);
      rays = std::move(new_rays);
    } else {
      // All lines are orthogonal to a: ordinary double-description step.
      std::vector<Int> side(rays.size());
      bool any_negative = false;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        side[j] = dot(a, rays[j]);
        if (side[j] < 0) any_negative = true;
      }
      if (!any_negative) continue;

      // Tight sets over the inequalities processed so far.
      std::vector<std::uint64_t> tight(rays.size(), 0);
      for (std::size_t j = 0; j < rays.size(); ++j)
        for (Index i = 0; i < step; ++i)
          if (dot(inequalities.row(i).transpose(), rays[j]) == 0)
            tight[j] |= (std::uint64_t{1} << i);

      std::set<std::vector<Int>> seen;
      std::vector<IntVector> new_rays;
      auto push_ray = [&](const IntVector& r) {
        if (seen.insert(key_of(r)).second) new_rays.push_back(r);
      };
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (side[j] >= 0) push_ray(rays[j]);

      for (std::size_t jp = 0; jp < rays.size(); ++jp) {
        if (side[jp] <= 0) continue;
        for (std::size_t jm = 0; jm < rays.size(); ++jm) {
          if (side[jm] >= 0) continue;
          const std::uint64_t common = tight[jp] & tight[jm];
          bool adjacent = true;
          for (std::size_t jo = 0; jo < rays.size(); ++jo) {
            if (jo == jp || jo == jm) continue;
            if ((tight[jo] & common) == common) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          push_ray(primitive(side[jp] * rays[jm] - side[jm] * rays[jp]));
        }
      }
      rays = std::move(new_rays);
    }
  }

  DualDescription out;
  // Canonical lineality: saturated integer kernel of the inequality matrix.
  const SmithResult s = snf(inequalities);
  const Index rank = static_cast<Index>(s.divisors.size());
  out.lines = s.right.rightCols(n - rank);
  out.rays = pack_columns(std::move(rays), n);
  return out;
}

Cone Cone::from_rays(IntMatrix rays) {
  const Index n = rays.rows();
  const Index k = rays.cols();
  if (n < 1) fail(ErrorCode::InvalidCone, "ambient rank must be positive");
  std::set<std::vector<Int>> distinct;
  for (Index j = 0; j < k; ++j) {
    IntVector v = rays.col(j);
    if (is_zero(v)) fail(ErrorCode::InvalidCone, "zero vector is not a ray");
    if (primitive(v) != v)
      fail(ErrorCode::InvalidCone, "ray generator is not primitive",
           vector_to_string(v));
    if (!distinct.insert(key_of(v)).second)
      fail(ErrorCode::InvalidCone, "duplicate ray", vector_to_string(v));
  }

  Cone c;
  c.rays_ = std::move(rays);
  c.dim_ = rank_of(c.rays_);

  // Dual cone data.
  IntMatrix primal_ineq = c.rays_.transpose();
  DualDescription dual = dual_description(primal_ineq);
  c.dual_rays_ = std::move(dual.rays);
  c.dual_lines_ = std::move(dual.lines);

  // Double dualization recovers the canonical extreme rays; the input must
  // match them exactly (this also certifies strong convexity).
  const Index fm = c.dual_rays_.cols();
  const Index fl = c.dual_lines_.cols();
  IntMatrix back_ineq(fm + 2 * fl, n);
  for (Index i = 0; i < fm; ++i) back_ineq.row(i) = c.dual_rays_.col(i).transpose();
  for (Index i = 0; i < fl; ++i) {
    back_ineq.row(fm + 2 * i) = c.dual_lines_.col(i).transpose();
    back_ineq.row(fm + 2 * i + 1) = -c.dual_lines_.col(i).transpose();
  }
  DualDescription back = dual_description(back_ineq);
  if (back.lines.cols() != 0)
    fail(ErrorCode::InvalidCone, "cone is not strongly convex");
  std::set<std::vector<Int>> extreme;
  for (Index j = 0; j < back.rays.cols(); ++j)
    extreme.insert(key_of(back.rays.col(j)));
  if (static_cast<Index>(extreme.size()) != k)
    fail(ErrorCode::InvalidCone,
         "ray list does not match the extreme rays of its span");
  for (Index j = 0; j < k; ++j)
    if (!extreme.count(key_of(c.rays_.col(j))))
      fail(ErrorCode::InvalidCone, "listed ray is not extreme",
           vector_to_string(c.rays_.col(j)));

  // Face lattice: facet incidence sets, closed under intersection.
  std::vector<std::vector<Index>> facet_sets;
  for (Index h = 0; h < fm; ++h) {
    std::vector<Index> f;
    for (Index j = 0; j < k; ++j)
      if (dot(c.dual_rays_.col(h), c.rays_.col(j)) == 0) f.push_back(j);
    facet_sets.push_back(std::move(f));
  }
  std::set<std::vector<Index>> sets;
  {
    std::vector<Index> all(static_cast<std::size_t>(k));
    for (Index j = 0; j < k; ++j) all[static_cast<std::size_t>(j)] = j;
    sets.insert(all);
  }
  for (const auto& f : facet_sets) sets.insert(f);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Index>> current(sets.begin(), sets.end());
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<Index> inter;
        std::set_intersection(current[a].begin(), current[a].end(),
                              current[b].begin(), current[b].end(),
                              std::back_inserter(inter));
        if (sets.insert(inter).second) grew = true;
      }
    }
  }

  for (const auto& s : sets) {
    FaceInfo info;
    info.rays = s;
    IntMatrix sub(n, static_cast<Index>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j)
      sub.col(static_cast<Index>(j)) = c.rays_.col(s[j]);
    info.dim = rank_of(sub);
    IntVector w = IntVector::Zero(n);
    for (Index h = 0; h < fm; ++h) {
      if (std::includes(facet_sets[static_cast<std::size_t>(h)].begin(),
                        facet_sets[static_cast<std::size_t>(h)].end(),
                        s.begin(), s.end()))
        w += c.dual_rays_.col(h);
    }
    info.witness = is_zero(w) ? w : primitive(w);
    info.simplicial = static_cast<Index>(s.size()) == info.dim;
    if (info.simplicial) {
      Int mult = 1;
      for (const Int& d : snf(sub).divisors) mult *= d;
      info.multiplicity = mult;
      info.smooth = (mult == 1);
    }
    c.faces_.push_back(std::move(info));
  }
  std::sort(c.faces_.begin(), c.faces_.end(),
            [](const FaceInfo& a, const FaceInfo& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.rays < b.rays;
            });
  return c;
}

bool Cone::contains(const IntVector& x) const {
  for (Index i = 0; i < dual_lines_.cols(); ++i)
    if (dot(dual_lines_.col(i), x) != 0) return false;
  for (Index i = 0; i < dual_rays_.cols(); ++i)
    if (dot(dual_rays_.col(i), x) < 0) return false;
  return true;
}

bool Cone::has_face(const std::vector<Index>& sorted_ray_set) const {
  for (const FaceInfo& f : faces_)
    if (f.rays == sorted_ray_set) return true;
  return false;
}

const FaceInfo& Cone::face(const std::vector<Index>& sorted_ray_set) const {
  for (const FaceInfo& f : faces_)
    if (f.rays == sorted_ray_set) return f;
  fail(ErrorCode::Internal, "no such face");
}

namespace {

void require_full_dimensional(const Cone& c) {
  if (!c.full_dimensional())
    fail(ErrorCode::NotFullDimensional,
         "operation requires a full-dimensional cone");
}

}  // namespace

DualCone dual_cone(const Cone& c) {
  require_full_dimensional(c);
  return DualCone{c.dual_rays()};
}

std::vector<FaceInfo> face_lattice(const Cone& c) {
  require_full_dimensional(c);
  return c.faces();
}

ConeProfile classify(const Cone& c) {
  require_full_dimensional(c);
  ConeProfile p;
  const FaceInfo& top = c.face([&] {
    std::vector<Index> all(static_cast<std::size_t>(c.num_rays()));
    for (Index j = 0; j < c.num_rays(); ++j) all[static_cast<std::size_t>(j)] = j;
    return all;
  }());
  p.simplicial = top.simplicial;
  p.smooth = top.smooth;
  p.multiplicity = top.multiplicity;
  for (const FaceInfo& f : c.faces()) {
    if (f.smooth) continue;
    if (!p.codim_sing || f.dim < *p.codim_sing) p.codim_sing = f.dim;
  }
  return p;
}

std::vector<IntVector> enumerate_degrees(const Cone& c, const Int& bound) {
  require_full_dimensional(c);
  if (bound < 0) fail(ErrorCode::Internal, "bound must be nonnegative");
  const Index n = c.ambient_rank();
  const Index k = c.num_rays();

  // A full-rank subset of rays pins u to finitely many candidates:
  // solve W^T u = s for every s in the pairing box, keep lattice points.
  std::vector<Index> chosen;
  {
    IntMatrix acc(n, 0);
    for (Index j = 0; j < k && static_cast<Index>(chosen.size()) < n; ++j) {
      IntMatrix trial(n, acc.cols() + 1);
      trial.leftCols(acc.cols()) = acc;
      trial.col(acc.cols()) = c.rays().col(j);
      if (rank_of(trial) == trial.cols()) {
        acc = std::move(trial);
        chosen.push_back(j);
      }
    }
  }
  IntMatrix w(n, n);
  for (Index i = 0; i < n; ++i) w.col(i) = c.rays().col(chosen[static_cast<std::size_t>(i)]);
  const RatMatrix winv =
      solve_exact(to_rational(IntMatrix(w.transpose())), RatMatrix::Identity(n, n));

  std::vector<IntVector> out;
  IntVector s = IntVector::Zero(n);
  while (true) {
    RatVector ur = winv * to_rational(s);
    bool integral = true;
    for (Index i = 0; i < n && integral; ++i)
      if (boost::multiprecision::denominator(ur[i]) != 1) integral = false;
    if (integral) {
      IntVector u(n);
      for (Index i = 0; i < n; ++i) u[i] = boost::multiprecision::numerator(ur[i]);
      bool ok = true;
      for (Index j = 0; j < k && ok; ++j) {
        const Int t = dot(u, c.rays().col(j));
        if (t < 0 || t > bound) ok = false;
      }
      if (ok) out.push_back(std::move(u));
    }
    // odometer over [0, bound]^n
    Index pos = n - 1;
    while (pos >= 0) {
      if (s[pos] < bound) {
        s[pos] += 1;
        break;
      }
      s[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace toric
