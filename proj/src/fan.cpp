#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "toric/exact_linalg.hpp"

namespace toric {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int out = 0;
  for (Index i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

bool is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

std::vector<Int> key_of(const IntVector& v) {
  std::vector<Int> key(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) key[static_cast<std::size_t>(i)] = v[i];
  return key;
}

IntMatrix columns_of(const IntMatrix& rays, const std::vector<Index>& members) {
  IntMatrix out(rays.rows(), static_cast<Index>(members.size()));
  for (std::size_t j = 0; j < members.size(); ++j)
    out.col(static_cast<Index>(j)) = rays.col(members[j]);
  return out;
}

Cone member_cone(const Fan& fan, const std::vector<Index>& members) {
  return Cone::from_rays(columns_of(fan.rays, members));
}

// local face indices -> global ray indices (members must be sorted, which
// keeps the image sorted too)
std::vector<Index> to_global(const std::vector<Index>& members,
                             const std::vector<Index>& local) {
  std::vector<Index> out;
  out.reserve(local.size());
  for (Index l : local) out.push_back(members[static_cast<std::size_t>(l)]);
  return out;
}

// Simplicial subcones covering `c` with disjoint interiors: recursively join
// the first ray with the triangulated facets away from it.
std::vector<IntMatrix> pulling_triangulation(const Cone& c) {
  const Index d = c.dim();
  if (c.num_rays() == d) return {c.rays()};
  std::vector<IntMatrix> out;
  for (const FaceInfo& f : c.faces()) {
    if (f.dim != d - 1) continue;
    if (std::binary_search(f.rays.begin(), f.rays.end(), Index{0})) continue;
    Cone facet = Cone::from_rays(columns_of(c.rays(), f.rays));
    for (const IntMatrix& t : pulling_triangulation(facet)) {
      IntMatrix s(c.ambient_rank(), t.cols() + 1);
      s.col(0) = c.rays().col(0);
      s.rightCols(t.cols()) = t;
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct FacePick {
  Index dim = 0;
  std::vector<Index> rays;  // global, sorted
};

bool better_pick(const FacePick& a, const FacePick& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.rays < b.rays;
}

}  // namespace

Fan face_fan(const Cone& sigma) {
  Fan fan;
  fan.ambient_rank = sigma.ambient_rank();
  fan.rays = sigma.rays();
  std::vector<Index> all(static_cast<std::size_t>(sigma.num_rays()));
  for (Index j = 0; j < sigma.num_rays(); ++j)
    all[static_cast<std::size_t>(j)] = j;
  fan.max_cones.push_back(std::move(all));
  return fan;
}

std::set<std::vector<Index>> fan_cone_sets(const Fan& fan) {
  std::set<std::vector<Index>> sets;
  for (const auto& members : fan.max_cones) {
    Cone c = member_cone(fan, members);
    for (const FaceInfo& f : c.faces()) sets.insert(to_global(members, f.rays));
  }
  return sets;
}

Rat slice_volume(const Cone& cone, const IntVector& level) {
  if (!cone.full_dimensional())
    fail(ErrorCode::NotFullDimensional, "slice volume needs a full-dimensional cone");
  const Index n = cone.ambient_rank();
  for (Index j = 0; j < cone.num_rays(); ++j)
    if (dot(level, cone.rays().col(j)) <= 0)
      fail(ErrorCode::Internal, "level form is not positive on the cone");
  Rat total = 0;
  for (const IntMatrix& s : pulling_triangulation(cone)) {
    Rat term = Rat(abs(determinant(s)));
    for (Index j = 0; j < s.cols(); ++j) term /= Rat(dot(level, s.col(j)));
    total += term;
  }
  Int fact = 1;
  for (Index i = 2; i <= n; ++i) fact *= i;
  return total / Rat(fact);
}

RefinementProfile validate_refinement(const Cone& sigma, const Fan& fan) {
  if (!sigma.full_dimensional())
    fail(ErrorCode::NotFullDimensional, "base cone must be full-dimensional");
  const Index n = sigma.ambient_rank();
  if (fan.ambient_rank != n || fan.rays.rows() != n)
    fail(ErrorCode::InvalidFan, "ambient rank mismatch");
  const Index r = fan.rays.cols();
  const Index k = sigma.num_rays();
  if (r < k)
    fail(ErrorCode::RayOrderMismatch, "fan lists fewer rays than the base cone");

  std::set<std::vector<Int>> seen;
  for (Index j = 0; j < r; ++j) {
    IntVector col = fan.rays.col(j);
    if (is_zero(col)) fail(ErrorCode::InvalidFan, "zero ray");
    if (primitive(col) != col)
      fail(ErrorCode::InvalidFan, "ray is not primitive", vector_to_string(col));
    if (!seen.insert(key_of(col)).second)
      fail(ErrorCode::InvalidFan, "duplicate ray", vector_to_string(col));
  }
  for (Index j = 0; j < k; ++j)
    if (IntVector(fan.rays.col(j)) != IntVector(sigma.rays().col(j)))
      fail(ErrorCode::RayOrderMismatch,
           "base cone rays must come first, in their original order");

  if (fan.max_cones.empty()) fail(ErrorCode::InvalidFan, "no maximal cones");
  std::vector<char> used(static_cast<std::size_t>(r), 0);
  for (const auto& members : fan.max_cones) {
    if (members.empty()) fail(ErrorCode::InvalidFan, "empty maximal cone");
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] < 0 || members[i] >= r)
        fail(ErrorCode::InvalidFan, "ray index out of range");
      if (i > 0 && members[i] <= members[i - 1])
        fail(ErrorCode::InvalidFan, "maximal cone indices must strictly increase");
      used[static_cast<std::size_t>(members[i])] = 1;
    }
  }
  for (Index j = 0; j < r; ++j)
    if (!used[static_cast<std::size_t>(j)])
      fail(ErrorCode::InvalidFan, "ray not used by any maximal cone",
           vector_to_string(fan.rays.col(j)));
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
    for (std::size_t j = 0; j < fan.max_cones.size(); ++j) {
      if (i == j) continue;
      if (std::includes(fan.max_cones[i].begin(), fan.max_cones[i].end(),
                        fan.max_cones[j].begin(), fan.max_cones[j].end()))
        fail(ErrorCode::InvalidFan, "maximal cone contained in another");
    }

  std::vector<Cone> cones;
  cones.reserve(fan.max_cones.size());
  for (const auto& members : fan.max_cones) {
    try {
      cones.push_back(member_cone(fan, members));
    } catch (const Error& e) {
      fail(ErrorCode::InvalidFan, "maximal cone is not a valid cone", e.what());
    }
    if (!cones.back().full_dimensional())
      fail(ErrorCode::InvalidFan, "maximal cone is not full-dimensional");
  }

  // pairwise intersections must be common faces
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const IntMatrix& hi = cones[i].dual_rays();
      const IntMatrix& hj = cones[j].dual_rays();
      IntMatrix stacked(hi.cols() + hj.cols(), n);
      for (Index t = 0; t < hi.cols(); ++t)
        stacked.row(t) = hi.col(t).transpose();
      for (Index t = 0; t < hj.cols(); ++t)
        stacked.row(hi.cols() + t) = hj.col(t).transpose();
      DualDescription meet = dual_description(stacked);
      if (meet.lines.cols() != 0)
        fail(ErrorCode::Internal, "intersection of pointed cones has a line");
      std::vector<Index> shared;
      for (Index t = 0; t < meet.rays.cols(); ++t) {
        IntVector ray = meet.rays.col(t);
        Index found = -1;
        for (Index g = 0; g < r; ++g)
          if (IntVector(fan.rays.col(g)) == ray) {
            found = g;
            break;
          }
        if (found < 0)
          fail(ErrorCode::InvalidFan, "cones meet outside a common face",
               vector_to_string(ray));
        shared.push_back(found);
      }
      std::sort(shared.begin(), shared.end());
      for (std::size_t t : {i, j}) {
        const auto& members = fan.max_cones[t];
        std::vector<Index> local;
        bool ok = true;
        for (Index g : shared) {
          auto it = std::lower_bound(members.begin(), members.end(), g);
          if (it == members.end() || *it != g) {
            ok = false;
            break;
          }
          local.push_back(static_cast<Index>(it - members.begin()));
        }
        if (!ok || !cones[t].has_face(local))
          fail(ErrorCode::InvalidFan, "cones meet outside a common face");
      }
    }

  // support: every ray inside sigma, and slice volumes add up exactly
  for (Index j = 0; j < r; ++j)
    if (!sigma.contains(fan.rays.col(j)))
      fail(ErrorCode::NotARefinement, "ray outside the base cone",
           vector_to_string(fan.rays.col(j)));
  for (std::size_t i = 0; i < cones.size(); ++i) {
    IntVector inner = IntVector::Zero(n);
    for (Index j = 0; j < cones[i].num_rays(); ++j)
      inner += cones[i].rays().col(j);
    std::size_t hits = 0;
    for (const Cone& c : cones)
      if (c.contains(inner)) ++hits;
    if (hits != 1)
      fail(ErrorCode::NotARefinement, "maximal cone interiors overlap");
  }
  IntVector level = IntVector::Zero(n);
  for (Index h = 0; h < sigma.dual_rays().cols(); ++h)
    level += sigma.dual_rays().col(h);
  Rat target = slice_volume(sigma, level);
  Rat covered = 0;
  for (const Cone& c : cones) covered += slice_volume(c, level);
  if (covered != target)
    fail(ErrorCode::NotARefinement, "fan does not cover the base cone");

  std::set<std::vector<Index>> sets;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (const FaceInfo& f : cones[i].faces())
      sets.insert(to_global(fan.max_cones[i], f.rays));
  for (Index j = 0; j < r; ++j)
    if (!sets.count({j}))
      fail(ErrorCode::Internal, "ray of the fan is not a cone of the fan");

  RefinementProfile profile;
  bool missing_smooth_face = false;
  for (const FaceInfo& f : sigma.faces()) {
    if (sets.count(f.rays)) continue;
    profile.missing_faces.push_back(f.rays);
    if (!profile.codim_center || f.dim < *profile.codim_center)
      profile.codim_center = f.dim;
    if (f.smooth) missing_smooth_face = true;
  }
  profile.strong = !missing_smooth_face;
  profile.smooth = true;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (const FaceInfo& f : cones[i].faces())
      if (!f.smooth) profile.smooth = false;
  for (Index j = k; j < r; ++j) profile.exceptional_rays.push_back(j);
  return profile;
}

Fan star_subdivide(const Fan& fan, const IntVector& v) {
  if (v.size() != fan.ambient_rank)
    fail(ErrorCode::Internal, "subdivision point has the wrong rank");
  if (is_zero(v))
    fail(ErrorCode::NonPrimitivePoint, "cannot subdivide at the origin");
  if (primitive(v) != v)
    fail(ErrorCode::NonPrimitivePoint, "subdivision point must be primitive",
         vector_to_string(v));

  std::vector<Cone> cones;
  cones.reserve(fan.max_cones.size());
  for (const auto& members : fan.max_cones)
    cones.push_back(member_cone(fan, members));
  std::vector<char> contains_v(cones.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    contains_v[i] = cones[i].contains(v) ? 1 : 0;
    any = any || contains_v[i];
  }
  if (!any)
    fail(ErrorCode::PointOutsideSupport, "subdivision point outside the fan",
         vector_to_string(v));

  Index v_idx = -1;
  for (Index j = 0; j < fan.rays.cols(); ++j)
    if (IntVector(fan.rays.col(j)) == v) {
      v_idx = j;
      break;
    }
  Fan out;
  out.ambient_rank = fan.ambient_rank;
  if (v_idx < 0) {
    out.rays.resize(fan.rays.rows(), fan.rays.cols() + 1);
    out.rays.leftCols(fan.rays.cols()) = fan.rays;
    out.rays.col(fan.rays.cols()) = v;
    v_idx = fan.rays.cols();
  } else {
    out.rays = fan.rays;
  }

  std::set<std::vector<Index>> next;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!contains_v[i]) {
      next.insert(fan.max_cones[i]);
      continue;
    }
    const Cone& c = cones[i];
    const Index d = c.dim();
    for (const FaceInfo& f : c.faces()) {
      if (f.dim != d - 1) continue;
      if (dot(f.witness, v) == 0) continue;  // v lies on this facet
      std::vector<Index> members = to_global(fan.max_cones[i], f.rays);
      members.insert(std::lower_bound(members.begin(), members.end(), v_idx),
                     v_idx);
      next.insert(std::move(members));
    }
  }
  out.max_cones.assign(next.begin(), next.end());
  return out;
}

std::vector<IntVector> parallelotope_points(const IntMatrix& w) {
  const Index n = w.rows();
  const Index d = w.cols();
  SmithResult s = snf(w);
  if (static_cast<Index>(s.divisors.size()) != d)
    fail(ErrorCode::Internal, "box spanned by dependent columns");
  IntMatrix left_inv = unimodular_inverse(s.left);
  RatMatrix wq = to_rational(w);
  Int total = 1;
  for (const Int& div : s.divisors) total *= div;

  std::vector<IntVector> points;
  std::vector<Int> z(static_cast<std::size_t>(d), 0);
  while (true) {
    // advance the odometer, skipping the origin coset
    std::size_t pos = 0;
    while (pos < z.size()) {
      ++z[pos];
      if (z[pos] < s.divisors[pos]) break;
      z[pos] = 0;
      ++pos;
    }
    if (pos == z.size()) break;
    IntVector y = IntVector::Zero(n);
    for (Index i = 0; i < d; ++i) y[i] = z[static_cast<std::size_t>(i)];
    IntVector x = left_inv * y;
    RatMatrix lambda = solve_exact(wq, to_rational(x));
    for (Index i = 0; i < d; ++i) x -= floor_rat(lambda(i, 0)) * w.col(i);
    if (is_zero(x)) fail(ErrorCode::Internal, "nontrivial coset reduced to zero");
    points.push_back(std::move(x));
  }
  if (static_cast<Int>(points.size()) != total - 1)
    fail(ErrorCode::Internal, "box point count disagrees with the lattice index");
  return points;
}

Fan resolve(const Cone& sigma, bool require_strong) {
  if (!sigma.full_dimensional())
    fail(ErrorCode::NotFullDimensional, "can only resolve full-dimensional cones");
  Fan fan = face_fan(sigma);

  // Phase 1: split non-simplicial faces at their primitive ray sums,
  // smallest first.
  for (int iter = 0;; ++iter) {
    if (iter > 128)
      fail(ErrorCode::Internal, "simplicial subdivision did not terminate");
    std::optional<FacePick> pick;
    for (const auto& members : fan.max_cones) {
      Cone c = member_cone(fan, members);
      for (const FaceInfo& f : c.faces()) {
        if (f.simplicial) continue;
        FacePick candidate{f.dim, to_global(members, f.rays)};
        if (!pick || better_pick(candidate, *pick)) pick = std::move(candidate);
      }
    }
    if (!pick) break;
    IntVector sum = IntVector::Zero(fan.ambient_rank);
    for (Index j : pick->rays) sum += fan.rays.col(j);
    fan = star_subdivide(fan, primitive(sum));
  }

  // Phase 2: split singular (now simplicial) faces at box lattice points,
  // smallest faces first; the point of least coordinate sum wins.
  for (int iter = 0;; ++iter) {
    if (iter > 1024)
      fail(ErrorCode::Internal, "smooth subdivision did not terminate");
    std::optional<FacePick> pick;
    for (const auto& members : fan.max_cones) {
      Cone c = member_cone(fan, members);
      for (const FaceInfo& f : c.faces()) {
        if (f.smooth || f.rays.empty()) continue;
        FacePick candidate{f.dim, to_global(members, f.rays)};
        if (!pick || better_pick(candidate, *pick)) pick = std::move(candidate);
      }
    }
    if (!pick) break;
    std::set<std::vector<Int>> candidates;
    for (const IntVector& x : parallelotope_points(columns_of(fan.rays, pick->rays)))
      candidates.insert(key_of(primitive(x)));
    std::optional<std::pair<Int, std::vector<Int>>> best;
    for (const auto& key : candidates) {
      Int coord_sum = 0;
      for (const Int& c : key) coord_sum += c;
      if (!best || coord_sum < best->first ||
          (coord_sum == best->first && key < best->second))
        best = std::pair{coord_sum, key};
    }
    if (!best) fail(ErrorCode::Internal, "singular face with an empty box");
    IntVector v(fan.ambient_rank);
    for (Index i = 0; i < v.size(); ++i)
      v[i] = best->second[static_cast<std::size_t>(i)];
    fan = star_subdivide(fan, v);
  }

  RefinementProfile profile = validate_refinement(sigma, fan);
  if (!profile.smooth)
    fail(ErrorCode::Internal, "subdivision finished but is not smooth");
  if (require_strong && !profile.strong) throw StrongnessError(fan, profile);
  return fan;
}

}  // namespace toric
