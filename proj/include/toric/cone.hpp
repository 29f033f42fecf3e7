#pragma once

#include <optional>
#include <set>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/types.hpp"

namespace toric {

/// V-description of the polyhedral cone {x : inequalities * x >= 0}
/// (inequality normals are the rows).
struct DualDescription {
  /// Columns: lattice basis of the lineality space {x : inequalities*x = 0}.
  IntMatrix lines;
  /// Columns: primitive extreme rays modulo lineality, lex-sorted.
  IntMatrix rays;
};

/// Incremental double description with explicit lineality handling.
/// Exact integer arithmetic throughout; deterministic output.
DualDescription dual_description(const IntMatrix& inequalities);

struct FaceInfo {
  std::vector<Index> rays;  // sorted indices into the cone's ray list
  Index dim = 0;
  /// Vector in the dual cone with face = cone ∩ witness^⊥ (zero for the
  /// cone itself).
  IntVector witness;
  bool simplicial = false;
  bool smooth = false;
  /// Index of the lattice generated by the face's rays inside the saturated
  /// sublattice of its span (product of elementary divisors). Only defined
  /// for simplicial faces; 0 otherwise.
  Int multiplicity = 0;
};

/// Strongly convex rational polyhedral cone, represented by its primitive
/// extreme ray generators (columns, kept in the order given).
class Cone {
 public:
  /// Validates: rays primitive, pairwise distinct, strongly convex, and
  /// exactly the extreme rays of their nonnegative span. Throws InvalidCone.
  static Cone from_rays(IntMatrix rays);

  Index ambient_rank() const { return rays_.rows(); }
  Index num_rays() const { return rays_.cols(); }
  Index dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_rank(); }

  const IntMatrix& rays() const { return rays_; }
  /// Extreme rays of the dual cone modulo lineality (= primitive facet
  /// normals), lex-sorted columns. For full-dimensional cones these generate
  /// the dual cone outright.
  const IntMatrix& dual_rays() const { return dual_rays_; }
  /// Lattice basis of span(cone)^⊥ (empty for full-dimensional cones).
  const IntMatrix& dual_lines() const { return dual_lines_; }

  bool contains(const IntVector& x) const;

  /// All faces including the origin and the cone itself, sorted by
  /// (dimension, ray index set).
  const std::vector<FaceInfo>& faces() const { return faces_; }
  bool has_face(const std::vector<Index>& sorted_ray_set) const;
  const FaceInfo& face(const std::vector<Index>& sorted_ray_set) const;

 private:
  Cone() = default;
  IntMatrix rays_;
  IntMatrix dual_rays_;
  IntMatrix dual_lines_;
  Index dim_ = 0;
  std::vector<FaceInfo> faces_;
};

struct DualCone {
  /// Primitive extreme rays of σ^∨; equivalently σ's facet normals, so they
  /// are also the irredundant inequality description of σ.
  IntMatrix generators;
};

struct ConeProfile {
  bool simplicial = false;
  bool smooth = false;
  /// Product of elementary divisors of the ray matrix; 0 when not simplicial.
  Int multiplicity = 0;
  /// Min dimension over non-smooth faces; empty = smooth everywhere.
  std::optional<Index> codim_sing;
};

/// The following operations require a full-dimensional cone and throw
/// NotFullDimensional otherwise.
DualCone dual_cone(const Cone& c);
std::vector<FaceInfo> face_lattice(const Cone& c);
ConeProfile classify(const Cone& c);

/// All u in the dual lattice with 0 ≤ ⟨u, v_j⟩ ≤ bound for every ray v_j,
/// in lexicographic order.
std::vector<IntVector> enumerate_degrees(const Cone& c, const Int& bound);

/// Lexicographic comparison of integer vectors of equal size.
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace toric
