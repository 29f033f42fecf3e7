#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <optional>
#include <set>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// A fan presented by ray generators and maximal cones. Rays are primitive
/// column vectors; maximal cones are strictly increasing ray-index lists.
/// Plain data — validity is established by validate_refinement.
struct Fan {
  Index ambient_rank = 0;
  IntMatrix rays;
  std::vector<std::vector<Index>> max_cones;
};

/// The trivial subdivision: one maximal cone spanned by all of sigma's rays.
Fan face_fan(const Cone& sigma);

/// Every face of every maximal cone as a sorted global ray-index set,
/// including the origin (the empty set).
std::set<std::vector<Index>> fan_cone_sets(const Fan& fan);

/// How a subdivision sits over the cone it refines.
struct RefinementProfile {
  /// Faces of the base cone that are not cones of the fan — exactly the
  /// faces whose interiors were subdivided.
  std::vector<std::vector<Index>> missing_faces;
  /// Minimum dimension over missing faces; empty when nothing is missing
  /// (the fan is the face fan and the morphism changes nothing).
  std::optional<Index> codim_center;
  /// True when no missing face is smooth: the modified locus sits inside
  /// the singular locus of the base.
  bool strong = false;
  /// True when every cone of the fan is smooth.
  bool smooth = false;
  /// Fan ray indices beyond the base cone's own rays.
  std::vector<Index> exceptional_rays;
};

/// Validates that `fan` is a genuine subdivision of `sigma`: structurally a
/// fan (InvalidFan), sigma's rays listed first and unchanged
/// (RayOrderMismatch), maximal cones full-dimensional and pairwise meeting
/// along common faces (InvalidFan), and total support exactly sigma
/// (NotARefinement). Returns the subdivision profile.
RefinementProfile validate_refinement(const Cone& sigma, const Fan& fan);

/// Star subdivision at a primitive lattice point of the support. Maximal
/// cones containing v are replaced by joins of v with their facets away
/// from v; everything else is kept.
Fan star_subdivide(const Fan& fan, const IntVector& v);

/// Exact volume of {x in cone : <level, x> <= 1} for a full-dimensional
/// cone; `level` must be strictly positive on the cone away from the
/// origin. Used for the support check; exposed for testing.
Rat slice_volume(const Cone& cone, const IntVector& level);

/// Nonzero lattice points of the half-open box {W t : 0 <= t_i < 1} spanned
/// by the columns of a full-column-rank matrix. Empty exactly when the
/// columns extend to a lattice basis.
std::vector<IntVector> parallelotope_points(const IntMatrix& w);

/// Raised by resolve when the constructed smooth subdivision modifies the
/// base cone outside its singular locus although `require_strong` was set.
/// Carries the fan and profile for inspection.
class StrongnessError : public Error {
 public:
  StrongnessError(Fan fan_in, RefinementProfile profile_in)
      : Error(ErrorCode::StrongnessUnachieved,
              "subdivision modifies the smooth locus"),
        fan(std::move(fan_in)),
        profile(std::move(profile_in)) {}
  Fan fan;
  RefinementProfile profile;
};

/// Builds a smooth subdivision of a full-dimensional cone by star
/// subdivisions: non-simplicial faces are split at their primitive ray
/// sums, then singular simplicial faces at box lattice points, smallest
/// faces first. The result is validated before being returned.
Fan resolve(const Cone& sigma, bool require_strong);

}  // namespace toric

#endif  // TORIC_FAN_HPP
