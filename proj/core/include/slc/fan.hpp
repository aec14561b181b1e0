#pragma once

// Rank-2 stacky fans: integer ray generators (kept non-primitive, e.g.
// (2,0)) and two-dimensional cones given by ray-index pairs. Inserting a ray
// models a weighted blow-up, removing one models collapsing a divisor.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace slc {

using Vec2 = std::array<long, 2>;

/// A top cone spanned by rays[first] and rays[second], counter-clockwise
/// (cross(first, second) > 0), with an optional display label.
struct Cone {
  std::size_t first;
  std::size_t second;
  std::string label;
};

class StackyFan {
 public:
  /// Throws InvalidFan unless: every ray is nonzero, no two rays point the
  /// same way, every cone is strictly convex (cones given clockwise are
  /// reoriented), no ray lies inside a cone, and cone interiors are disjoint.
  StackyFan(std::vector<Vec2> rays, std::vector<Cone> cones);

  const std::vector<Vec2>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }

  std::optional<std::size_t> find_ray(const Vec2& v) const;
  /// Cone with the given label, if any.
  std::optional<std::size_t> find_cone(const std::string& label) const;
  /// Cone spanned by the two given ray vectors, in either order.
  std::optional<std::size_t> find_cone(const Vec2& u, const Vec2& w) const;

  /// The cones cover R^2: every angular gap between consecutive rays is a cone.
  bool is_complete() const;

 private:
  std::vector<Vec2> rays_;
  std::vector<Cone> cones_;
};

long cross(const Vec2& u, const Vec2& v);

/// Splits the unique cone whose interior contains v into (u, v) and (v, w),
/// labelled first_label and second_label. Throws InvalidArgument for v = 0,
/// RayOnExistingRay if v points along an existing ray and RayOutsideSupport
/// if no cone contains v.
StackyFan insert_ray(const StackyFan& f, const Vec2& v, std::string first_label = {},
                     std::string second_label = {});

/// Removes ray v and merges its two adjacent cones into one labelled label.
/// Throws RayNotFound, InvalidFan if v does not bound exactly two cones, and
/// MergeNotConvex if the merged cone would not be strictly convex.
StackyFan collapse_ray(const StackyFan& f, const Vec2& v, std::string label = {});

/// v = alpha * rays[first] + beta * rays[second] for the given cone.
struct ConeCoordinates {
  mpq_class along_first;
  mpq_class along_second;
};
ConeCoordinates cone_coordinates(const StackyFan& f, std::size_t cone, const Vec2& v);

/// GIT model: rays (2,0), (0,1), (-2,-1); cones O = ((0,1),(-2,-1)),
/// III = ((-2,-1),(2,0)), II = ((2,0),(0,1)).
StackyFan initial_git_fan();

/// Weighted blow-ups at (4,-1) = 3(2,0) + (-2,-1) and (2,1) = (2,0) + (0,1),
/// then the (2,0) divisor collapsed. Cones O, III, IV, II.
StackyFan ksba_fan();

}  // namespace slc
