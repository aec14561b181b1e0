#include "slc/fan.hpp"

#include <algorithm>
#include <numeric>

#include "slc/error.hpp"

namespace slc {

long cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

namespace {

bool same_direction(const Vec2& u, const Vec2& v) {
  return cross(u, v) == 0 && u[0] * v[0] + u[1] * v[1] > 0;
}

// Strict counter-clockwise angular order starting at the positive x-axis.
bool angle_less(const Vec2& u, const Vec2& v) {
  auto half = [](const Vec2& x) { return (x[1] > 0 || (x[1] == 0 && x[0] > 0)) ? 0 : 1; };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

std::string vec_str(const Vec2& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

}  // namespace

StackyFan::StackyFan(std::vector<Vec2> rays, std::vector<Cone> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i] == Vec2{0, 0}) throw Error(ErrorCode::InvalidFan, "zero ray generator");
    for (std::size_t j = 0; j < i; ++j) {
      if (same_direction(rays_[i], rays_[j])) {
        throw Error(ErrorCode::InvalidFan, "rays " + vec_str(rays_[j]) + " and " +
                                               vec_str(rays_[i]) + " span the same ray");
      }
    }
  }

  // rank[i] = position of ray i in angular order
  std::vector<std::size_t> order(rays_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(rays_[a], rays_[b]); });
  std::vector<std::size_t> rank(rays_.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;

  std::vector<bool> gap_used(rays_.size(), false);
  for (auto& c : cones_) {
    if (c.first >= rays_.size() || c.second >= rays_.size()) {
      throw Error(ErrorCode::InvalidFan, "cone references a missing ray");
    }
    const long cr = cross(rays_[c.first], rays_[c.second]);
    if (cr == 0) throw Error(ErrorCode::InvalidFan, "cone generators are linearly dependent");
    if (cr < 0) std::swap(c.first, c.second);
    // A strictly convex cone with no interior ray spans exactly one gap.
    const std::size_t gap = rank[c.first];
    if ((gap + 1) % rays_.size() != rank[c.second]) {
      throw Error(ErrorCode::InvalidFan, "a ray lies inside cone " + vec_str(rays_[c.first]) +
                                             "," + vec_str(rays_[c.second]));
    }
    if (gap_used[gap]) throw Error(ErrorCode::InvalidFan, "cone interiors overlap");
    gap_used[gap] = true;
  }
}

std::optional<std::size_t> StackyFan::find_ray(const Vec2& v) const {
  auto it = std::find(rays_.begin(), rays_.end(), v);
  if (it == rays_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::optional<std::size_t> StackyFan::find_cone(const std::string& label) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].label == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> StackyFan::find_cone(const Vec2& u, const Vec2& w) const {
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    const Vec2& a = rays_[cones_[i].first];
    const Vec2& b = rays_[cones_[i].second];
    if ((a == u && b == w) || (a == w && b == u)) return i;
  }
  return std::nullopt;
}

bool StackyFan::is_complete() const {
  // Cones occupy distinct gaps (constructor), so completeness is a count.
  return rays_.size() >= 3 && cones_.size() == rays_.size();
}

StackyFan insert_ray(const StackyFan& f, const Vec2& v, std::string first_label,
                     std::string second_label) {
  if (v == Vec2{0, 0}) throw Error(ErrorCode::InvalidArgument, "cannot insert the zero vector");
  for (const auto& r : f.rays()) {
    if (same_direction(r, v)) {
      throw Error(ErrorCode::RayOnExistingRay, vec_str(v) + " lies on the existing ray " + vec_str(r));
    }
  }
  const auto& rays = f.rays();
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& c = f.cones()[i];
    if (cross(rays[c.first], v) > 0 && cross(v, rays[c.second]) > 0) {
      std::vector<Vec2> new_rays = rays;
      new_rays.push_back(v);
      const std::size_t vi = new_rays.size() - 1;
      std::vector<Cone> new_cones = f.cones();
      new_cones[i] = {c.first, vi, std::move(first_label)};
      new_cones.insert(new_cones.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       Cone{vi, c.second, std::move(second_label)});
      return StackyFan(std::move(new_rays), std::move(new_cones));
    }
  }
  throw Error(ErrorCode::RayOutsideSupport, vec_str(v) + " is not inside any cone");
}

StackyFan collapse_ray(const StackyFan& f, const Vec2& v, std::string label) {
  auto idx = f.find_ray(v);
  if (!idx) throw Error(ErrorCode::RayNotFound, "no ray " + vec_str(v));
  std::optional<std::size_t> ending, starting;  // (u, v) and (v, w)
  std::size_t adjacent = 0;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    if (f.cones()[i].second == *idx) {
      ending = i;
      ++adjacent;
    }
    if (f.cones()[i].first == *idx) {
      starting = i;
      ++adjacent;
    }
  }
  if (adjacent != 2 || !ending || !starting) {
    throw Error(ErrorCode::InvalidFan, vec_str(v) + " does not bound exactly two cones");
  }
  const std::size_t u = f.cones()[*ending].first;
  const std::size_t w = f.cones()[*starting].second;
  if (cross(f.rays()[u], f.rays()[w]) <= 0) {
    throw Error(ErrorCode::MergeNotConvex, "merging across " + vec_str(v) + " gives the non-convex span " +
                                               vec_str(f.rays()[u]) + "," + vec_str(f.rays()[w]));
  }

  auto reindex = [&](std::size_t r) { return r > *idx ? r - 1 : r; };
  std::vector<Vec2> rays = f.rays();
  rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(*idx));
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    if (i == *starting) continue;
    if (i == *ending) {
      cones.push_back({reindex(u), reindex(w), label});
      continue;
    }
    const Cone& c = f.cones()[i];
    cones.push_back({reindex(c.first), reindex(c.second), c.label});
  }
  return StackyFan(std::move(rays), std::move(cones));
}

ConeCoordinates cone_coordinates(const StackyFan& f, std::size_t cone, const Vec2& v) {
  const Cone& c = f.cones().at(cone);
  const Vec2& u = f.rays()[c.first];
  const Vec2& w = f.rays()[c.second];
  const mpq_class det = cross(u, w);
  ConeCoordinates out{mpq_class(cross(v, w)) / det, mpq_class(cross(u, v)) / det};
  out.along_first.canonicalize();
  out.along_second.canonicalize();
  return out;
}

StackyFan initial_git_fan() {
  return StackyFan({{2, 0}, {0, 1}, {-2, -1}},
                   {{1, 2, "O"}, {2, 0, "III"}, {0, 1, "II"}});
}

StackyFan ksba_fan() {
  StackyFan f = initial_git_fan();
  f = insert_ray(f, {4, -1}, "III", "IV'");
  f = insert_ray(f, {2, 1}, "IV''", "II");
  return collapse_ray(f, {2, 0}, "IV");
}

}  // namespace slc
