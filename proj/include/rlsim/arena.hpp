// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rlsim/config.hpp"
#include "rlsim/math.hpp"

namespace rlsim {

enum class SurfaceClass { ground, wall, ceiling, goal_interior };

struct SurfaceContact {
  Vec3 point;           // on the arena surface, uu
  Vec3 normal;          // unit, pointing into the playable volume
  double penetration;   // uu, >= 0
  SurfaceClass surface_class;
};

struct Sphere {
  Vec3 center;
  double radius;
};

struct OrientedBox {
  Vec3 center;
  Rotation rotation;
  Vec3 half_extents;
};

using ContactShape = std::variant<Sphere, OrientedBox>;

/// Shape left the playable volume entirely.
class EscapedWorld : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-aligned rectangle in a plane of constant coordinate `axis`. The normal points
/// into the playable volume. Bounds are on the two remaining axes, in increasing order.
struct ArenaFace {
  int axis;        // 0 = x, 1 = y, 2 = z
  double offset;   // plane coordinate
  double sign;     // +1: normal along +axis, -1: along -axis
  double lo[2];
  double hi[2];
  bool goal_box;

  Vec3 normal() const;
  SurfaceClass surface_class() const;
  /// Whether the in-plane projection of p lies inside the rectangle.
  bool contains_projection(const Vec3& p) const;
  /// Distance of p in front of the face plane (negative when behind it).
  double signed_distance(const Vec3& p) const;
};

/// Line segment feature (goal post, crossbar).
struct ArenaEdge {
  Vec3 a;
  Vec3 b;
};

/// Precomputed arena surfaces. The back walls have an open goal mouth; each goal box is
/// closed by its own floor, side walls, ceiling and back wall.
class ArenaGeometry {
 public:
  explicit ArenaGeometry(const ArenaSpec& spec);

  const ArenaSpec& spec() const { return spec_; }
  const std::vector<ArenaFace>& faces() const { return faces_; }
  const std::vector<ArenaEdge>& edges() const { return edges_; }

  /// Whether p lies inside the field box or one of the goal boxes (closed sets).
  bool contains(const Vec3& p, double tolerance = 0.0) const;

  struct RayHit {
    double distance;
    Vec3 point;
    Vec3 normal;
    SurfaceClass surface_class;
  };
  /// Nearest surface hit along a unit direction within max_distance.
  std::optional<RayHit> raycast(const Vec3& origin, const Vec3& direction,
                                double max_distance) const;

 private:
  ArenaSpec spec_;
  std::vector<ArenaFace> faces_;
  std::vector<ArenaEdge> edges_;
};

/// One contact per penetrated surface feature. Throws EscapedWorld if the shape center
/// is outside the arena volume by more than the shape's extent.
std::vector<SurfaceContact> arena_contacts(const ContactShape& shape, const ArenaGeometry& arena);
std::vector<SurfaceContact> arena_contacts(const ContactShape& shape, const ArenaSpec& arena);

/// World-space corners of an oriented box.
std::array<Vec3, 8> box_corners(const OrientedBox& box);

}  // namespace rlsim
