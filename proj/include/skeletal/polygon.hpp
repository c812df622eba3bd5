#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeletal/isometry.hpp"

namespace skel {

// Kind taxonomy for regular polygons: convex p_c, star p/q, skew p_s,
// planar zigzag (helix over a 2-gon), helix over a k-gon, linear apeirogon.
struct FaceKind {
  enum class Tag { Convex, Star, Skew, Zigzag, Helix, Linear };
  Tag tag = Tag::Convex;
  int p = 0; // gonality: vertex count (finite) or helix base gonality (infinite)
  int q = 1; // star density (finite planar only)

  bool infinite() const {
    return tag == Tag::Zigzag || tag == Tag::Helix || tag == Tag::Linear;
  }
  bool operator==(const FaceKind& o) const { return tag == o.tag && p == o.p && q == o.q; }
  std::string str() const;
  static FaceKind parse(const std::string& s);
};

// Standalone polygon geometry: a finite cycle, or a window of an infinite
// polygon together with the step isometry generating it when known.
struct PolygonGeometry {
  std::vector<Vec3> verts;
  bool infinite = false;
  std::optional<Isometry> step; // maps verts[i] to verts[i+1] for infinite polygons
};

// Exact cos(2*pi*k/p) for the gonalities representable in the supported
// quadratic fields (p in {1,2,3,4,5,6,8,10,12}).
std::optional<Scalar> exact_cos_2pi(int k, int p);

bool is_regular_polygon(const PolygonGeometry& poly);

// Classification per the taxonomy; requires a regular polygon.
FaceKind classify_polygon(const PolygonGeometry& poly);

// Least-squares-free exact fit: the isometry mapping pts[i] to pts[i+1] for
// all i, when one exists and is determined by the points.
std::optional<Isometry> fit_step_isometry(const std::vector<Vec3>& pts);

bool points_collinear(const std::vector<Vec3>& pts);
bool points_coplanar(const std::vector<Vec3>& pts);

} // namespace skel
