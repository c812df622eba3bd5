#pragma once

#include <optional>
#include <string>

#include "skeletal/linalg.hpp"

namespace skel {

// Euclidean isometry with the point-on-the-left action x -> x*linear + translation.
// compose(f,g) applies f first, then g.
struct Isometry {
  Mat3 linear;
  Vec3 translation;

  Isometry() : linear(Mat3::identity()), translation(Vec3::zero()) {}
  Isometry(Mat3 L, Vec3 t) : linear(std::move(L)), translation(std::move(t)) {}

  static Isometry identity() { return Isometry(); }
  static Isometry translate(const Vec3& t) { return Isometry(Mat3::identity(), t); }
  static Isometry linear_map(const Mat3& L) { return Isometry(L, Vec3::zero()); }

  Vec3 apply(const Vec3& p) const { return p * linear + translation; }

  // this followed by g.
  Isometry then(const Isometry& g) const {
    return Isometry(linear * g.linear, translation * g.linear + g.translation);
  }

  Isometry inverse() const {
    Mat3 inv = linear.transpose(); // orthogonal
    return Isometry(inv, -(translation * inv));
  }

  bool is_identity() const { return linear.is_identity() && translation.is_zero(); }
  bool is_translation() const { return linear.is_identity(); }
  bool valid_orthogonal() const { return linear.is_orthogonal(); }

  bool operator==(const Isometry& o) const {
    return linear == o.linear && translation == o.translation;
  }
  std::weak_ordering operator<=>(const Isometry& o) const {
    if (auto c = linear <=> o.linear; c != 0) return c;
    return translation <=> o.translation;
  }

  std::size_t hash() const { return hash_mix(linear.hash(), translation.hash()); }
  std::string str() const { return linear.str() + "+" + translation.str(); }
};

inline Isometry compose(const Isometry& f, const Isometry& g) { return f.then(g); }

struct IsometryHash {
  std::size_t operator()(const Isometry& f) const { return f.hash(); }
};

enum class IsoKind {
  Identity,
  Translation,
  Rotation,          // period >= 3 or infinite; period-2 rotations are line reflections
  PointReflection,   // mirror dim 0
  LineReflection,    // half-turn, mirror dim 1
  PlaneReflection,   // mirror dim 2
  RotatoryReflection,
  Screw,
  Glide,
};

const char* iso_kind_name(IsoKind k);

struct IsoClass {
  IsoKind kind = IsoKind::Identity;
  // Finite period of the isometry where applicable (rotation, rotatory
  // reflection); empty means infinite.
  std::optional<int> period;
  std::optional<int> mirror_dim;       // 0,1,2 for the three reflection kinds
  std::optional<Vec3> fixed_point;     // a point of the fixed set / axis
  std::optional<Vec3> axis_dir;        // rotation/screw/line-reflection axis
  std::optional<Vec3> plane_normal;    // plane reflection / glide
  std::optional<Vec3> translation_part; // screw/glide translation along axis/plane

  bool is_reflection() const {
    return kind == IsoKind::PointReflection || kind == IsoKind::LineReflection ||
           kind == IsoKind::PlaneReflection;
  }
  std::string str() const;
};

IsoClass classify_isometry(const Isometry& f);

inline std::optional<int> mirror_dimension(const Isometry& f) {
  return classify_isometry(f).mirror_dim;
}

// Least k >= 1 with f^k = identity; nullopt when infinite.
std::optional<int> isometry_order(const Isometry& f, int bound = 60);

Isometry isometry_power(const Isometry& f, int k);

} // namespace skel
