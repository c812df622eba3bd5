#include "skeletal/isometry.hpp"

#include "skeletal/error.hpp"

namespace skel {

const char* iso_kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::Identity: return "identity";
    case IsoKind::Translation: return "translation";
    case IsoKind::Rotation: return "rotation";
    case IsoKind::PointReflection: return "point-reflection";
    case IsoKind::LineReflection: return "line-reflection";
    case IsoKind::PlaneReflection: return "plane-reflection";
    case IsoKind::RotatoryReflection: return "rotatory-reflection";
    case IsoKind::Screw: return "screw";
    case IsoKind::Glide: return "glide";
  }
  return "?";
}

std::string IsoClass::str() const {
  std::string s = iso_kind_name(kind);
  if (period) s += "(" + std::to_string(*period) + ")";
  else if (kind == IsoKind::Rotation || kind == IsoKind::RotatoryReflection) s += "(inf)";
  return s;
}

namespace {

// Component of t along span(u) and the remainder.
std::pair<Vec3, Vec3> split_along(const Vec3& t, const Vec3& u) {
  Scalar c = t.dot(u) / u.norm2();
  Vec3 par = u * c;
  return {par, t - par};
}

// Any particular solution p of p*(M - I) = -t; exists iff consistent.
std::optional<Vec3> fixed_point_of(const Mat3& M, const Vec3& t) {
  Mat3 A = M - Mat3::identity();
  return solve_left(A, -t);
}

} // namespace

IsoClass classify_isometry(const Isometry& f) {
  if (!f.valid_orthogonal()) fail(ErrorCode::InvalidArgument, "linear part is not orthogonal");
  const Mat3& M = f.linear;
  const Vec3& t = f.translation;
  IsoClass out;

  if (M.is_identity()) {
    if (t.is_zero()) {
      out.kind = IsoKind::Identity;
      out.period = 1;
      out.fixed_point = Vec3::zero();
    } else {
      out.kind = IsoKind::Translation;
      out.translation_part = t;
    }
    return out;
  }

  Scalar det = M.det();
  if (det == Scalar(1)) {
    // Rotation part: axis = fixed directions of M.
    auto axis = left_null_space(M - Mat3::identity());
    if (axis.size() != 1) fail(ErrorCode::InvalidArgument, "proper non-identity isometry without a unique axis");
    Vec3 u = axis[0];
    auto [t_par, t_perp] = split_along(t, u);
    out.axis_dir = u;
    out.period = matrix_order(M);
    if (t_par.is_zero()) {
      // Pure rotation about a (possibly offset) axis.
      // Fixed points exist: solve restricted to the perpendicular component.
      auto p = fixed_point_of(M, t_perp);
      out.fixed_point = p; // consistent by construction
      if (out.period && *out.period == 2) {
        out.kind = IsoKind::LineReflection;
        out.mirror_dim = 1;
      } else {
        out.kind = IsoKind::Rotation;
      }
    } else {
      out.kind = IsoKind::Screw;
      out.translation_part = t_par;
      auto p = fixed_point_of(M, t_perp);
      out.fixed_point = p; // a point on the screw axis
    }
    return out;
  }

  // det == -1
  if (M == -Mat3::identity()) {
    out.kind = IsoKind::PointReflection;
    out.mirror_dim = 0;
    out.period = 2;
    out.fixed_point = t / Scalar(2);
    return out;
  }

  Mat3 M2 = M * M;
  if (M2.is_identity()) {
    // Plane-type linear part: eigenvalues (1,1,-1).
    auto normals = left_null_space(M + Mat3::identity());
    if (normals.size() != 1) fail(ErrorCode::InvalidArgument, "unexpected eigenstructure");
    Vec3 n = normals[0];
    auto [t_n, t_pl] = split_along(t, n);
    out.plane_normal = n;
    if (t_pl.is_zero()) {
      out.kind = IsoKind::PlaneReflection;
      out.mirror_dim = 2;
      out.period = 2;
      out.fixed_point = t / Scalar(2);
    } else {
      out.kind = IsoKind::Glide;
      out.translation_part = t_pl;
    }
    return out;
  }

  // Rotatory reflection: no eigenvalue 1, unique fixed point.
  out.kind = IsoKind::RotatoryReflection;
  out.period = matrix_order(M);
  auto axes = left_null_space(M + Mat3::identity());
  if (axes.size() == 1) out.axis_dir = axes[0];
  out.fixed_point = fixed_point_of(M, t);
  return out;
}

std::optional<int> isometry_order(const Isometry& f, int bound) {
  Isometry p = f;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    if (p.is_translation()) return std::nullopt; // nonzero translation: infinite
    p = p.then(f);
  }
  return std::nullopt;
}

Isometry isometry_power(const Isometry& f, int k) {
  if (k < 0) return isometry_power(f.inverse(), -k);
  Isometry r = Isometry::identity();
  for (int i = 0; i < k; ++i) r = r.then(f);
  return r;
}

} // namespace skel
