#include "skeletal/polygon.hpp"

#include <algorithm>

#include "skeletal/error.hpp"

namespace skel {

std::string FaceKind::str() const {
  switch (tag) {
    case Tag::Convex: return std::to_string(p) + "_c";
    case Tag::Star: return std::to_string(p) + "/" + std::to_string(q);
    case Tag::Skew: return std::to_string(p) + "_s";
    case Tag::Zigzag: return "inf_2";
    case Tag::Helix: return "inf_" + std::to_string(p);
    case Tag::Linear: return "inf_lin";
  }
  return "?";
}

FaceKind FaceKind::parse(const std::string& s) {
  FaceKind k;
  if (s == "inf_lin") { k.tag = Tag::Linear; return k; }
  if (s == "inf_2") { k.tag = Tag::Zigzag; k.p = 2; return k; }
  if (s.rfind("inf_", 0) == 0) {
    k.tag = Tag::Helix;
    k.p = std::stoi(s.substr(4));
    return k;
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    k.tag = Tag::Star;
    k.p = std::stoi(s.substr(0, slash));
    k.q = std::stoi(s.substr(slash + 1));
    return k;
  }
  auto us = s.find('_');
  if (us == std::string::npos) fail(ErrorCode::InvalidArgument, "bad face kind: " + s);
  k.p = std::stoi(s.substr(0, us));
  k.tag = s.substr(us + 1) == "s" ? Tag::Skew : Tag::Convex;
  return k;
}

std::optional<Scalar> exact_cos_2pi(int k, int p) {
  if (p <= 0) return std::nullopt;
  k = ((k % p) + p) % p;
  // base angle values
  Scalar base;
  switch (p) {
    case 1: return Scalar(1);
    case 2: return k == 0 ? Scalar(1) : Scalar(-1);
    case 3: base = Scalar(Rat(-1, 2)); break;
    case 4: base = Scalar(0); break;
    case 5: base = Scalar(Rat(-1, 4), Rat(1, 4), 5); break;
    case 6: base = Scalar(Rat(1, 2)); break;
    case 8: base = Scalar(Rat(0), Rat(1, 2), 2); break;
    case 10: base = Scalar(Rat(1, 4), Rat(1, 4), 5); break;
    case 12: base = Scalar(Rat(0), Rat(1, 2), 3); break;
    default: return std::nullopt;
  }
  // Chebyshev recursion: cos(k t) = 2 cos t cos((k-1)t) - cos((k-2)t)
  Scalar cm1(1), c = base;
  if (k == 0) return Scalar(1);
  for (int i = 2; i <= k; ++i) {
    Scalar next = Scalar(2) * base * c - cm1;
    cm1 = c;
    c = next;
  }
  return c;
}

bool points_collinear(const std::vector<Vec3>& pts) {
  if (pts.size() <= 2) return true;
  Vec3 d = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (!d.cross(pts[i] - pts[0]).is_zero()) return false;
  return true;
}

bool points_coplanar(const std::vector<Vec3>& pts) {
  if (pts.size() <= 3) return true;
  // find two independent directions
  Vec3 d1 = pts[1] - pts[0];
  std::size_t j = 2;
  Vec3 n = Vec3::zero();
  for (; j < pts.size(); ++j) {
    n = d1.cross(pts[j] - pts[0]);
    if (!n.is_zero()) break;
  }
  if (n.is_zero()) return true; // collinear
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (!(pts[i] - pts[0]).dot(n).is_zero()) return false;
  return true;
}

std::optional<Isometry> fit_step_isometry(const std::vector<Vec3>& pts) {
  const std::size_t n = pts.size();
  if (n < 5) return std::nullopt;
  // Differences d_i = p_{i+1} - p_i satisfy d_{i+1} = d_i * L.
  // Three independent consecutive differences determine L.
  std::vector<Vec3> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = pts[i + 1] - pts[i];
  // Find indices i0<i1<i2 with d_{i0},d_{i1},d_{i2} independent and i2+1 < n-1.
  for (std::size_t i0 = 0; i0 + 3 < d.size(); ++i0) {
    for (std::size_t i1 = i0 + 1; i1 + 2 < d.size(); ++i1) {
      for (std::size_t i2 = i1 + 1; i2 + 1 < d.size(); ++i2) {
        Mat3 A = Mat3::from_rows(d[i0], d[i1], d[i2]);
        if (A.det().is_zero()) continue;
        Mat3 B = Mat3::from_rows(d[i0 + 1], d[i1 + 1], d[i2 + 1]);
        auto Ainv = A.inverse();
        if (!Ainv) continue;
        Mat3 L = *Ainv * B;
        if (!L.is_orthogonal()) return std::nullopt;
        Vec3 t = pts[1] - pts[0] * L;
        Isometry f(L, t);
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (!(f.apply(pts[i]) == pts[i + 1])) return std::nullopt;
        return f;
      }
    }
  }
  // Coplanar data: fit a 2D-determined map; the proper (screw/rotation)
  // completion and the improper (glide) completion both restrict correctly,
  // so try both sign choices on the plane normal.
  if (!points_coplanar(pts)) return std::nullopt;
  Vec3 d1 = pts[1] - pts[0];
  for (std::size_t j = 2; j + 1 < n; ++j) {
    Vec3 d2 = pts[j] - pts[0];
    Vec3 normal = d1.cross(d2);
    if (normal.is_zero()) continue;
    for (int sign : {1, -1}) {
      // Solve L from: d_i -> d_{i+1} for two independent differences, and
      // normal -> sign*normal (the step maps the plane to itself).
      std::vector<Vec3> diffs(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) diffs[i] = pts[i + 1] - pts[i];
      std::optional<Mat3> Lfound;
      for (std::size_t i0 = 0; i0 + 2 < diffs.size() && !Lfound; ++i0)
        for (std::size_t i1 = i0 + 1; i1 + 1 < diffs.size() && !Lfound; ++i1) {
          Mat3 A = Mat3::from_rows(diffs[i0], diffs[i1], normal);
          if (A.det().is_zero()) continue;
          Mat3 B = Mat3::from_rows(diffs[i0 + 1], diffs[i1 + 1], normal * Scalar(sign));
          auto Ainv = A.inverse();
          if (!Ainv) continue;
          Lfound = *Ainv * B;
        }
      if (!Lfound || !Lfound->is_orthogonal()) continue;
      Vec3 t = pts[1] - pts[0] * *Lfound;
      Isometry f(*Lfound, t);
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < n; ++i) ok = f.apply(pts[i]) == pts[i + 1];
      if (ok) return f;
    }
  }
  return std::nullopt;
}

namespace {

bool distance_profile_invariant(const std::vector<Vec3>& v,
                                const std::vector<int>& image_of) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar a = (v[i] - v[j]).norm2();
      Scalar b = (v[image_of[i]] - v[image_of[j]]).norm2();
      if (!(a == b)) return false;
    }
  return true;
}

} // namespace

bool is_regular_polygon(const PolygonGeometry& poly) {
  const auto& v = poly.verts;
  const int n = static_cast<int>(v.size());
  if (!poly.infinite) {
    if (n < 3) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (v[i] == v[j]) return false;
    // rotation-like map i -> i+1 and reflection-like map i -> 1-i must both
    // preserve all pairwise distances.
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      refl[i] = ((1 - i) % n + n) % n;
    }
    return distance_profile_invariant(v, rot) && distance_profile_invariant(v, refl);
  }
  // Infinite: the step provides the shift symmetry; check it and the
  // reflection-like map on the materialized window.
  if (n < 4) return false;
  if (poly.step) {
    for (int i = 0; i + 1 < n; ++i)
      if (!(poly.step->apply(v[i]) == v[i + 1])) return false;
  } else {
    for (int i = 0; i + 2 < n; ++i) {
      Scalar a = (v[i] - v[i + 1]).norm2();
      Scalar b = (v[i + 1] - v[i + 2]).norm2();
      if (!(a == b)) return false;
    }
  }
  // reflection about index center between 0 and 1: i -> 1-i where defined
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int ii = 1 - i, jj = 1 - j;
      if (ii < 0 || jj < 0 || ii >= n || jj >= n) continue;
      Scalar a = (v[i] - v[j]).norm2();
      Scalar b = (v[ii] - v[jj]).norm2();
      if (!(a == b)) return false;
    }
  return true;
}

FaceKind classify_polygon(const PolygonGeometry& poly) {
  if (!is_regular_polygon(poly)) fail(ErrorCode::NotRegular, "polygon is not regular");
  FaceKind out;
  const auto& v = poly.verts;
  if (!poly.infinite) {
    const int p = static_cast<int>(v.size());
    out.p = p;
    if (!points_coplanar(v)) {
      out.tag = FaceKind::Tag::Skew;
      return out;
    }
    // winding of a planar regular polygon from the exact step angle
    Vec3 c = Vec3::zero();
    for (const Vec3& x : v) c = c + x;
    c = c / Scalar(p);
    Scalar rho2 = (v[0] - c).norm2();
    if (rho2.is_zero()) fail(ErrorCode::NotRegular, "degenerate polygon");
    Scalar cosang = (v[0] - c).dot(v[1] - c) / rho2;
    for (int q = 1; q <= p / 2; ++q) {
      auto expect = exact_cos_2pi(q, p);
      if (expect && *expect == cosang) {
        out.q = q;
        out.tag = q == 1 ? FaceKind::Tag::Convex : FaceKind::Tag::Star;
        return out;
      }
    }
    fail(ErrorCode::NotRegular, "planar polygon with non-crystallographic step angle");
  }
  // infinite
  if (points_collinear(v)) {
    out.tag = FaceKind::Tag::Linear;
    return out;
  }
  if (points_coplanar(v)) {
    out.tag = FaceKind::Tag::Zigzag;
    out.p = 2;
    return out;
  }
  Isometry step;
  if (poly.step) {
    step = *poly.step;
  } else {
    auto fit = fit_step_isometry(v);
    if (!fit) fail(ErrorCode::NotRegular, "cannot determine the step isometry of an infinite polygon");
    step = *fit;
  }
  auto k = matrix_order(step.linear);
  if (!k || *k < 3)
    fail(ErrorCode::NotRegular, "non-planar infinite polygon without a finite helical projection");
  out.tag = FaceKind::Tag::Helix;
  out.p = *k;
  return out;
}

} // namespace skel
