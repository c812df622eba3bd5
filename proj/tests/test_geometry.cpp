#include <doctest.h>

#include "skeletal/isometry.hpp"
#include "skeletal/json_io.hpp"

using namespace skel;

namespace {

Mat3 rot90_z() {
  // row convention: (x,y,z) -> (-y, x, z)? fix by checking e1 -> e2 below
  return Mat3::from_rows(Vec3(0, 1, 0), Vec3(-1, 0, 0), Vec3(0, 0, 1));
}

} // namespace

TEST_CASE("apply and compose follow the left action convention") {
  Isometry id;
  CHECK(id.apply(Vec3(1, 2, 3)) == Vec3(1, 2, 3));

  // translation by (1,0,0) then 90 degree rotation about z through the origin
  Isometry t = Isometry::translate(Vec3(1, 0, 0));
  Isometry r = Isometry::linear_map(rot90_z());
  Vec3 image = compose(t, r).apply(Vec3(0, 0, 0));
  // (0,0,0) -> (1,0,0) -> rotated
  Vec3 direct = r.apply(t.apply(Vec3(0, 0, 0)));
  CHECK(image == direct);
  CHECK(image == Vec3(0, 1, 0));
}

TEST_CASE("plane reflection is an involution") {
  Isometry zflip = Isometry::linear_map(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1)));
  CHECK(compose(zflip, zflip).is_identity());
}

TEST_CASE("inverse undoes composition") {
  Isometry t = Isometry::translate(Vec3(Scalar(1), Scalar::sqrt_of(2), Scalar(0)));
  Isometry r = Isometry::linear_map(rot90_z());
  Isometry f = compose(t, r);
  CHECK(compose(f, f.inverse()).is_identity());
  CHECK(compose(f.inverse(), f).is_identity());
}

TEST_CASE("classification of basic kinds") {
  auto k_id = classify_isometry(Isometry::identity());
  CHECK(k_id.kind == IsoKind::Identity);

  auto k_tr = classify_isometry(Isometry::translate(Vec3(1, 0, 0)));
  CHECK(k_tr.kind == IsoKind::Translation);

  auto k_pt = classify_isometry(Isometry::linear_map(-Mat3::identity()));
  CHECK(k_pt.kind == IsoKind::PointReflection);
  CHECK(*k_pt.mirror_dim == 0);

  // half-turn about z axis
  auto k_ht = classify_isometry(Isometry::linear_map(Mat3::diag(Scalar(-1), Scalar(-1), Scalar(1))));
  CHECK(k_ht.kind == IsoKind::LineReflection);
  CHECK(*k_ht.mirror_dim == 1);

  auto k_pl = classify_isometry(Isometry::linear_map(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1))));
  CHECK(k_pl.kind == IsoKind::PlaneReflection);
  CHECK(*k_pl.mirror_dim == 2);

  auto k_rot = classify_isometry(Isometry::linear_map(rot90_z()));
  CHECK(k_rot.kind == IsoKind::Rotation);
  CHECK(*k_rot.period == 4);

  // 90 degree rotation about z composed with z -> -z: rotatory reflection, period 4
  Mat3 s4 = rot90_z() * Mat3::diag(Scalar(1), Scalar(1), Scalar(-1));
  auto k_s4 = classify_isometry(Isometry::linear_map(s4));
  CHECK(k_s4.kind == IsoKind::RotatoryReflection);
  CHECK(*k_s4.period == 4);
  // verify f^4 = I, f^2 != I by exact powers
  Isometry f = Isometry::linear_map(s4);
  CHECK(isometry_power(f, 4).is_identity());
  CHECK(!isometry_power(f, 2).is_identity());

  // screw: quarter turn + rise
  Isometry screw(rot90_z(), Vec3(0, 0, 1));
  auto k_screw = classify_isometry(screw);
  CHECK(k_screw.kind == IsoKind::Screw);
  CHECK(!k_screw.mirror_dim.has_value());

  // glide: reflection z->-z plus in-plane translation
  Isometry glide(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1)), Vec3(1, 0, 0));
  CHECK(classify_isometry(glide).kind == IsoKind::Glide);
}

TEST_CASE("classification data: offset mirrors") {
  // reflection in the plane x = 1/2: x -> 1-x
  Isometry r(Mat3::diag(Scalar(-1), Scalar(1), Scalar(1)), Vec3(1, 0, 0));
  auto k = classify_isometry(r);
  CHECK(k.kind == IsoKind::PlaneReflection);
  REQUIRE(k.fixed_point.has_value());
  CHECK(r.apply(*k.fixed_point) == *k.fixed_point);

  // half-turn about the line x=1/2, z=0 (within z=0 plane)
  Isometry h(Mat3::diag(Scalar(-1), Scalar(1), Scalar(-1)), Vec3(1, 0, 0));
  auto kh = classify_isometry(h);
  CHECK(kh.kind == IsoKind::LineReflection);
  REQUIRE(kh.fixed_point.has_value());
  CHECK(h.apply(*kh.fixed_point) == *kh.fixed_point);
}

TEST_CASE("conjugation invariance of classification") {
  // kind and period survive conjugation; mirror data transforms along
  Isometry f(rot90_z(), Vec3(0, 0, 1)); // screw
  Isometry g(Mat3::from_rows(Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0)), Vec3(2, -1, 3));
  REQUIRE(g.valid_orthogonal());
  Isometry conj = compose(compose(g.inverse(), f), g);
  auto kf = classify_isometry(f);
  auto kc = classify_isometry(conj);
  CHECK(kf.kind == kc.kind);
  CHECK(kf.period == kc.period);
}

TEST_CASE("isometry order detects infinite orders exactly") {
  CHECK(*isometry_order(Isometry::linear_map(rot90_z())) == 4);
  CHECK(!isometry_order(Isometry::translate(Vec3(1, 0, 0))).has_value());
  // glide: linear part has order 2 but the square is a translation
  Isometry glide(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1)), Vec3(1, 0, 0));
  CHECK(!isometry_order(glide).has_value());
}

TEST_CASE("isometry json round trip") {
  Isometry f(rot90_z(), Vec3(Scalar(Rat(1, 2)), Scalar::sqrt_of(5), Scalar(-3)));
  Json j = to_json(f);
  CHECK(isometry_from_json(j) == f);
}

TEST_CASE("left null space and solve") {
  Mat3 A = Mat3::diag(Scalar(0), Scalar(1), Scalar(2));
  auto ns = left_null_space(A);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].cross(Vec3(1, 0, 0)).is_zero());
  auto sol = solve_left(A, Vec3(0, 3, 4));
  REQUIRE(sol.has_value());
  CHECK(*sol * A == Vec3(0, 3, 4));
}
