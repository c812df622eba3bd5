#include <doctest.h>

#include "skeletal/group.hpp"
#include "skeletal/vertex_set.hpp"

using namespace skel;

namespace {

Isometry refl_x_half() { // x -> 1-x
  return Isometry(Mat3::diag(Scalar(-1), Scalar(1), Scalar(1)), Vec3(1, 0, 0));
}
Isometry swap_xy() {
  return Isometry::linear_map(Mat3::from_rows(Vec3(0, 1, 0), Vec3(1, 0, 0), Vec3(0, 0, 1)));
}
Isometry swap_yz() {
  return Isometry::linear_map(Mat3::from_rows(Vec3(1, 0, 0), Vec3(0, 0, 1), Vec3(0, 1, 0)));
}
Isometry flip_z() { return Isometry::linear_map(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1))); }

IsometryGroup cubical_tessellation_group() {
  return IsometryGroup{{refl_x_half(), swap_xy(), swap_yz(), flip_z()}, "[4,3,4]"};
}

} // namespace

TEST_CASE("orbit of the origin under unit translations, radius 2") {
  IsometryGroup g{{Isometry::translate(Vec3(1, 0, 0)), Isometry::translate(Vec3(0, 1, 0)),
                   Isometry::translate(Vec3(0, 0, 1))},
                  "Z3"};
  auto pts = orbit(Vec3::zero(), g, Scalar(2));
  // brute-force oracle: integer vectors with norm^2 <= 4
  int count = 0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z)
        if (x * x + y * y + z * z <= 4) ++count;
  CHECK(count == 33);
  CHECK(static_cast<int>(pts.size()) == count);
}

TEST_CASE("orbit under the trivial group") {
  IsometryGroup g{{Isometry::identity()}, "1"};
  auto pts = orbit(Vec3::zero(), g, Scalar(2));
  CHECK(pts.size() == 1);
  CHECK(pts[0] == Vec3::zero());
}

TEST_CASE("orbit under fcc translations, radius sqrt 2") {
  Lattice fcc = Lattice::fcc(Scalar(1));
  IsometryGroup g{{Isometry::translate(fcc.basis[0]), Isometry::translate(fcc.basis[1]),
                   Isometry::translate(fcc.basis[2])},
                  "fcc"};
  auto pts = orbit(Vec3::zero(), g, Scalar::sqrt_of(2));
  // brute-force oracle: even-coordinate-sum integer vectors with norm^2 <= 2
  int count = 0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z)
        if ((x + y + z) % 2 == 0 && x * x + y * y + z * z <= 2) ++count;
  CHECK(count == 13);
  CHECK(static_cast<int>(pts.size()) == count);
}

TEST_CASE("translation subgroup of the cubical tessellation group is Z^3") {
  Lattice t = translation_subgroup(cubical_tessellation_group(), {}, 3);
  CHECK(t.rank() == 3);
  CHECK(t.same_lattice(Lattice::cubic(Scalar(1))));
}

TEST_CASE("translation subgroup of a finite point group has rank 0") {
  IsometryGroup g{{swap_xy(), swap_yz(), flip_z()}, "[3,4]"};
  Lattice t = translation_subgroup(g);
  CHECK(t.rank() == 0);
  CHECK_THROWS_AS(translation_subgroup(g, {}, 3), Error);
}

TEST_CASE("special group of the cubical tessellation has order 48") {
  PointGroup pg = special_group(cubical_tessellation_group());
  CHECK(pg.order() == 48);
  CHECK(identify_point_group(pg) == "[3,4]");
  // every element has period in {2,3,4,6} (here {2,3,4})
  for (const Mat3& M : pg.elements) {
    auto k = matrix_order(M);
    REQUIRE(k.has_value());
    CHECK((*k == 1 || *k == 2 || *k == 3 || *k == 4 || *k == 6));
  }
}

TEST_CASE("special group of a pure translation lattice is trivial") {
  IsometryGroup g{{Isometry::translate(Vec3(1, 0, 0))}, "t"};
  CHECK(special_group(g).order() == 1);
  CHECK(identify_point_group(special_group(g)) == "C1");
}

TEST_CASE("point group identification by census") {
  CHECK(identify_point_group(octahedral_full()) == "[3,4]");
  CHECK(identify_point_group(octahedral_rotation()) == "[3,4]+");
  CHECK(identify_point_group(tetrahedral_full()) == "[3,3]");
  CHECK(identify_point_group(tetrahedral_rotation()) == "[3,3]+");
  CHECK(identify_point_group(pyritohedral()) == "[3,3]+x<-I>");
  CHECK(identify_point_group(icosahedral_full()) == "[3,5]");
  CHECK(identify_point_group(icosahedral_rotation()) == "[3,5]+");
  CHECK(icosahedral_full().order() == 120);

  // order 48 with 9 plane reflections -> [3,4]
  Census c = census_of(octahedral_full());
  CHECK(c[{"plane-reflection", 2}] == 9);
  CHECK(octahedral_rotation().proper_only());
  // pyritohedral contains -I
  bool has_inv = false;
  for (const Mat3& M : pyritohedral().elements)
    if (M == -Mat3::identity()) has_inv = true;
  CHECK(has_inv);
}

TEST_CASE("vertex set membership") {
  Scalar a(1);
  auto Va = VertexSetPredicate::v_set(a);
  CHECK(!Va.member(Vec3(0, 0, 1)));
  CHECK(Va.member(Vec3::zero()));
  CHECK(Va.member(Vec3(1, 0, 0)));

  auto Wa = VertexSetPredicate::w_set(a);
  CHECK(Wa.member(Vec3(1, -1, 1)));
  CHECK(Wa.member(Vec3::zero()));
  CHECK(!Wa.member(Vec3(1, 0, 0)));
  CHECK(Wa.member(Vec3(2, 2, 0)));
  CHECK(!Wa.member(Vec3(1, 1, 0)));

  auto fcc = VertexSetPredicate::fcc(a);
  CHECK(fcc.member(Vec3(1, 1, 0)));
  CHECK(!fcc.member(Vec3(1, 0, 0)));

  // brute-force generator-combination oracle within the radius-3 ball
  Lattice fcc_lat = Lattice::fcc(a);
  for (const Vec3& p : fcc_lat.points_in_ball(Vec3::zero(), Scalar(3))) {
    CHECK(fcc.member(p));
  }
  int lattice_count = static_cast<int>(fcc_lat.points_in_ball(Vec3::zero(), Scalar(3)).size());
  int pred_count = static_cast<int>(fcc.points_in_ball(Scalar(3)).size());
  CHECK(lattice_count == pred_count);
}

TEST_CASE("bcc and diamond shells") {
  auto bcc = VertexSetPredicate::bcc(Scalar(1));
  CHECK(bcc.member(Vec3(1, 1, 1)));
  CHECK(bcc.member(Vec3(2, 0, 0)));
  CHECK(!bcc.member(Vec3(1, 1, 0)));
  // W_a nearest shell is the 4-point tetrahedron
  auto Wa = VertexSetPredicate::w_set(Scalar(1));
  int shell = 0;
  for (const Vec3& p : Wa.points_in_ball(Scalar::sqrt_of(3)))
    if (p.norm2() == Scalar(3)) ++shell;
  CHECK(shell == 4);
}

TEST_CASE("lattice invariance under conjugation by translations") {
  IsometryGroup g = cubical_tessellation_group();
  Isometry shift = Isometry::translate(Vec3(Scalar(Rat(1, 3)), Scalar(2), Scalar(Rat(-5, 7))));
  IsometryGroup conj;
  conj.label = "conjugated";
  for (const Isometry& f : g.generators)
    conj.generators.push_back(compose(compose(shift.inverse(), f), shift));
  Lattice t1 = translation_subgroup(g, {}, 3);
  Lattice t2 = translation_subgroup(conj, {}, 3);
  CHECK(t1.same_lattice(t2));
}

TEST_CASE("non-discrete orbit detection") {
  // rotation by an angle with rational cosine 3/5 (infinite order) is not discrete
  Mat3 rot = Mat3::from_rows(Vec3(Scalar(Rat(3, 5)), Scalar(Rat(4, 5)), Scalar(0)),
                             Vec3(Scalar(Rat(-4, 5)), Scalar(Rat(3, 5)), Scalar(0)), Vec3(0, 0, 1));
  REQUIRE(rot.is_orthogonal());
  IsometryGroup g{{Isometry::linear_map(rot)}, "bad"};
  OrbitOptions opt;
  opt.min_separation = Scalar(Rat(1, 8));
  CHECK_THROWS_AS(orbit(Vec3(1, 0, 0), g, Scalar(2), opt), Error);
}
