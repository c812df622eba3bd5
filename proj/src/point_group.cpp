#include "skeletal/point_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "skeletal/error.hpp"

namespace skel {

bool PointGroup::contains(const Mat3& M) const {
  return std::find(elements.begin(), elements.end(), M) != elements.end();
}

bool PointGroup::proper_only() const {
  for (const Mat3& M : elements)
    if (M.det() != Scalar(1)) return false;
  return true;
}

std::vector<Mat3> close_matrices(const std::vector<Mat3>& gens, int element_bound) {
  std::unordered_set<Mat3, Mat3Hash> seen;
  std::vector<Mat3> order;
  seen.insert(Mat3::identity());
  order.push_back(Mat3::identity());
  std::vector<Mat3> frontier = order;
  while (!frontier.empty()) {
    std::vector<Mat3> next;
    for (const Mat3& e : frontier)
      for (const Mat3& g : gens) {
        Mat3 p = e * g;
        if (seen.insert(p).second) {
          order.push_back(p);
          next.push_back(p);
          if (static_cast<int>(order.size()) > element_bound)
            fail(ErrorCode::NotCrystallographic,
                 "matrix closure exceeded bound of " + std::to_string(element_bound));
        }
      }
    frontier = std::move(next);
  }
  return order;
}

Census census_of(const PointGroup& g) {
  Census c;
  for (const Mat3& M : g.elements) {
    IsoClass k = classify_isometry(Isometry::linear_map(M));
    int period = k.period ? *k.period : -1;
    c[{iso_kind_name(k.kind), period}]++;
  }
  return c;
}

std::string census_str(const Census& c) {
  std::string s;
  for (const auto& [key, count] : c) {
    s += key.first + "/" + std::to_string(key.second) + "x" + std::to_string(count) + ";";
  }
  return s;
}

namespace {

Mat3 mat_rows(long r0x, long r0y, long r0z, long r1x, long r1y, long r1z, long r2x, long r2y,
              long r2z) {
  return Mat3::from_rows(Vec3(r0x, r0y, r0z), Vec3(r1x, r1y, r1z), Vec3(r2x, r2y, r2z));
}

PointGroup from_gens(const std::vector<Mat3>& gens) {
  PointGroup g;
  g.elements = close_matrices(gens);
  return g;
}

// Icosahedral mirror with normal (tau, 1, 1-tau); entries lie in Q(sqrt 5).
Mat3 icosa_extra_mirror() {
  Scalar tau(Rat(1, 2), Rat(1, 2), 5);
  Vec3 n(tau, Scalar(1), Scalar(1) - tau); // |n|^2 = 4
  Mat3 m = Mat3::identity();
  // reflection: x -> x - 2 (x.n)/(n.n) n = x - (x.n)/2 n
  for (int i = 0; i < 3; ++i) {
    Vec3 e = Vec3::zero();
    e[i] = 1;
    Vec3 im = e - n * (e.dot(n) / Scalar(2));
    for (int j = 0; j < 3; ++j) m(i, j) = im[j];
  }
  return m;
}

} // namespace

PointGroup octahedral_full() {
  return from_gens({mat_rows(0, 1, 0, 1, 0, 0, 0, 0, 1),   // swap x,y
                    mat_rows(1, 0, 0, 0, 0, 1, 0, 1, 0),   // swap y,z
                    mat_rows(1, 0, 0, 0, 1, 0, 0, 0, -1)}); // z -> -z
}

PointGroup octahedral_rotation() {
  PointGroup full = octahedral_full();
  PointGroup g;
  for (const Mat3& M : full.elements)
    if (M.det() == Scalar(1)) g.elements.push_back(M);
  return g;
}

PointGroup tetrahedral_full() {
  return from_gens({mat_rows(0, 1, 0, 1, 0, 0, 0, 0, 1),    // swap x,y
                    mat_rows(1, 0, 0, 0, 0, 1, 0, 1, 0),    // swap y,z
                    mat_rows(0, -1, 0, -1, 0, 0, 0, 0, 1)}); // x -> -y
}

PointGroup tetrahedral_rotation() {
  return from_gens({mat_rows(-1, 0, 0, 0, -1, 0, 0, 0, 1),  // half-turn z
                    mat_rows(0, 1, 0, 0, 0, 1, 1, 0, 0)});  // cyclic x->y->z
}

PointGroup pyritohedral() {
  PointGroup t = tetrahedral_rotation();
  std::vector<Mat3> gens = t.elements;
  gens.push_back(-Mat3::identity());
  return from_gens(gens);
}

PointGroup icosahedral_full() {
  return from_gens({mat_rows(1, 0, 0, 0, -1, 0, 0, 0, 1), // y -> -y
                    mat_rows(-1, 0, 0, 0, 1, 0, 0, 0, 1), // x -> -x
                    icosa_extra_mirror()});
}

PointGroup icosahedral_rotation() {
  PointGroup full = icosahedral_full();
  PointGroup g;
  for (const Mat3& M : full.elements)
    if (M.det() == Scalar(1)) g.elements.push_back(M);
  return g;
}

namespace {

struct Profile {
  std::string name;
  std::string census;
};

const std::vector<Profile>& name_profiles() {
  static const std::vector<Profile> profiles = [] {
    std::vector<Profile> p;
    p.push_back({"[3,4]", census_str(census_of(octahedral_full()))});
    p.push_back({"[3,4]+", census_str(census_of(octahedral_rotation()))});
    p.push_back({"[3,3]", census_str(census_of(tetrahedral_full()))});
    p.push_back({"[3,3]+", census_str(census_of(tetrahedral_rotation()))});
    p.push_back({"[3,3]+x<-I>", census_str(census_of(pyritohedral()))});
    p.push_back({"[3,5]", census_str(census_of(icosahedral_full()))});
    p.push_back({"[3,5]+", census_str(census_of(icosahedral_rotation()))});
    return p;
  }();
  return profiles;
}

} // namespace

std::string identify_point_group(const PointGroup& g) {
  if (g.order() == 1) return "C1";
  std::string c = census_str(census_of(g));
  for (const Profile& p : name_profiles())
    if (p.census == c) return p.name;
  // Cyclic / dihedral fallbacks by census shape.
  Census cen = census_of(g);
  bool axial = true;
  int reflections = 0;
  for (const auto& [key, count] : cen) {
    const std::string& kind = key.first;
    if (kind == "plane-reflection" || kind == "line-reflection" || kind == "point-reflection")
      reflections += count;
    else if (kind != "identity" && kind != "rotation" && kind != "rotatory-reflection")
      axial = false;
  }
  if (axial && reflections == 0) return "C" + std::to_string(g.order());
  if (axial && reflections * 2 == g.order()) return "D" + std::to_string(g.order() / 2);
  return "unknown";
}

std::string classify_axial_group(const std::vector<Mat3>& elements) {
  int n = static_cast<int>(elements.size());
  bool has_reflection = false;
  for (const Mat3& M : elements) {
    if (M.det() == Scalar(-1)) has_reflection = true;
  }
  if (has_reflection) return "D" + std::to_string(n / 2);
  return "C" + std::to_string(n);
}

} // namespace skel
