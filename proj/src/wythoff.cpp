#include "skeletal/wythoff.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "skeletal/error.hpp"

namespace skel {

const Isometry& GeneratorTriple::r2() const {
  if (!polyhedral || g2.size() != 1)
    fail(ErrorCode::InvalidArgument, "triple is not polyhedral");
  return g2[0];
}

std::vector<Isometry> GeneratorTriple::group_generators() const {
  std::vector<Isometry> gens{r0, r1};
  gens.insert(gens.end(), g2.begin(), g2.end());
  return gens;
}

void validate_triple(const GeneratorTriple& t) {
  if (!t.r0.then(t.r0).is_identity()) fail(ErrorCode::InvariantViolation, "R0 is not an involution");
  if (!t.r1.then(t.r1).is_identity()) fail(ErrorCode::InvariantViolation, "R1 is not an involution");
  if (t.g2.empty()) fail(ErrorCode::InvalidArgument, "G2 generators missing");
  if (!(t.r1.apply(t.base_vertex) == t.base_vertex))
    fail(ErrorCode::InvariantViolation, "base vertex not fixed by R1");
  for (const Isometry& g : t.g2) {
    if (!(g.apply(t.base_vertex) == t.base_vertex))
      fail(ErrorCode::InvariantViolation, "base vertex not fixed by G2");
  }
  if (t.polyhedral) {
    const Isometry& r2 = t.g2[0];
    if (!r2.then(r2).is_identity()) fail(ErrorCode::InvariantViolation, "R2 is not an involution");
    Isometry prod = t.r0.then(r2);
    if (!prod.then(prod).is_identity())
      fail(ErrorCode::InvariantViolation, "(R0 R2)^2 is not the identity");
  } else {
    std::vector<Mat3> lin;
    for (const Isometry& g : t.g2) lin.push_back(g.linear);
    std::vector<Mat3> closure = close_matrices(lin, 64);
    if (closure.size() > 16)
      fail(ErrorCode::InvariantViolation, "G2 closure is larger than any dihedral edge group");
    Vec3 other = t.r0.apply(t.base_vertex);
    for (const Isometry& g : t.g2) {
      if (!(g.apply(other) == other))
        fail(ErrorCode::InvariantViolation, "G2 does not fix the base edge pointwise");
    }
  }
}

namespace {

// A rational lower bound for sqrt(s), tight enough for bucketing.
Scalar approx_sqrt_lower(const Scalar& s) {
  if (s.sign() <= 0) return Scalar(0);
  if (auto r = s.sqrt()) return *r;
  double v = std::sqrt(s.to_double());
  Rat guess(static_cast<long>(v * 1024.0), 1024);
  Scalar g(guess);
  while (g * g > s) g = g - Scalar(Rat(1, 1024));
  return g;
}

// Least integer n with n^2 >= s.
Scalar ceil_sqrt(const Scalar& s) {
  if (s.sign() <= 0) return Scalar(0);
  Int n(1);
  for (;;) {
    Scalar sq = Scalar(Rat(n)) * Scalar(Rat(n));
    if (sq >= s) break;
    n += 1;
  }
  return Scalar(Rat(n));
}

struct VertexTable {
  std::vector<Vec3> pos;
  std::unordered_map<Vec3, int, Vec3Hash> index;
  int intern(const Vec3& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(pos.size());
    index.emplace(p, id);
    pos.push_back(p);
    return id;
  }
  int find(const Vec3& p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }
};

} // namespace

Complex wythoff(const GeneratorTriple& t, const Scalar& window, const WythoffOptions& opt) {
  if (opt.validate) validate_triple(t);
  if (window.sign() <= 0) fail(ErrorCode::InvalidArgument, "window radius must be positive");

  const Vec3& v0 = t.base_vertex;
  Vec3 v1 = t.r0.apply(v0);
  if (v0 == v1) fail(ErrorCode::DegenerateFace, "base edge is degenerate");
  Scalar edge2 = (v1 - v0).norm2();

  // Base face: orbit of the base vertex under <R0,R1>, in step order S = R0 R1.
  Isometry S = t.face_step();
  std::vector<Vec3> base_cycle;
  bool face_infinite = false;
  {
    Vec3 p = v0;
    for (int k = 0;; ++k) {
      if (k > 0 && p == v0) break;
      if (k > 64) {
        face_infinite = true;
        break;
      }
      base_cycle.push_back(p);
      p = S.apply(p);
    }
    if (!face_infinite && base_cycle.size() < 3)
      fail(ErrorCode::DegenerateFace,
           "base face has " + std::to_string(base_cycle.size()) + " distinct vertices");
  }

  // Explore margin: base face diameter (finite faces) plus an edge length.
  Scalar margin;
  if (opt.explore_margin) {
    margin = *opt.explore_margin;
  } else {
    Scalar diam2 = edge2;
    if (!face_infinite) {
      for (std::size_t i = 0; i < base_cycle.size(); ++i)
        for (std::size_t j = i + 1; j < base_cycle.size(); ++j) {
          Scalar d2 = (base_cycle[i] - base_cycle[j]).norm2();
          if (d2 > diam2) diam2 = d2;
        }
    }
    margin = ceil_sqrt(diam2) + ceil_sqrt(edge2) + Scalar(1);
  }
  Scalar explore = window + margin;
  Scalar explore2 = explore * explore;

  IsometryGroup group{t.group_generators(), ""};
  GroupStructure gs = analyze_group(group, opt.group);
  std::vector<Isometry> elements = gs.elements_into_ball(v0, explore);

  VertexTable verts;
  for (const Isometry& g : elements) verts.intern(g.apply(v0));

  std::vector<std::array<int, 2>> edges;
  {
    std::map<std::array<int, 2>, bool> seen;
    for (const Isometry& g : elements) {
      int a = verts.find(g.apply(v0));
      int b = verts.find(g.apply(v1));
      if (a < 0 || b < 0) continue;
      std::array<int, 2> e{a, b};
      if (e[0] > e[1]) std::swap(e[0], e[1]);
      if (seen.emplace(e, true).second) edges.push_back(e);
    }
  }

  std::vector<Face> faces;
  {
    std::map<std::vector<std::array<int, 2>>, bool> seen;
    auto push_face = [&](Face f) {
      std::vector<std::array<int, 2>> key;
      for (int i = 0; i < f.edge_count(); ++i) {
        auto [a, b] = f.edge_at(i);
        if (a > b) std::swap(a, b);
        key.push_back({a, b});
      }
      if (key.empty()) return;
      std::sort(key.begin(), key.end());
      if (seen.emplace(key, true).second) faces.push_back(std::move(f));
    };

    for (const Isometry& g : elements) {
      if (!face_infinite) {
        Face f;
        f.path.reserve(base_cycle.size());
        bool complete = true;
        for (const Vec3& bp : base_cycle) {
          int id = verts.find(g.apply(bp));
          if (id < 0) {
            complete = false;
            break;
          }
          f.path.push_back(id);
        }
        if (complete) push_face(std::move(f));
      } else {
        // Materialize the in-window arc of the infinite face through g.
        Isometry step = g.inverse().then(S).then(g);
        Vec3 seed = g.apply(v0);
        std::vector<Vec3> fwd, bwd;
        Vec3 p = step.apply(seed);
        for (int k = 0; k < opt.max_face_steps && p.norm2() <= explore2; ++k) {
          fwd.push_back(p);
          p = step.apply(p);
        }
        Isometry back = step.inverse();
        p = back.apply(seed);
        for (int k = 0; k < opt.max_face_steps && p.norm2() <= explore2; ++k) {
          bwd.push_back(p);
          p = back.apply(p);
        }
        Face f;
        f.infinite = true;
        f.truncated = true;
        f.step = step;
        f.path.reserve(fwd.size() + bwd.size() + 1);
        for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) f.path.push_back(verts.find(*it));
        f.path.push_back(verts.find(seed));
        for (const Vec3& q : fwd) f.path.push_back(verts.find(q));
        bool complete = true;
        for (int id : f.path)
          if (id < 0) complete = false;
        if (complete && f.path.size() >= 2) push_face(std::move(f));
      }
    }
  }

  BuildOptions bopt;
  bopt.validate = opt.validate;
  if (opt.min_separation) bopt.min_separation = opt.min_separation;
  else bopt.min_separation = approx_sqrt_lower(edge2) / Scalar(8);

  std::optional<Lattice> periodicity;
  if (gs.translations.rank() > 0) periodicity = gs.translations;

  return build_complex(verts.pos, std::move(edges), std::move(faces), window, periodicity, explore,
                       gs.finite(), bopt);
}

void validate_rank4(const Rank4Generators& g) {
  for (int i = 0; i < 4; ++i)
    if (!g.t[static_cast<std::size_t>(i)].then(g.t[static_cast<std::size_t>(i)]).is_identity())
      fail(ErrorCode::InvariantViolation, "T" + std::to_string(i) + " is not an involution");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 2; j < 4; ++j) {
      Isometry p = g.t[static_cast<std::size_t>(i)].then(g.t[static_cast<std::size_t>(j)]);
      if (!p.then(p).is_identity())
        fail(ErrorCode::InvariantViolation,
             "(T" + std::to_string(i) + " T" + std::to_string(j) + ")^2 is not the identity");
    }
  for (int i = 1; i < 4; ++i)
    if (!(g.t[static_cast<std::size_t>(i)].apply(g.base_vertex) == g.base_vertex))
      fail(ErrorCode::InvariantViolation, "base vertex not fixed by T" + std::to_string(i));
}

Rank4Generators petrie_swap_rank4(const Rank4Generators& g) {
  Rank4Generators out = g;
  Isometry t13 = g.t[1].then(g.t[3]);
  if (!t13.then(t13).is_identity())
    fail(ErrorCode::InvariantViolation, "(T1 T3)^2 is not the identity");
  out.t[1] = t13;
  validate_rank4(out);
  return out;
}

Complex two_skeleton(const Rank4Generators& g, const Scalar& window, const WythoffOptions& opt) {
  validate_rank4(g);
  GeneratorTriple t;
  t.r0 = g.t[0];
  t.r1 = g.t[1];
  t.g2 = {g.t[2], g.t[3]};
  t.base_vertex = g.base_vertex;
  t.polyhedral = false;
  WythoffOptions o = opt;
  o.validate = false; // rank-4 relations checked above; G2 here is a vertex stabilizer
  Complex k = wythoff(t, window, o);
  validate_complex(k);
  return k;
}

} // namespace skel
