#include "skeletal/operations.hpp"

#include <algorithm>
#include <map>

#include "skeletal/error.hpp"

namespace skel {

GeneratorTriple petrie_triple(const GeneratorTriple& t) {
  GeneratorTriple out = t;
  out.r0 = t.r0.then(t.r2());
  validate_triple(out);
  return out;
}

GeneratorTriple facet_triple(const GeneratorTriple& t) {
  GeneratorTriple out = t;
  out.r1 = t.r1.then(t.r2()).then(t.r1);
  validate_triple(out);
  return out;
}

namespace {

std::vector<Vec3> base_face_cycle(const GeneratorTriple& t, int bound = 64) {
  Isometry S = t.face_step();
  std::vector<Vec3> cycle;
  Vec3 p = t.base_vertex;
  for (int k = 0;; ++k) {
    if (k > 0 && p == t.base_vertex) break;
    if (k > bound) return {}; // infinite face
    cycle.push_back(p);
    p = S.apply(p);
  }
  return cycle;
}

} // namespace

GeneratorTriple dual_triple(const GeneratorTriple& t) {
  std::vector<Vec3> cycle = base_face_cycle(t);
  if (cycle.empty()) fail(ErrorCode::CentersRequired, "dual of an infinite-faced triple needs centers");
  Vec3 c = Vec3::zero();
  for (const Vec3& v : cycle) c = c + v;
  c = c / Scalar(static_cast<long>(cycle.size()));
  GeneratorTriple out;
  out.r0 = t.r2();
  out.r1 = t.r1;
  out.g2 = {t.r0};
  out.base_vertex = c;
  out.polyhedral = true;
  validate_triple(out);
  return out;
}

namespace {

bool planar_generator(const Isometry& f) {
  // acts on the z = 0 plane: z coordinate preserved
  return f.linear(2, 0).is_zero() && f.linear(2, 1).is_zero() && f.linear(2, 2) == Scalar(1) &&
         f.linear(0, 2).is_zero() && f.linear(1, 2).is_zero() && f.translation.z.is_zero();
}

Isometry z_reflect(const Scalar& at) { // z -> 2*at - z
  return Isometry(Mat3::diag(Scalar(1), Scalar(1), Scalar(-1)), Vec3(Scalar(0), Scalar(0), at * Scalar(2)));
}

} // namespace

GeneratorTriple blend_triple(const GeneratorTriple& planar, BlendComponent c, const Scalar& h) {
  if (h.is_zero()) fail(ErrorCode::ZeroScale, "blend height must be nonzero");
  if (!planar.polyhedral) fail(ErrorCode::InvalidArgument, "blend needs a polyhedral triple");
  for (const Isometry& g : planar.group_generators())
    if (!planar_generator(g))
      fail(ErrorCode::InvalidArgument, "blend input must act on the z=0 plane");
  if (!planar.base_vertex.z.is_zero())
    fail(ErrorCode::InvalidArgument, "blend base vertex must lie in the z=0 plane");

  GeneratorTriple out = planar;
  if (c == BlendComponent::Segment) {
    out.r0 = planar.r0.then(z_reflect(h / Scalar(2)));
  } else {
    out.r0 = planar.r0.then(z_reflect(Scalar(0)));
    out.r1 = planar.r1.then(z_reflect(h / Scalar(2)));
  }
  validate_triple(out);
  return out;
}

// ---- circuits ----

namespace {

const std::vector<int>& circuit_block(CircuitKind kind) {
  static const std::vector<int> petrie{0, 1, 2};
  static const std::vector<int> hole{0, 1, 2, 1};
  static const std::vector<int> zig2{0, 1, 2, 1, 2};
  switch (kind) {
    case CircuitKind::Petrie: return petrie;
    case CircuitKind::Hole: return hole;
    case CircuitKind::Zigzag2: return zig2;
  }
  return petrie;
}

int apply_sigma(const FlagSystem& fs, int flag, int i) {
  if (flag < 0) return -1;
  switch (i) {
    case 0: return fs.adj0[static_cast<std::size_t>(flag)];
    case 1: return fs.adj1[static_cast<std::size_t>(flag)];
    default: {
      const auto& a2 = fs.adj2[static_cast<std::size_t>(flag)];
      return a2.size() == 1 ? a2[0] : -1; // polyhedra only
    }
  }
}

} // namespace

CircuitResult trace_circuit(const Complex& k, const FlagSystem& fs, int flag, CircuitKind kind) {
  const std::vector<int>& block = circuit_block(kind);
  CircuitResult out;
  auto walk = [&](int start, std::vector<int>& verts, bool forward) -> bool {
    // returns true when the circuit closed
    int cur = start;
    for (int guard = 0; guard < 100000; ++guard) {
      verts.push_back(fs.flags[static_cast<std::size_t>(cur)].v);
      for (std::size_t bi = 0; bi < block.size(); ++bi) {
        int i = forward ? block[bi] : block[block.size() - 1 - bi];
        cur = apply_sigma(fs, cur, i);
        if (cur < 0) return false;
      }
      if (cur == start) return true;
    }
    fail(ErrorCode::SizeLimit, "circuit walk did not terminate");
  };
  std::vector<int> fwd;
  bool closed = walk(flag, fwd, true);
  if (closed) {
    out.closed = true;
    out.path = std::move(fwd);
    return out;
  }
  // open: extend backwards for the fullest arc
  std::vector<int> bwd;
  (void)walk(flag, bwd, false);
  out.path.assign(bwd.rbegin(), bwd.rend() - 1);
  out.path.insert(out.path.end(), fwd.begin(), fwd.end());
  std::vector<Vec3> pts;
  pts.reserve(out.path.size());
  for (int v : out.path) pts.push_back(k.pos(v));
  out.step = fit_step_isometry(pts);
  return out;
}

namespace {

int first_interior_flag(const FlagSystem& fs) {
  for (std::size_t i = 0; i < fs.flags.size(); ++i)
    if (fs.interior[i]) return static_cast<int>(i);
  fail(ErrorCode::WindowTooSmall, "no interior flags in window");
}

std::optional<int> circuit_length(const Complex& k, const FlagSystem& fs, CircuitKind kind) {
  CircuitResult r = trace_circuit(k, fs, first_interior_flag(fs), kind);
  if (r.closed) return static_cast<int>(r.path.size());
  if (r.step) {
    auto ord = isometry_order(*r.step, 200);
    if (!ord) return std::nullopt; // genuinely infinite
    fail(ErrorCode::WindowTooSmall, "circuit would close outside the window");
  }
  fail(ErrorCode::WindowTooSmall, "circuit left the window before its shape was determined");
}

} // namespace

FineLengths fine_lengths(const Complex& k) {
  if (!k.is_polyhedron()) fail(ErrorCode::NotAPolyhedron, "fine lengths need a polyhedron");
  FlagSystem fs = build_flags(k);
  FineLengths out;
  out.petrie = circuit_length(k, fs, CircuitKind::Petrie);
  out.hole = circuit_length(k, fs, CircuitKind::Hole);
  out.zigzag2 = circuit_length(k, fs, CircuitKind::Zigzag2);
  return out;
}

// ---- complex-level operations ----

namespace {

Complex rebuild_with_faces(const Complex& k, std::vector<Face> faces) {
  BuildOptions opt;
  opt.validate = true;
  return build_complex(k.verts, k.edges, std::move(faces), k.window, k.periodicity, k.explore,
                       k.finite, opt);
}

std::vector<Face> circuit_faces(const Complex& k, CircuitKind kind) {
  if (!k.is_polyhedron()) fail(ErrorCode::NotAPolyhedron, "operation needs a polyhedron");
  FlagSystem fs = build_flags(k);
  std::map<std::vector<std::array<int, 2>>, bool> seen;
  std::vector<Face> faces;
  auto key_of = [](const Face& f) {
    std::vector<std::array<int, 2>> key;
    for (int i = 0; i < f.edge_count(); ++i) {
      auto [a, b] = f.edge_at(i);
      if (a > b) std::swap(a, b);
      key.push_back({a, b});
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  for (std::size_t fl = 0; fl < fs.flags.size(); ++fl) {
    CircuitResult r = trace_circuit(k, fs, static_cast<int>(fl), kind);
    Face f;
    if (r.closed) {
      f.path = std::move(r.path);
    } else {
      if (static_cast<int>(r.path.size()) < 2) continue;
      if (r.step) {
        if (isometry_order(*r.step, 200))
          fail(ErrorCode::WindowTooSmall, "a circuit face would close outside the window");
        f.step = r.step;
      } else if (fs.interior[fl]) {
        fail(ErrorCode::WindowTooSmall, "an interior circuit left the window undetermined");
      }
      f.infinite = true;
      f.truncated = true;
      f.path = std::move(r.path);
    }
    auto key = key_of(f);
    if (seen.emplace(key, true).second) faces.push_back(std::move(f));
  }
  return faces;
}

} // namespace

Complex petrie_dual(const Complex& k) { return rebuild_with_faces(k, circuit_faces(k, CircuitKind::Petrie)); }

Complex facetting(const Complex& k) {
  // second-exit paths need vertex degree >= 3
  for (std::size_t v = 0; v < k.verts.size(); ++v)
    if (k.vert_interior[v] && k.vert_edges[v].size() < 3)
      fail(ErrorCode::InvalidArgument, "facetting needs vertex degree >= 3");
  return rebuild_with_faces(k, circuit_faces(k, CircuitKind::Hole));
}

Complex dual(const Complex& k, const std::optional<std::vector<Vec3>>& centers) {
  if (!k.is_polyhedron()) fail(ErrorCode::NotAPolyhedron, "dual needs a polyhedron");
  std::vector<Vec3> face_center(k.faces.size());
  for (std::size_t f = 0; f < k.faces.size(); ++f) {
    if (centers) {
      face_center[f] = (*centers).at(f);
      continue;
    }
    const Face& face = k.faces[f];
    PolygonGeometry g = k.face_geometry(static_cast<int>(f));
    if (face.infinite || !points_coplanar(g.verts))
      fail(ErrorCode::CentersRequired, "no canonical center for a skew or infinite face");
    Vec3 c = Vec3::zero();
    for (const Vec3& p : g.verts) c = c + p;
    face_center[f] = c / Scalar(static_cast<long>(g.verts.size()));
  }

  FlagSystem fs = build_flags(k);
  std::vector<Vec3> verts = face_center;
  std::vector<std::array<int, 2>> edges;
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    if (k.edge_faces[e].size() != 2) continue;
    int a = k.edge_faces[e][0], b = k.edge_faces[e][1];
    std::array<int, 2> de{a, b};
    if (de[0] > de[1]) std::swap(de[0], de[1]);
    edges.push_back(de);
  }
  std::vector<Face> faces;
  for (std::size_t v = 0; v < k.verts.size(); ++v) {
    if (!k.vert_interior[v]) continue;
    // ring of faces around v via alternating adjacencies
    int start = -1;
    for (std::size_t i = 0; i < fs.flags.size() && start < 0; ++i)
      if (fs.flags[i].v == static_cast<int>(v) && fs.interior[i]) start = static_cast<int>(i);
    if (start < 0) continue;
    Face df;
    int cur = start;
    bool ok = true;
    for (int guard = 0; guard < 1000; ++guard) {
      df.path.push_back(fs.flags[static_cast<std::size_t>(cur)].f);
      int nxt = apply_sigma(fs, apply_sigma(fs, cur, 1), 2);
      if (nxt < 0) {
        ok = false;
        break;
      }
      cur = nxt;
      if (cur == start) break;
    }
    if (ok && df.path.size() >= 3) faces.push_back(std::move(df));
  }
  BuildOptions opt;
  opt.validate = true;
  return build_complex(std::move(verts), std::move(edges), std::move(faces), k.window,
                       k.periodicity, k.explore, k.finite, opt);
}

std::pair<std::vector<Vec3>, std::vector<std::array<int, 2>>> project_to_plane(const Complex& k) {
  std::vector<Vec3> verts;
  std::map<Vec3, int> index;
  std::vector<int> remap(k.verts.size());
  for (std::size_t v = 0; v < k.verts.size(); ++v) {
    Vec3 p = k.verts[v];
    p.z = Scalar(0);
    auto it = index.find(p);
    if (it == index.end()) {
      index.emplace(p, static_cast<int>(verts.size()));
      remap[v] = static_cast<int>(verts.size());
      verts.push_back(p);
    } else {
      remap[v] = it->second;
    }
  }
  std::map<std::array<int, 2>, bool> eseen;
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : k.edges) {
    std::array<int, 2> m{remap[static_cast<std::size_t>(e[0])], remap[static_cast<std::size_t>(e[1])]};
    if (m[0] == m[1]) continue;
    if (m[0] > m[1]) std::swap(m[0], m[1]);
    if (eseen.emplace(m, true).second) edges.push_back(m);
  }
  return {verts, edges};
}

} // namespace skel
