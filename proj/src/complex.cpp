#include "skeletal/complex.hpp"

#include <algorithm>
#include <map>

#include "skeletal/error.hpp"

namespace skel {

namespace {

long long edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
}

} // namespace

void Complex::finalize() {
  vert_index_.clear();
  edge_index_.clear();
  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(edges.size());
  const int nf = static_cast<int>(faces.size());
  for (int i = 0; i < nv; ++i) vert_index_[verts[static_cast<std::size_t>(i)]] = i;
  for (int i = 0; i < ne; ++i) {
    auto& e = edges[static_cast<std::size_t>(i)];
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    edge_index_[edge_key(e[0], e[1])] = i;
  }
  vert_edges.assign(static_cast<std::size_t>(nv), {});
  vert_faces.assign(static_cast<std::size_t>(nv), {});
  edge_faces.assign(static_cast<std::size_t>(ne), {});
  for (int i = 0; i < ne; ++i) {
    vert_edges[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)][0])].push_back(i);
    vert_edges[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)][1])].push_back(i);
  }
  for (int f = 0; f < nf; ++f) {
    const Face& face = faces[static_cast<std::size_t>(f)];
    for (int i = 0; i < face.edge_count(); ++i) {
      auto [a, b] = face.edge_at(i);
      int e = edge_id(a, b);
      if (e < 0) fail(ErrorCode::InvalidArgument, "face references a missing edge");
      if (edge_faces[static_cast<std::size_t>(e)].empty() ||
          edge_faces[static_cast<std::size_t>(e)].back() != f)
        edge_faces[static_cast<std::size_t>(e)].push_back(f);
    }
    for (int v : face.path) {
      auto& vf = vert_faces[static_cast<std::size_t>(v)];
      if (std::find(vf.begin(), vf.end(), f) == vf.end()) vf.push_back(f);
    }
  }
  // interior marks
  vert_interior.assign(static_cast<std::size_t>(nv), false);
  edge_interior.assign(static_cast<std::size_t>(ne), false);
  Scalar w2 = window * window;
  for (int v = 0; v < nv; ++v)
    vert_interior[static_cast<std::size_t>(v)] = finite || pos(v).norm2() <= w2;
  for (int e = 0; e < ne; ++e) {
    const auto& ed = edges[static_cast<std::size_t>(e)];
    edge_interior[static_cast<std::size_t>(e)] =
        vert_interior[static_cast<std::size_t>(ed[0])] && vert_interior[static_cast<std::size_t>(ed[1])];
  }
}

int Complex::vertex_id(const Vec3& p) const {
  auto it = vert_index_.find(p);
  return it == vert_index_.end() ? -1 : it->second;
}

int Complex::edge_id(int a, int b) const {
  auto it = edge_index_.find(edge_key(a, b));
  return it == edge_index_.end() ? -1 : it->second;
}

int Complex::interior_vertex_count() const {
  int n = 0;
  for (bool b : vert_interior) n += b;
  return n;
}

int Complex::interior_edge_count() const {
  int n = 0;
  for (bool b : edge_interior) n += b;
  return n;
}

std::optional<std::array<int, 2>> Complex::face_neighbors_of(int face, int v) const {
  const Face& f = faces[static_cast<std::size_t>(face)];
  const int n = static_cast<int>(f.path.size());
  for (int i = 0; i < n; ++i) {
    if (f.path[static_cast<std::size_t>(i)] != v) continue;
    if (f.infinite) {
      if (i == 0 || i == n - 1) return std::nullopt;
      return std::array<int, 2>{f.path[static_cast<std::size_t>(i - 1)],
                                f.path[static_cast<std::size_t>(i + 1)]};
    }
    return std::array<int, 2>{f.path[static_cast<std::size_t>((i + n - 1) % n)],
                              f.path[static_cast<std::size_t>((i + 1) % n)]};
  }
  return std::nullopt;
}

PolygonGeometry Complex::face_geometry(int face) const {
  const Face& f = faces[static_cast<std::size_t>(face)];
  PolygonGeometry g;
  g.infinite = f.infinite;
  g.step = f.step;
  g.verts.reserve(f.path.size());
  for (int v : f.path) g.verts.push_back(pos(v));
  return g;
}

bool Complex::is_polyhedron() const {
  bool any = false;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edge_interior[e]) continue;
    any = true;
    if (edge_faces[e].size() != 2) return false;
  }
  return any;
}

int Complex::field_radicand() const {
  int d = 1;
  for (const Vec3& v : verts)
    for (int i = 0; i < 3; ++i) d = combine_radicand(d, v[i].radicand());
  return d;
}

Complex build_complex(std::vector<Vec3> verts, std::vector<std::array<int, 2>> edges,
                      std::vector<Face> faces, const Scalar& window,
                      std::optional<Lattice> periodicity, const Scalar& explore, bool finite,
                      const BuildOptions& opt) {
  if (window.sign() <= 0) fail(ErrorCode::InvalidArgument, "window radius must be positive");

  // canonical vertex order
  std::vector<int> order(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return verts[static_cast<std::size_t>(a)] < verts[static_cast<std::size_t>(b)];
  });
  std::vector<int> remap(verts.size());
  std::vector<Vec3> sorted;
  sorted.reserve(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && verts[static_cast<std::size_t>(order[i])] == sorted.back()) {
      remap[static_cast<std::size_t>(order[i])] = static_cast<int>(sorted.size()) - 1;
      continue;
    }
    sorted.push_back(verts[static_cast<std::size_t>(order[i])]);
    remap[static_cast<std::size_t>(order[i])] = static_cast<int>(sorted.size()) - 1;
  }

  std::vector<std::array<int, 2>> new_edges;
  {
    std::map<std::array<int, 2>, bool> seen;
    for (auto e : edges) {
      std::array<int, 2> m{remap[static_cast<std::size_t>(e[0])], remap[static_cast<std::size_t>(e[1])]};
      if (m[0] == m[1]) fail(ErrorCode::InvalidArgument, "degenerate edge");
      if (m[0] > m[1]) std::swap(m[0], m[1]);
      if (!seen.emplace(m, true).second) continue;
      new_edges.push_back(m);
    }
    std::sort(new_edges.begin(), new_edges.end());
  }

  std::vector<Face> new_faces;
  {
    std::map<std::vector<std::array<int, 2>>, bool> seen;
    for (Face f : faces) {
      for (int& v : f.path) v = remap[static_cast<std::size_t>(v)];
      // canonical traversal: finite cycles start at the least vertex and take
      // the lesser neighbor first; infinite paths run toward the larger end.
      if (!f.infinite && f.path.size() >= 3) {
        auto mn = std::min_element(f.path.begin(), f.path.end());
        std::rotate(f.path.begin(), mn, f.path.end());
        if (f.path[1] > f.path.back()) {
          std::reverse(f.path.begin() + 1, f.path.end());
        }
      } else if (f.infinite && f.path.size() >= 2 && f.path.front() > f.path.back()) {
        std::reverse(f.path.begin(), f.path.end());
        if (f.step) f.step = f.step->inverse();
      }
      std::vector<std::array<int, 2>> key;
      for (int i = 0; i < f.edge_count(); ++i) {
        auto [a, b] = f.edge_at(i);
        if (a > b) std::swap(a, b);
        key.push_back({a, b});
      }
      std::sort(key.begin(), key.end());
      if (!seen.emplace(key, true).second) continue;
      new_faces.push_back(std::move(f));
    }
    // canonical face order: by sorted edge key
    std::sort(new_faces.begin(), new_faces.end(), [](const Face& x, const Face& y) {
      return x.path < y.path;
    });
  }

  Complex k;
  k.window = window;
  k.explore = explore.sign() > 0 ? explore : window;
  k.finite = finite;
  k.verts = std::move(sorted);
  k.edges = std::move(new_edges);
  k.faces = std::move(new_faces);
  k.periodicity = std::move(periodicity);
  k.finalize();

  if (opt.min_separation) check_discrete(k.verts, *opt.min_separation);
  if (opt.validate) validate_complex(k);
  return k;
}

void validate_complex(const Complex& k) {
  // every face edge is an edge: enforced in finalize()
  // interior edges carry at least two faces
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    if (!k.edge_interior[e]) continue;
    if (k.edge_faces[e].size() < 2)
      fail(ErrorCode::EdgeFaceDeficit,
           "interior edge " + k.pos(k.edges[e][0]).str() + "-" + k.pos(k.edges[e][1]).str() +
               " lies in " + std::to_string(k.edge_faces[e].size()) + " face(s)");
  }
  // connected vertex figures at interior vertices
  for (std::size_t v = 0; v < k.verts.size(); ++v) {
    if (!k.vert_interior[v]) continue;
    GeometricGraph g = vertex_figure(k, static_cast<int>(v));
    if (g.nodes.empty())
      fail(ErrorCode::DisconnectedVertexFigure, "isolated interior vertex " + k.pos(static_cast<int>(v)).str());
    std::vector<int> comp(g.nodes.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (const auto& l : g.links) {
        int o = -1;
        if (l[0] == n) o = l[1];
        else if (l[1] == n) o = l[0];
        if (o >= 0 && comp[static_cast<std::size_t>(o)] < 0) {
          comp[static_cast<std::size_t>(o)] = 0;
          stack.push_back(o);
        }
      }
    }
    for (int c : comp)
      if (c < 0)
        fail(ErrorCode::DisconnectedVertexFigure,
             "vertex figure at " + k.pos(static_cast<int>(v)).str() + " is disconnected");
  }
  // connected interior edge graph
  {
    std::vector<int> comp(k.verts.size(), -1);
    int start = -1;
    for (std::size_t v = 0; v < k.verts.size(); ++v)
      if (k.vert_interior[v]) {
        start = static_cast<int>(v);
        break;
      }
    if (start >= 0) {
      std::vector<int> stack{start};
      comp[static_cast<std::size_t>(start)] = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : k.vert_edges[static_cast<std::size_t>(v)]) {
          if (!k.edge_interior[static_cast<std::size_t>(e)]) continue;
          int o = k.other_end(e, v);
          if (comp[static_cast<std::size_t>(o)] < 0) {
            comp[static_cast<std::size_t>(o)] = 0;
            stack.push_back(o);
          }
        }
      }
      for (std::size_t v = 0; v < k.verts.size(); ++v)
        if (k.vert_interior[v] && comp[v] < 0)
          fail(ErrorCode::DisconnectedEdgeGraph, "interior edge graph is disconnected");
    }
  }
}

// ---- Flags ----

namespace {

long long flag_key(int v, int e, int f) {
  return (static_cast<long long>(v) << 42) ^ (static_cast<long long>(e) << 21) ^ f;
}

} // namespace

int FlagSystem::index_of(int v, int e, int f) const {
  auto it = index_.find(flag_key(v, e, f));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FlagSystem::interior_flags() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (interior[i]) out.push_back(static_cast<int>(i));
  return out;
}

FlagSystem build_flags(const Complex& k) {
  FlagSystem fs;
  for (int f = 0; f < static_cast<int>(k.faces.size()); ++f) {
    const Face& face = k.faces[static_cast<std::size_t>(f)];
    for (int i = 0; i < face.edge_count(); ++i) {
      auto [a, b] = face.edge_at(i);
      int e = k.edge_id(a, b);
      for (int v : {a, b}) {
        if (fs.index_of(v, e, f) >= 0) continue;
        fs.index_[flag_key(v, e, f)] = static_cast<int>(fs.flags.size());
        fs.flags.push_back({v, e, f});
      }
    }
  }
  const int n = static_cast<int>(fs.flags.size());
  fs.adj0.assign(static_cast<std::size_t>(n), -1);
  fs.adj1.assign(static_cast<std::size_t>(n), -1);
  fs.adj2.assign(static_cast<std::size_t>(n), {});
  fs.interior.assign(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    auto [v, e, f] = fs.flags[static_cast<std::size_t>(i)];
    fs.adj0[static_cast<std::size_t>(i)] = fs.index_of(k.other_end(e, v), e, f);
    auto nb = k.face_neighbors_of(f, v);
    if (nb) {
      // the other face-edge at v
      int u = (*nb)[0], w = (*nb)[1];
      int eu = k.edge_id(v, u), ew = k.edge_id(v, w);
      int other = (eu == e) ? ew : eu;
      if (other >= 0) fs.adj1[static_cast<std::size_t>(i)] = fs.index_of(v, other, f);
    }
    for (int f2 : k.edge_faces[static_cast<std::size_t>(e)]) {
      if (f2 == f) continue;
      int j = fs.index_of(v, e, f2);
      if (j >= 0) fs.adj2[static_cast<std::size_t>(i)].push_back(j);
    }
    fs.interior[static_cast<std::size_t>(i)] = k.vert_interior[static_cast<std::size_t>(v)] &&
                                               k.edge_interior[static_cast<std::size_t>(e)] &&
                                               fs.adj1[static_cast<std::size_t>(i)] >= 0;
  }
  return fs;
}

// ---- Vertex figures ----

GeometricGraph vertex_figure(const Complex& k, int v) {
  if (!k.vert_interior[static_cast<std::size_t>(v)])
    fail(ErrorCode::BoundaryContact, "vertex figure requested at a boundary vertex");
  GeometricGraph g;
  std::unordered_map<int, int> node_of; // vertex id -> node index
  auto node = [&](int u) {
    auto it = node_of.find(u);
    if (it != node_of.end()) return it->second;
    int idx = static_cast<int>(g.nodes.size());
    node_of[u] = idx;
    g.nodes.push_back(k.pos(u));
    return idx;
  };
  for (int e : k.vert_edges[static_cast<std::size_t>(v)]) node(k.other_end(e, v));
  std::map<std::array<int, 2>, int> mult;
  for (int f : k.vert_faces[static_cast<std::size_t>(v)]) {
    auto nb = k.face_neighbors_of(f, v);
    if (!nb) fail(ErrorCode::BoundaryContact, "face path truncated at an interior vertex");
    std::array<int, 2> link{node((*nb)[0]), node((*nb)[1])};
    if (link[0] > link[1]) std::swap(link[0], link[1]);
    mult[link]++;
  }
  for (const auto& [l, m] : mult) g.links.push_back({l[0], l[1], m});
  return g;
}

std::optional<PolygonGeometry> vertex_figure_polygon(const Complex& k, int v) {
  GeometricGraph g = vertex_figure(k, v);
  const int n = static_cast<int>(g.nodes.size());
  if (n < 3) return std::nullopt;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& l : g.links) {
    if (l[2] != 1) return std::nullopt; // single cycle needs simple links
    adj[static_cast<std::size_t>(l[0])].push_back(l[1]);
    adj[static_cast<std::size_t>(l[1])].push_back(l[0]);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;
  PolygonGeometry poly;
  int prev = -1, cur = 0;
  for (int i = 0; i < n; ++i) {
    poly.verts.push_back(g.nodes[static_cast<std::size_t>(cur)]);
    int nxt = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                            : adj[static_cast<std::size_t>(cur)][0];
    prev = cur;
    cur = nxt;
  }
  if (cur != 0) return std::nullopt; // not a single cycle
  return poly;
}

} // namespace skel
