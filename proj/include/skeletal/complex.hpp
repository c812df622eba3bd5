#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skeletal/group.hpp"
#include "skeletal/polygon.hpp"

namespace skel {

struct Face {
  bool infinite = false;
  bool truncated = false;        // infinite face cut off at the materialization fringe
  std::vector<int> path;         // finite: vertex cycle; infinite: consecutive vertex path
  std::optional<Isometry> step;  // infinite: isometry advancing the path by one vertex

  int edge_count() const {
    return infinite ? static_cast<int>(path.size()) - 1 : static_cast<int>(path.size());
  }
  std::array<int, 2> edge_at(int i) const {
    if (infinite) return {path[i], path[i + 1]};
    int n = static_cast<int>(path.size());
    return {path[i], path[(i + 1) % n]};
  }
};

// Windowed materialization of a (possibly infinite) polygonal complex.
// Elements inside the reporting window are marked interior; everything out to
// the explore radius is materialized so interior elements see their full star.
struct Complex {
  Scalar window{3};
  Scalar explore{3};
  bool finite = false;
  std::vector<Vec3> verts;
  std::vector<std::array<int, 2>> edges;
  std::vector<Face> faces;
  std::optional<Lattice> periodicity;

  // derived incidence (filled by finalize)
  std::vector<std::vector<int>> vert_edges;
  std::vector<std::vector<int>> vert_faces;
  std::vector<std::vector<int>> edge_faces;
  std::vector<bool> vert_interior;
  std::vector<bool> edge_interior;

  void finalize();

  int vertex_id(const Vec3& p) const;
  int edge_id(int a, int b) const;
  const Vec3& pos(int v) const { return verts[static_cast<std::size_t>(v)]; }
  int other_end(int edge, int v) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    return e[0] == v ? e[1] : e[0];
  }

  int interior_vertex_count() const;
  int interior_edge_count() const;

  // Faces of `face` meeting vertex v: the positions of v's two neighbors
  // along the face, when both are materialized.
  std::optional<std::array<int, 2>> face_neighbors_of(int face, int v) const;

  PolygonGeometry face_geometry(int face) const;

  bool is_polyhedron() const; // every interior edge has exactly 2 faces

  // The common radicand of all coordinates.
  int field_radicand() const;

private:
  std::unordered_map<Vec3, int, Vec3Hash> vert_index_;
  std::unordered_map<long long, int> edge_index_;
};

struct BuildOptions {
  std::optional<Scalar> min_separation; // NonDiscrete check when set
  bool validate = true;
};

// Canonicalizes (sorted vertices/edges/faces), builds incidence, marks
// interior elements, and checks the polygonal-complex axioms on the interior.
Complex build_complex(std::vector<Vec3> verts, std::vector<std::array<int, 2>> edges,
                      std::vector<Face> faces, const Scalar& window,
                      std::optional<Lattice> periodicity = std::nullopt,
                      const Scalar& explore = Scalar(0), bool finite = false,
                      const BuildOptions& opt = {});

// Validation only (used by build_complex; callable on imported complexes).
void validate_complex(const Complex& k);

// ---- Flags ----

struct FlagSystem {
  struct Flag {
    int v, e, f;
  };
  std::vector<Flag> flags;
  std::vector<int> adj0;               // unique 0-adjacent flag
  std::vector<int> adj1;               // unique 1-adjacent flag, -1 at fringe
  std::vector<std::vector<int>> adj2;  // 2-adjacent flags (r-1 of them inside)
  std::vector<bool> interior;

  int index_of(int v, int e, int f) const;
  std::vector<int> interior_flags() const;

private:
  friend FlagSystem build_flags(const Complex& k);
  std::unordered_map<long long, int> index_;
};

FlagSystem build_flags(const Complex& k);

// ---- Vertex figures ----

struct GeometricGraph {
  std::vector<Vec3> nodes;
  // links as (i, j, multiplicity), i < j
  std::vector<std::array<int, 3>> links;
};

// Graph on the neighbors of v with a link per face corner at v; throws
// BoundaryContact for non-interior vertices.
GeometricGraph vertex_figure(const Complex& k, int v);

// For polyhedra the vertex figure is a single cycle; returns it in cyclic order.
std::optional<PolygonGeometry> vertex_figure_polygon(const Complex& k, int v);

} // namespace skel
