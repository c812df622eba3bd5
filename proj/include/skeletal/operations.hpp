#pragma once

#include "skeletal/wythoff.hpp"

namespace skel {

// ---- Generator-level operations (exact, window-free) ----

// Petrie operation: (R0 R2, R1, R2).
GeneratorTriple petrie_triple(const GeneratorTriple& t);

// Facetting: (R0, R1 R2 R1, R2); faces become the holes.
GeneratorTriple facet_triple(const GeneratorTriple& t);

// Duality: (R2, R1, R0) seeded at the base-face center (finite planar faces).
GeneratorTriple dual_triple(const GeneratorTriple& t);

enum class BlendComponent { Segment, Apeirogon };

// Blend of a planar apeirohedron with a segment {} or linear apeirogon {inf}
// of height h along z. Generators act componentwise on the plane and the line.
GeneratorTriple blend_triple(const GeneratorTriple& planar, BlendComponent c, const Scalar& h);

// ---- Complex-level operations ----

Complex petrie_dual(const Complex& k);
Complex facetting(const Complex& k);

// Dual with supplied face centers (parallel to k.faces); centroids of finite
// planar faces are used when no map is given.
Complex dual(const Complex& k, const std::optional<std::vector<Vec3>>& centers = std::nullopt);

// Orthogonal projection of the blend onto the base plane z = 0: vertex and
// edge sets of the planar component (exact, deduplicated).
std::pair<std::vector<Vec3>, std::vector<std::array<int, 2>>> project_to_plane(const Complex& k);

// ---- Edge-path circuits (Petrie polygons, holes, 2-zigzags) ----

enum class CircuitKind { Petrie, Hole, Zigzag2 };

struct CircuitResult {
  bool closed = false;
  std::vector<int> path; // vertex ids; cycle when closed
  std::optional<Isometry> step;
};

// Walks the circuit through the given flag; for polyhedra only.
CircuitResult trace_circuit(const Complex& k, const FlagSystem& fs, int flag, CircuitKind kind);

struct FineLengths {
  std::optional<int> petrie, hole, zigzag2; // nullopt = infinite
};

FineLengths fine_lengths(const Complex& k);

} // namespace skel
