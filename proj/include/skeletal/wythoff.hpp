#pragma once

#include "skeletal/complex.hpp"

namespace skel {

// Generating data for Wythoff's construction. For polyhedra G2 = <r2> with a
// single involutory reflection generator; for general complexes g2 generates a
// cyclic or dihedral group fixing the base edge pointwise.
struct GeneratorTriple {
  Isometry r0, r1;
  std::vector<Isometry> g2;
  Vec3 base_vertex;
  bool polyhedral = true;

  const Isometry& r2() const;
  std::vector<Isometry> group_generators() const;
  Isometry face_step() const { return r0.then(r1); } // R0 R1, acting on the right
};

void validate_triple(const GeneratorTriple& t);

struct WythoffOptions {
  GroupOptions group;
  bool validate = true;
  std::optional<Scalar> min_separation;                // default: edge length / 8
  std::optional<Scalar> explore_margin;                // default from face diameter
  int max_face_steps = 20000;
};

Complex wythoff(const GeneratorTriple& t, const Scalar& window, const WythoffOptions& opt = {});

// Distinguished involutory generators of a regular rank-4 apeirotope.
struct Rank4Generators {
  std::array<Isometry, 4> t;
  Vec3 base_vertex;
};

void validate_rank4(const Rank4Generators& g);

// Petrie dual on the generator level: (T0, T1 T3, T2, T3).
Rank4Generators petrie_swap_rank4(const Rank4Generators& g);

// 2-skeleton of the apeirotope: vertices, edges and 2-faces.
Complex two_skeleton(const Rank4Generators& g, const Scalar& window,
                     const WythoffOptions& opt = {});

} // namespace skel
