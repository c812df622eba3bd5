#pragma once

#include <string>
#include <vector>

#include "skeletal/lattice.hpp"

namespace skel {

// Decidable vertex-set predicates: the named lattices at scale a, plus the
// two derived sets V_a and W_a used by the simply flag-transitive complexes.
struct VertexSetPredicate {
  enum class Kind { CubicLattice, FccLattice, BccLattice, V_a, W_a, Custom };
  Kind kind = Kind::CubicLattice;
  Scalar a{1};
  Lattice custom; // for Kind::Custom

  static VertexSetPredicate cubic(const Scalar& a) { return {Kind::CubicLattice, a, {}}; }
  static VertexSetPredicate fcc(const Scalar& a) { return {Kind::FccLattice, a, {}}; }
  static VertexSetPredicate bcc(const Scalar& a) { return {Kind::BccLattice, a, {}}; }
  static VertexSetPredicate v_set(const Scalar& a) { return {Kind::V_a, a, {}}; }
  static VertexSetPredicate w_set(const Scalar& a) { return {Kind::W_a, a, {}}; }
  static VertexSetPredicate lattice(const Lattice& l) { return {Kind::Custom, l.scale, l}; }
  static VertexSetPredicate from_name(const std::string& name, const Scalar& a);

  bool member(const Vec3& p) const;
  std::vector<Vec3> points_in_ball(const Scalar& radius) const;
  std::string name() const;
};

} // namespace skel
