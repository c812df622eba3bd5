#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeletal/linalg.hpp"

namespace skel {

// Point lattice spanned by up to 3 independent vectors. Basis kept reduced
// (short vectors first) by greedy size reduction; exact arithmetic throughout.
struct Lattice {
  std::vector<Vec3> basis;
  Scalar scale{1};
  std::optional<std::string> name; // "aZ3", "L(a,a,0)", "L(a,a,a)" when known

  static Lattice empty() { return Lattice{}; }
  static Lattice cubic(const Scalar& a);
  static Lattice fcc(const Scalar& a); // L(a,a,0)
  static Lattice bcc(const Scalar& a); // L(a,a,a)

  int rank() const { return static_cast<int>(basis.size()); }

  // Coordinates of p in the basis when p lies in the rational span.
  std::optional<std::vector<Scalar>> span_coords(const Vec3& p) const;
  bool contains(const Vec3& p) const;

  // All lattice points x with |x - center|^2 <= radius^2, exactly.
  std::vector<Vec3> points_in_ball(const Vec3& center, const Scalar& radius) const;

  // Nearest-ish lattice point to p (greedy rounding of span coordinates).
  Vec3 round_to_lattice(const Vec3& p) const;

  bool sublattice_of(const Lattice& o) const;
  bool same_lattice(const Lattice& o) const { return sublattice_of(o) && o.sublattice_of(*this); }
};

// Greedy reduction of a generating set to a lattice basis.
Lattice lattice_from_vectors(std::vector<Vec3> vs);

// Extends the lattice so it is invariant under every matrix in ms.
Lattice make_invariant(Lattice lat, const std::vector<Mat3>& ms);

} // namespace skel
