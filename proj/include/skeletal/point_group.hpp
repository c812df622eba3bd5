#pragma once

#include <map>
#include <string>
#include <vector>

#include "skeletal/isometry.hpp"

namespace skel {

// Finite group of origin-fixing isometries, given by its full element list.
struct PointGroup {
  std::vector<Mat3> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Mat3& M) const;
  bool proper_only() const; // all determinants +1
};

// Census of a point group: multiset of (element kind, period) pairs.
// The catalog's candidate groups are pairwise distinguished by census.
using Census = std::map<std::pair<std::string, int>, int>;

Census census_of(const PointGroup& g);
std::string census_str(const Census& c);

// Names follow the paper's notation. "unknown" when no profile matches.
std::string identify_point_group(const PointGroup& g);

// Canonical groups used for candidate enumeration and census profiles.
PointGroup octahedral_full();       // [3,4], order 48
PointGroup octahedral_rotation();   // [3,4]+, order 24
PointGroup tetrahedral_full();      // [3,3], order 24
PointGroup tetrahedral_rotation();  // [3,3]+, order 12
PointGroup pyritohedral();          // [3,3]+ x <-I>, order 24
PointGroup icosahedral_full();      // [3,5], order 120
PointGroup icosahedral_rotation();  // [3,5]+, order 60

// Closure of a matrix generating set; throws NotCrystallographic beyond bound.
std::vector<Mat3> close_matrices(const std::vector<Mat3>& gens, int element_bound = 10000);

// Classification of a group fixing a line pointwise (cyclic or dihedral about
// the axis): returns "C<n>" or "D<n/2>"; used for the G2 census.
std::string classify_axial_group(const std::vector<Mat3>& elements);

} // namespace skel
