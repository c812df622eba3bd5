#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeletal/lattice.hpp"
#include "skeletal/point_group.hpp"

namespace skel {

struct IsometryGroup {
  std::vector<Isometry> generators;
  std::string label;
};

struct GroupOptions {
  int word_length = 12;      // BFS depth for coset/translation discovery
  int element_bound = 10000; // special-group closure bound
  int bfs_bound = 400000;    // hard cap on explored full isometries
};

// Decomposition of a discrete isometry group as special group x translations:
// every element is coset_reps[i] followed by a lattice translation.
struct GroupStructure {
  PointGroup special;                // closed set of linear parts
  std::vector<Isometry> coset_reps;  // parallel to special.elements
  Lattice translations;              // full translation subgroup T(G) found

  bool finite() const { return translations.rank() == 0; }

  // Every g in G with seed*g inside the closed ball of the given radius.
  std::vector<Isometry> elements_into_ball(const Vec3& seed, const Scalar& radius) const;
};

GroupStructure analyze_group(const IsometryGroup& g, const GroupOptions& opt = {});

struct OrbitOptions {
  GroupOptions group;
  std::optional<Scalar> min_separation; // NonDiscrete below this distance
};

std::vector<Vec3> orbit(const Vec3& seed, const IsometryGroup& g, const Scalar& radius,
                        const OrbitOptions& opt = {});

// Translation subgroup discovered by bounded word search; rank may be < 3.
// With require_rank > 0, throws RankDeficient when fewer independent
// translations are found.
Lattice translation_subgroup(const IsometryGroup& g, const GroupOptions& opt = {},
                             int require_rank = 0);

PointGroup special_group(const IsometryGroup& g, const GroupOptions& opt = {});

// Minimum pairwise separation check; throws NonDiscrete on violation.
void check_discrete(const std::vector<Vec3>& points, const Scalar& min_separation);

} // namespace skel
