#include "skeletal/group.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "skeletal/error.hpp"

namespace skel {

namespace {

std::vector<Isometry> generator_set_with_inverses(const IsometryGroup& g) {
  std::vector<Isometry> gens;
  std::unordered_set<Isometry, IsometryHash> seen;
  for (const Isometry& f : g.generators) {
    if (!f.valid_orthogonal()) fail(ErrorCode::InvalidArgument, "generator is not an isometry");
    if (seen.insert(f).second) gens.push_back(f);
    Isometry inv = f.inverse();
    if (seen.insert(inv).second) gens.push_back(inv);
  }
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "empty generator list");
  return gens;
}

} // namespace

GroupStructure analyze_group(const IsometryGroup& g, const GroupOptions& opt) {
  std::vector<Isometry> gens = generator_set_with_inverses(g);

  // Special group first: closure of the linear parts (cheap, bounded).
  std::vector<Mat3> lin_gens;
  for (const Isometry& f : gens) lin_gens.push_back(f.linear);
  std::vector<Mat3> special_elems = close_matrices(lin_gens, opt.element_bound);

  std::unordered_map<Mat3, std::size_t, Mat3Hash> special_index;
  for (std::size_t i = 0; i < special_elems.size(); ++i) special_index[special_elems[i]] = i;

  // BFS over full isometries: collect a coset representative per linear part
  // and harvest translations from coincident linear parts.
  std::unordered_set<Isometry, IsometryHash> seen;
  std::vector<Isometry> frontier{Isometry::identity()};
  seen.insert(frontier[0]);
  std::vector<std::optional<Isometry>> reps(special_elems.size());
  reps[special_index[Mat3::identity()]] = Isometry::identity();
  std::size_t reps_found = 1;
  std::vector<Vec3> harvest;

  Lattice lattice;
  int stable_levels = 0;
  // The word bound governs translation-discovery saturation; the search keeps
  // going while coset representatives are still missing (finite groups of
  // diameter > word_length, e.g. [3,5], need the extra depth).
  const int hard_depth = opt.word_length * 4;
  for (int depth = 0; depth < hard_depth && !frontier.empty(); ++depth) {
    std::size_t harvest_before = harvest.size();
    std::size_t reps_before = reps_found;
    std::vector<Isometry> next;
    for (const Isometry& e : frontier) {
      for (const Isometry& gen : gens) {
        Isometry p = e.then(gen);
        if (!seen.insert(p).second) continue;
        if (seen.size() > static_cast<std::size_t>(opt.bfs_bound))
          fail(ErrorCode::NotCrystallographic, "group exploration exceeded bfs bound");
        auto it = special_index.find(p.linear);
        if (it == special_index.end())
          fail(ErrorCode::NotCrystallographic, "linear part escaped the special closure");
        std::optional<Isometry>& rep = reps[it->second];
        if (!rep) {
          rep = p;
          ++reps_found;
        } else {
          Vec3 diff = p.then(rep->inverse()).translation;
          if (!diff.is_zero()) harvest.push_back(diff);
        }
        next.push_back(p);
      }
    }
    frontier = std::move(next);

    bool new_translations = harvest.size() != harvest_before;
    if (new_translations) {
      std::vector<Vec3> vs = lattice.basis;
      vs.insert(vs.end(), harvest.begin() + static_cast<long>(harvest_before), harvest.end());
      Lattice updated = lattice_from_vectors(vs);
      if (updated.rank() == lattice.rank()) {
        bool same = updated.same_lattice(lattice);
        lattice = updated;
        if (same && reps_found == reps_before) ++stable_levels;
        else stable_levels = 0;
      } else {
        lattice = updated;
        stable_levels = 0;
      }
    } else if (reps_found == reps_before) {
      ++stable_levels;
    } else {
      stable_levels = 0;
    }

    if (reps_found == special_elems.size() &&
        (stable_levels >= 2 || depth + 1 >= opt.word_length))
      break;
  }

  if (reps_found != special_elems.size())
    fail(ErrorCode::NotCrystallographic,
         "could not reach a coset representative for every special-group element within the word bound");

  lattice = make_invariant(lattice, special_elems);

  GroupStructure out;
  out.special.elements = special_elems;
  out.translations = lattice;
  out.coset_reps.reserve(reps.size());
  for (auto& rep : reps) {
    Isometry r = *rep;
    if (lattice.rank() > 0) {
      // keep representative translations short
      Vec3 near = lattice.round_to_lattice(r.translation);
      r.translation = r.translation - near;
    }
    out.coset_reps.push_back(r);
  }
  return out;
}

std::vector<Isometry> GroupStructure::elements_into_ball(const Vec3& seed,
                                                         const Scalar& radius) const {
  std::vector<Isometry> out;
  Scalar rho2 = radius * radius;
  for (const Isometry& rep : coset_reps) {
    Vec3 s0 = rep.apply(seed);
    if (translations.rank() == 0) {
      if (s0.norm2() <= rho2) out.push_back(rep);
      continue;
    }
    for (const Vec3& lam : translations.points_in_ball(-s0, radius)) {
      out.push_back(Isometry(rep.linear, rep.translation + lam));
    }
  }
  return out;
}

void check_discrete(const std::vector<Vec3>& points, const Scalar& min_separation) {
  if (points.empty()) return;
  Scalar min2 = min_separation * min_separation;
  double cell = min_separation.to_double();
  if (cell <= 0) fail(ErrorCode::InvalidArgument, "min separation must be positive");
  auto key_of = [&](const Vec3& p) {
    auto comp = [&](const Scalar& s) {
      return static_cast<long long>(std::floor(s.to_double() / cell));
    };
    return std::tuple<long long, long long, long long>(comp(p.x), comp(p.y), comp(p.z));
  };
  std::map<std::tuple<long long, long long, long long>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < points.size(); ++i) buckets[key_of(points[i])].push_back(i);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [kx, ky, kz] = key_of(points[i]);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = buckets.find({kx + dx, ky + dy, kz + dz});
          if (it == buckets.end()) continue;
          for (std::size_t j : it->second) {
            if (j <= i) continue;
            Scalar d2 = (points[i] - points[j]).norm2();
            if (!d2.is_zero() && d2 < min2)
              fail(ErrorCode::NonDiscrete, "points " + points[i].str() + " and " +
                                               points[j].str() + " are closer than the separation bound");
          }
        }
  }
}

std::vector<Vec3> orbit(const Vec3& seed, const IsometryGroup& g, const Scalar& radius,
                        const OrbitOptions& opt) {
  if (radius.sign() <= 0) fail(ErrorCode::InvalidArgument, "window radius must be positive");
  GroupStructure gs = analyze_group(g, opt.group);
  std::vector<Vec3> pts;
  for (const Isometry& e : gs.elements_into_ball(seed, radius)) pts.push_back(e.apply(seed));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (opt.min_separation) check_discrete(pts, *opt.min_separation);
  return pts;
}

Lattice translation_subgroup(const IsometryGroup& g, const GroupOptions& opt, int require_rank) {
  GroupStructure gs = analyze_group(g, opt);
  if (gs.translations.rank() < require_rank)
    fail(ErrorCode::RankDeficient, "translation subgroup has rank " +
                                       std::to_string(gs.translations.rank()) + ", expected " +
                                       std::to_string(require_rank));
  return gs.translations;
}

PointGroup special_group(const IsometryGroup& g, const GroupOptions& opt) {
  std::vector<Mat3> lin;
  for (const Isometry& f : generator_set_with_inverses(g)) lin.push_back(f.linear);
  PointGroup pg;
  pg.elements = close_matrices(lin, opt.element_bound);
  return pg;
}

} // namespace skel
