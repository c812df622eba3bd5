#include "skeletal/graph_iso.hpp"

#include <algorithm>
#include <set>

#include "skeletal/error.hpp"

namespace skel {

namespace {

struct IsoProblem {
  int n;
  std::vector<std::vector<int>> mult1, mult2; // adjacency multiplicity matrices
  // normalized squared distances (similarity mode): dist2 * total2_other
  std::vector<std::vector<Scalar>> d1, d2;
  bool use_geometry = false;

  bool extend(std::vector<int>& map, std::vector<bool>& used, int i) const {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (mult1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            mult2[static_cast<std::size_t>(c)][static_cast<std::size_t>(map[static_cast<std::size_t>(j)])])
          ok = false;
        if (ok && use_geometry &&
            !(d1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              d2[static_cast<std::size_t>(c)][static_cast<std::size_t>(map[static_cast<std::size_t>(j)])]))
          ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (extend(map, used, i + 1)) return true;
      used[static_cast<std::size_t>(c)] = false;
    }
    return false;
  }
};

std::vector<std::vector<int>> mult_matrix(const GeometricGraph& g) {
  int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& l : g.links) {
    m[static_cast<std::size_t>(l[0])][static_cast<std::size_t>(l[1])] = l[2];
    m[static_cast<std::size_t>(l[1])][static_cast<std::size_t>(l[0])] = l[2];
  }
  return m;
}

std::multiset<std::pair<int, int>> degree_profile(const std::vector<std::vector<int>>& m) {
  std::multiset<std::pair<int, int>> prof;
  for (const auto& row : m) {
    int deg = 0, links = 0;
    for (int x : row) {
      deg += x;
      links += x > 0;
    }
    prof.insert({deg, links});
  }
  return prof;
}

} // namespace

bool graph_isomorphic(const GeometricGraph& g1, const GeometricGraph& g2, GraphIsoMode mode) {
  const int n = static_cast<int>(g1.nodes.size());
  if (n != static_cast<int>(g2.nodes.size())) return false;
  if (n > 16) fail(ErrorCode::SizeLimit, "graph isomorphism limited to 16 nodes");
  if (n == 0) return true;

  IsoProblem p;
  p.n = n;
  p.mult1 = mult_matrix(g1);
  p.mult2 = mult_matrix(g2);
  if (degree_profile(p.mult1) != degree_profile(p.mult2)) return false;

  if (mode == GraphIsoMode::Similarity) {
    p.use_geometry = true;
    Scalar tot1(0), tot2(0);
    auto d2 = [](const GeometricGraph& g, int i, int j) {
      return (g.nodes[static_cast<std::size_t>(i)] - g.nodes[static_cast<std::size_t>(j)]).norm2();
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        tot1 += d2(g1, i, j);
        tot2 += d2(g2, i, j);
      }
    if (tot1.is_zero() != tot2.is_zero()) return false;
    // scale-free comparison: d1 * tot2 vs d2 * tot1
    p.d1.assign(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(0)));
    p.d2 = p.d1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        p.d1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d2(g1, i, j) * tot2;
        p.d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d2(g2, i, j) * tot1;
      }
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  return p.extend(map, used, 0);
}

} // namespace skel
