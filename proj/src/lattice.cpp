#include "skeletal/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "skeletal/error.hpp"

namespace skel {

namespace {

// Dense exact Gaussian solve for small systems: A (n x n), b (n): solves A x = b.
std::optional<std::vector<Scalar>> solve_dense(std::vector<std::vector<Scalar>> A,
                                               std::vector<Scalar> b) {
  const int n = static_cast<int>(A.size());
  std::vector<int> perm(n);
  for (int c = 0; c < n; ++c) perm[c] = c;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!A[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt; // singular
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    Scalar inv = A[c][c].inverse();
    for (int j = c; j < n; ++j) A[c][j] *= inv;
    b[c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      Scalar f = A[r][c];
      for (int j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

// Nearest integer to an exact scalar (ties toward +inf).
Int nearest_int(const Scalar& s) {
  Int n = s.floor();
  // if s - n > 1/2, round up
  Scalar frac = s - Scalar(Rat(n));
  if (frac >= Scalar(Rat(1, 2))) n += 1;
  return n;
}

// Largest nonnegative integer o with o^2 <= k (k >= 0), exact.
Int int_sqrt_floor(const Scalar& k) {
  if (k.sign() < 0) return Int(-1);
  double approx = std::sqrt(std::max(0.0, k.to_double()));
  Int o;
  mpz_set_d(o.get_mpz_t(), approx);
  if (o < 0) o = 0;
  for (;;) {
    Int t = o + 1;
    Int t2 = t * t;
    if (Scalar(Rat(t2)) <= k) o += 1;
    else break;
  }
  for (;;) {
    Int t2 = o * o;
    if (o > 0 && Scalar(Rat(t2)) > k) o -= 1;
    else break;
  }
  return o;
}

} // namespace

Lattice Lattice::cubic(const Scalar& a) {
  Lattice l;
  l.basis = {Vec3(a, 0, 0), Vec3(0, a, 0), Vec3(0, 0, a)};
  l.scale = a;
  l.name = "aZ3";
  return l;
}

Lattice Lattice::fcc(const Scalar& a) {
  Lattice l;
  l.basis = {Vec3(a, a, 0), Vec3(a, -a, 0), Vec3(0, a, a)};
  l.scale = a;
  l.name = "L(a,a,0)";
  return l;
}

Lattice Lattice::bcc(const Scalar& a) {
  Lattice l;
  Scalar two_a = a * Scalar(2);
  l.basis = {Vec3(a, a, a), Vec3(two_a, 0, 0), Vec3(0, two_a, 0)};
  l.scale = a;
  l.name = "L(a,a,a)";
  return l;
}

std::optional<std::vector<Scalar>> Lattice::span_coords(const Vec3& p) const {
  const int m = rank();
  if (m == 0) return p.is_zero() ? std::optional<std::vector<Scalar>>({}) : std::nullopt;
  // Normal equations: G c = (b_i . p)
  std::vector<std::vector<Scalar>> G(m, std::vector<Scalar>(m, Scalar(0)));
  std::vector<Scalar> rhs(m, Scalar(0));
  for (int i = 0; i < m; ++i) {
    rhs[i] = basis[i].dot(p);
    for (int j = 0; j < m; ++j) G[i][j] = basis[i].dot(basis[j]);
  }
  auto c = solve_dense(G, rhs);
  if (!c) return std::nullopt;
  // Verify p really lies in the span.
  Vec3 rec = Vec3::zero();
  for (int i = 0; i < m; ++i) rec = rec + basis[i] * (*c)[i];
  if (!(rec == p)) return std::nullopt;
  return c;
}

bool Lattice::contains(const Vec3& p) const {
  auto c = span_coords(p);
  if (!c) return false;
  for (const Scalar& s : *c)
    if (!s.is_integer()) return false;
  return true;
}

Vec3 Lattice::round_to_lattice(const Vec3& p) const {
  const int m = rank();
  if (m == 0) return Vec3::zero();
  std::vector<std::vector<Scalar>> G(m, std::vector<Scalar>(m, Scalar(0)));
  std::vector<Scalar> rhs(m, Scalar(0));
  for (int i = 0; i < m; ++i) {
    rhs[i] = basis[i].dot(p);
    for (int j = 0; j < m; ++j) G[i][j] = basis[i].dot(basis[j]);
  }
  auto c = solve_dense(G, rhs);
  Vec3 out = Vec3::zero();
  if (!c) return out;
  for (int i = 0; i < m; ++i) out = out + basis[i] * Scalar(Rat(nearest_int((*c)[i])));
  return out;
}

std::vector<Vec3> Lattice::points_in_ball(const Vec3& center, const Scalar& radius) const {
  std::vector<Vec3> out;
  Scalar rho2 = radius * radius;
  const int m = rank();
  if (m == 0) {
    if (center.norm2() <= rho2) out.push_back(Vec3::zero());
    return out;
  }
  //

  // Split center into span + perpendicular parts.
  std::vector<std::vector<Scalar>> G(m, std::vector<Scalar>(m, Scalar(0)));
  std::vector<Scalar> rhs(m, Scalar(0));
  for (int i = 0; i < m; ++i) {
    rhs[i] = basis[i].dot(center);
    for (int j = 0; j < m; ++j) G[i][j] = basis[i].dot(basis[j]);
  }
  auto gamma_opt = solve_dense(G, rhs);
  if (!gamma_opt) fail(ErrorCode::InvalidArgument, "degenerate lattice basis");
  std::vector<Scalar> gamma = *gamma_opt;
  Vec3 c_span = Vec3::zero();
  for (int i = 0; i < m; ++i) c_span = c_span + basis[i] * gamma[i];
  Scalar perp2 = (center - c_span).norm2();
  Scalar eff2 = rho2 - perp2;
  if (eff2.sign() < 0) return out;

  // Diagonal of G^{-1} gives |dual_i|^2 for the coordinate bounds.
  std::vector<Scalar> ginv_diag(m, Scalar(0));
  for (int i = 0; i < m; ++i) {
    std::vector<Scalar> e(m, Scalar(0));
    e[i] = 1;
    auto col = solve_dense(G, e);
    ginv_diag[i] = (*col)[i];
  }

  std::vector<Int> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    Scalar K = eff2 * ginv_diag[i];
    Int o = int_sqrt_floor(K);
    // (n - gamma_i)^2 <= K with n integer
    Int base = nearest_int(gamma[i]);
    Int l = base - o - 1, h = base + o + 1;
    // tighten exactly
    while (l <= h) {
      Scalar diff = Scalar(Rat(l)) - gamma[i];
      if (diff * diff <= K) break;
      l += 1;
    }
    while (h >= l) {
      Scalar diff = Scalar(Rat(h)) - gamma[i];
      if (diff * diff <= K) break;
      h -= 1;
    }
    lo[i] = l;
    hi[i] = h;
    if (l > h) return out;
  }

  std::vector<Int> n(m);
  // Nested loops over at most 3 coordinates.
  auto emit = [&]() {
    Vec3 x = Vec3::zero();
    for (int i = 0; i < m; ++i) x = x + basis[i] * Scalar(Rat(n[i]));
    if ((x - c_span).norm2() <= eff2) {
      out.push_back(x);
      if (out.size() > 2000000)
        fail(ErrorCode::SizeLimit, "lattice ball enumeration exploded; non-discrete basis?");
    }
  };
  for (Int i0 = lo[0]; i0 <= hi[0]; i0 += 1) {
    n[0] = i0;
    if (m == 1) { emit(); continue; }
    for (Int i1 = lo[1]; i1 <= hi[1]; i1 += 1) {
      n[1] = i1;
      if (m == 2) { emit(); continue; }
      for (Int i2 = lo[2]; i2 <= hi[2]; i2 += 1) {
        n[2] = i2;
        emit();
      }
    }
  }
  return out;
}

bool Lattice::sublattice_of(const Lattice& o) const {
  for (const Vec3& b : basis)
    if (!o.contains(b)) return false;
  return true;
}

namespace {

Vec3 size_reduce(Vec3 v, const std::vector<Vec3>& basis) {
  bool changed = true;
  int guard = 0;
  while (changed && guard++ < 100) {
    changed = false;
    for (const Vec3& b : basis) {
      if (b.is_zero()) continue;
      Scalar mu = v.dot(b) / b.norm2();
      Int k = nearest_int(mu);
      if (k != 0) {
        v = v - b * Scalar(Rat(k));
        changed = true;
      }
    }
  }
  return v;
}

} // namespace

Lattice lattice_from_vectors(std::vector<Vec3> vs) {
  Lattice lat;
  // Repeated insertion with size reduction; iterate until stable.
  auto norm_less = [](const Vec3& a, const Vec3& b) { return a.norm2() < b.norm2(); };
  std::sort(vs.begin(), vs.end(), norm_less);
  for (const Vec3& raw : vs) {
    Vec3 v = size_reduce(raw, lat.basis);
    if (v.is_zero()) continue;
    if (lat.rank() == 3) {
      // v should have reduced to a lattice point already if in the lattice;
      // a nonzero remainder refines the lattice: re-derive from scratch.
      std::vector<Vec3> all = lat.basis;
      all.push_back(raw);
      std::sort(all.begin(), all.end(), norm_less);
      Lattice refined;
      for (const Vec3& w : all) {
        Vec3 u = size_reduce(w, refined.basis);
        if (!u.is_zero() && refined.rank() < 3) refined.basis.push_back(u);
      }
      lat = refined;
    } else {
      lat.basis.push_back(v);
    }
    // pairwise re-reduction
    bool stable = false;
    int guard = 0;
    while (!stable && guard++ < 50) {
      stable = true;
      std::sort(lat.basis.begin(), lat.basis.end(), norm_less);
      for (std::size_t i = 0; i < lat.basis.size(); ++i) {
        std::vector<Vec3> others;
        for (std::size_t j = 0; j < lat.basis.size(); ++j)
          if (j != i) others.push_back(lat.basis[j]);
        Vec3 r = size_reduce(lat.basis[i], others);
        if (!(r == lat.basis[i])) {
          stable = false;
          if (r.is_zero()) {
            lat.basis.erase(lat.basis.begin() + static_cast<long>(i));
            break;
          }
          lat.basis[i] = r;
        }
      }
    }
  }
  std::sort(lat.basis.begin(), lat.basis.end(), norm_less);
  return lat;
}

Lattice make_invariant(Lattice lat, const std::vector<Mat3>& ms) {
  bool grown = true;
  int guard = 0;
  while (grown && guard++ < 20) {
    grown = false;
    std::vector<Vec3> extra;
    for (const Vec3& b : lat.basis)
      for (const Mat3& M : ms) {
        Vec3 im = b * M;
        if (!lat.contains(im)) extra.push_back(im);
      }
    if (!extra.empty()) {
      std::vector<Vec3> all = lat.basis;
      all.insert(all.end(), extra.begin(), extra.end());
      lat = lattice_from_vectors(all);
      grown = true;
    }
  }
  return lat;
}

} // namespace skel
