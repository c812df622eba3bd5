#include "skeletal/vertex_set.hpp"

#include "skeletal/error.hpp"

namespace skel {

namespace {

// p/a as an integer vector, when all three coordinates divide exactly.
std::optional<std::array<Int, 3>> integer_coords(const Vec3& p, const Scalar& a) {
  std::array<Int, 3> u;
  for (int i = 0; i < 3; ++i) {
    Scalar q = p[i] / a;
    if (!q.is_integer()) return std::nullopt;
    u[i] = q.rational_part().get_num();
  }
  return u;
}

bool all_even(const std::array<Int, 3>& u) {
  for (const Int& c : u)
    if (mpz_odd_p(c.get_mpz_t())) return false;
  return true;
}

bool all_odd(const std::array<Int, 3>& u) {
  for (const Int& c : u)
    if (mpz_even_p(c.get_mpz_t())) return false;
  return true;
}

Int sum3(const std::array<Int, 3>& u) { return u[0] + u[1] + u[2]; }

Int mod4(const Int& z) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), 4);
  return r;
}

} // namespace

VertexSetPredicate VertexSetPredicate::from_name(const std::string& name, const Scalar& a) {
  if (name == "aZ3") return cubic(a);
  if (name == "L(a,a,0)") return fcc(a);
  if (name == "L(a,a,a)") return bcc(a);
  if (name == "V_a") return v_set(a);
  if (name == "W_a") return w_set(a);
  fail(ErrorCode::InvalidArgument, "unknown vertex set name: " + name);
}

bool VertexSetPredicate::member(const Vec3& p) const {
  if (kind == Kind::Custom) return custom.contains(p);
  auto u_opt = integer_coords(p, a);
  if (!u_opt) return false;
  const auto& u = *u_opt;
  switch (kind) {
    case Kind::CubicLattice:
      return true;
    case Kind::FccLattice:
      return mpz_even_p(Int(sum3(u)).get_mpz_t()) != 0;
    case Kind::BccLattice: {
      return all_even(u) || all_odd(u);
    }
    case Kind::V_a: {
      // aZ^3 minus the coset (0,0,a) + L(a,a,a)
      std::array<Int, 3> v = {u[0], u[1], u[2] - 1};
      return !(all_even(v) || all_odd(v));
    }
    case Kind::W_a: {
      // 2L(a,a,0) u ((a,-a,a) + 2L(a,a,0)): the diamond net
      if (all_even(u)) return mod4(sum3(u)) == 0;
      if (all_odd(u)) return mod4(sum3(u)) == 1;
      return false;
    }
    case Kind::Custom:
      return false;
  }
  return false;
}

std::vector<Vec3> VertexSetPredicate::points_in_ball(const Scalar& radius) const {
  std::vector<Vec3> out;
  if (kind == Kind::Custom) return custom.points_in_ball(Vec3::zero(), radius);
  Scalar rho2 = radius * radius;
  Int m = (radius / a).ceil();
  for (Int i = -m; i <= m; i += 1)
    for (Int j = -m; j <= m; j += 1)
      for (Int k = -m; k <= m; k += 1) {
        Vec3 p(a * Scalar(Rat(i)), a * Scalar(Rat(j)), a * Scalar(Rat(k)));
        if (p.norm2() <= rho2 && member(p)) out.push_back(p);
      }
  return out;
}

std::string VertexSetPredicate::name() const {
  switch (kind) {
    case Kind::CubicLattice: return "aZ3";
    case Kind::FccLattice: return "L(a,a,0)";
    case Kind::BccLattice: return "L(a,a,a)";
    case Kind::V_a: return "V_a";
    case Kind::W_a: return "W_a";
    case Kind::Custom: return custom.name.value_or("lattice");
  }
  return "?";
}

} // namespace skel
