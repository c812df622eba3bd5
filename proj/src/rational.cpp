#include "skeletal/rational.hpp"

namespace skel {

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_round(const Rat& r) {
  // floor(r + 1/2)
  Rat t = r + Rat(1, 2);
  return rat_floor(t);
}

bool rat_sqrt(const Rat& r, Rat* root) {
  if (sgn(r) < 0) return false;
  const Int& num = r.get_num();
  const Int& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rat(rn, rd);
  return true;
}

std::size_t hash_int(const Int& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p) + 2);
  std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) {
    h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
  }
  return h;
}

std::size_t hash_rat(const Rat& r) {
  return hash_mix(hash_int(r.get_num()), hash_int(r.get_den()));
}

std::string rat_str(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace skel
