#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skel {

// Arbitrary-precision rational, canonicalized by GMP (den > 0, gcd = 1).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
// Nearest integer, ties toward +infinity.
Int rat_round(const Rat& r);

// True iff r is the square of a rational; if so *root is the nonnegative root.
bool rat_sqrt(const Rat& r, Rat* root);

std::size_t hash_int(const Int& z);
std::size_t hash_rat(const Rat& r);

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::string rat_str(const Rat& r);

} // namespace skel
