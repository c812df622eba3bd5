#include <doctest.h>

#include <random>

#include "skeletal/json_io.hpp"
#include "skeletal/scalar.hpp"

using namespace skel;

TEST_CASE("difference of squares in Q(sqrt 2)") {
  Scalar s2 = Scalar::sqrt_of(2);
  Scalar v = (Scalar(1) + s2) * (Scalar(1) - s2);
  CHECK(v == Scalar(-1));
}

TEST_CASE("sqrt(2) exceeds 1") {
  CHECK(Scalar::sqrt_of(2) > Scalar(1));
  CHECK(Scalar::sqrt_of(2).sign() == 1);
  CHECK((-Scalar::sqrt_of(2)).sign() == -1);
}

TEST_CASE("golden ratio identity tau^2 = tau + 1") {
  // tau = 1/2 + (1/2) sqrt 5
  Scalar tau(Rat(1, 2), Rat(1, 2), 5);
  CHECK(tau * tau == tau + Scalar(1));
  // same value by brute-force rational expansion:
  // (1/2 + (1/2)r5)^2 = 1/4 + 2*(1/4)r5 + (1/4)*5 = 3/2 + (1/2)r5
  CHECK(tau * tau == Scalar(Rat(3, 2), Rat(1, 2), 5));
}

TEST_CASE("mixed irrational radicands are rejected") {
  Scalar a = Scalar::sqrt_of(2);
  Scalar b = Scalar::sqrt_of(3);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_NOTHROW(a * Scalar(Rat(2, 3)));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  CHECK((Scalar(1) + Scalar::sqrt_of(2)) / (Scalar(1) + Scalar::sqrt_of(2)) == Scalar(1));
}

TEST_CASE("canonical form folds sqrt(1) and zero radical parts") {
  Scalar s(Rat(2), Rat(3), 1);
  CHECK(s == Scalar(5));
  CHECK(s.radicand() == 1);
  Scalar t = Scalar::sqrt_of(5) - Scalar::sqrt_of(5);
  CHECK(t.radicand() == 1);
  CHECK(t.is_zero());
}

TEST_CASE("exact sqrt within the field") {
  Scalar two(2);
  auto r = two.sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == Scalar::sqrt_of(2));
  // 3/2 + (1/2) sqrt 5 = tau^2
  Scalar tau(Rat(1, 2), Rat(1, 2), 5);
  auto rt = (tau * tau).sqrt();
  REQUIRE(rt.has_value());
  CHECK(*rt == tau);
  CHECK(!Scalar(7).sqrt().has_value());
  CHECK(!(Scalar(1) + Scalar::sqrt_of(2)).sqrt().has_value());
}

TEST_CASE("floor and ceil") {
  Scalar s2 = Scalar::sqrt_of(2);
  CHECK(s2.floor() == 1);
  CHECK(s2.ceil() == 2);
  CHECK((-s2).floor() == -2);
  CHECK((Scalar(3) * s2).floor() == 4); // 4.24
  CHECK(Scalar(Rat(7, 2)).floor() == 3);
}

// Rational interval oracle: every field value is enclosed in a shrinking
// rational interval; exact arithmetic must agree with interval arithmetic.
namespace {

struct Interval {
  Rat lo, hi;
  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator*(const Interval& o) const {
    Rat c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    Rat mn = c[0], mx = c[0];
    for (int i = 1; i < 4; ++i) {
      if (c[i] < mn) mn = c[i];
      if (c[i] > mx) mx = c[i];
    }
    return {mn, mx};
  }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

// sqrt(d) enclosed to k decimal digits
Interval sqrt_interval(int d, int k) {
  Int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Int lo;
  Int target = d * scale * scale;
  mpz_sqrt(lo.get_mpz_t(), target.get_mpz_t());
  return {Rat(lo, scale), Rat(lo + 1, scale)};
}

Interval enclose(const Scalar& s, int digits) {
  Interval rad = sqrt_interval(s.radicand(), digits);
  Interval b{s.radical_part(), s.radical_part()};
  Interval a{s.rational_part(), s.rational_part()};
  return a + b * rad;
}

} // namespace

TEST_CASE("arithmetic agrees with a rational interval oracle") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> pick(0, 2);
  const int radicands[3] = {2, 3, 5};
  for (int iter = 0; iter < 200; ++iter) {
    int d = radicands[pick(rng)];
    Scalar x(rat(num(rng), den(rng)), rat(num(rng), den(rng)), d);
    Scalar y(rat(num(rng), den(rng)), rat(num(rng), den(rng)), d);
    Scalar sum = x + y, diff = x - y, prod = x * y;
    for (int digits : {8, 16, 32}) {
      Interval ix = enclose(x, digits), iy = enclose(y, digits);
      // the exact result, re-enclosed, must overlap the interval computation
      auto overlaps = [](const Interval& a, const Interval& b) {
        return !(a.hi < b.lo || b.hi < a.lo);
      };
      CHECK(overlaps(enclose(sum, digits), ix + iy));
      CHECK(overlaps(enclose(diff, digits), ix - iy));
      CHECK(overlaps(enclose(prod, digits), ix * iy));
    }
    // sign agrees with a high-precision interval when it separates zero
    Interval ix = enclose(x, 40);
    if (sgn(ix.lo) > 0) CHECK(x.sign() == 1);
    if (sgn(ix.hi) < 0) CHECK(x.sign() == -1);
    // comparison consistency
    if (x < y) CHECK(enclose(x, 40).lo < enclose(y, 40).hi);
  }
}

TEST_CASE("scalar json round trip") {
  Scalar s(Rat(-3, 4), Rat(7, 2), 5);
  Json j = to_json(s);
  CHECK(j["d"] == 5);
  Scalar back = scalar_from_json(j);
  CHECK(back == s);
}

TEST_CASE("scalar text parsing") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-5/2") == Scalar(Rat(-5, 2)));
  CHECK(parse_scalar("sqrt(2)") == Scalar::sqrt_of(2));
  CHECK(parse_scalar("3/2*sqrt(5)") == Scalar(Rat(0), Rat(3, 2), 5));
  CHECK(parse_scalar("1+sqrt(2)") == Scalar(1) + Scalar::sqrt_of(2));
  CHECK(parse_scalar("2-1/2*sqrt(3)") == Scalar(Rat(2), Rat(-1, 2), 3));
}
