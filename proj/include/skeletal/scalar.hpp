#pragma once

#include <compare>
#include <optional>
#include <string>

#include "skeletal/error.hpp"
#include "skeletal/rational.hpp"

namespace skel {

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d in {1,2,3,5}.
// Canonical form: b == 0 implies d == 1, and d == 1 implies b == 0.
// Rational values (d == 1) combine freely with any radicand; two values with
// distinct irrational radicands do not mix.
class Scalar {
public:
  Scalar() : d_(1), a_(0), b_(0) {}
  Scalar(long n) : d_(1), a_(n), b_(0) {}            // NOLINT(google-explicit-constructor)
  Scalar(const Rat& a) : d_(1), a_(a), b_(0) {}      // NOLINT(google-explicit-constructor)
  Scalar(Rat a, Rat b, int d);

  static Scalar sqrt_of(int d) { return Scalar(Rat(0), Rat(1), d); }

  int radicand() const { return d_; }
  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  bool is_rational() const { return d_ == 1; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_integer() const { return d_ == 1 && rat_is_integer(a_); }

  // Exact sign in {-1, 0, +1}; no floating point involved.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  bool operator==(const Scalar& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
  std::weak_ordering operator<=>(const Scalar& o) const;

  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar inverse() const;

  // Exact square root within the same field, if one exists.
  std::optional<Scalar> sqrt() const;

  Int floor() const;
  Int ceil() const;

  // Approximation; used only for spatial bucketing and display.
  double to_double() const;

  std::size_t hash() const;
  std::string str() const;

private:
  int d_;
  Rat a_, b_;
};

// Common radicand of two values, rejecting irrational mixes.
int combine_radicand(int d1, int d2);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

} // namespace skel
