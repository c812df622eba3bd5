#include "skeletal/scalar.hpp"

#include <cmath>

namespace skel {

namespace {

bool valid_radicand(int d) { return d == 1 || d == 2 || d == 3 || d == 5; }

} // namespace

int combine_radicand(int d1, int d2) {
  if (d1 == d2) return d1;
  if (d1 == 1) return d2;
  if (d2 == 1) return d1;
  fail(ErrorCode::FieldMismatch,
       "cannot mix radicands " + std::to_string(d1) + " and " + std::to_string(d2));
}

Scalar::Scalar(Rat a, Rat b, int d) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (!valid_radicand(d_)) fail(ErrorCode::InvalidArgument, "radicand must be one of 1,2,3,5");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  } else if (sgn(b_) == 0) {
    d_ = 1;
  }
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs; compare a^2 with b^2*d.
  Rat lhs = a_ * a_;
  Rat rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0; // impossible for squarefree d > 1, but harmless
  return c > 0 ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  int d = combine_radicand(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  if (sgn(b_) == 0) d_ = 1;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  int d = combine_radicand(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  if (sgn(b_) == 0) d_ = 1;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = combine_radicand(d_, o.d_);
  Rat a = a_ * o.a_ + b_ * o.b_ * d;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = sgn(b_) == 0 ? 1 : d;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d)
  Rat norm = a_ * a_ - b_ * b_ * d_;
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::weak_ordering Scalar::operator<=>(const Scalar& o) const {
  Scalar diff = *this - o;
  int s = diff.sign();
  if (s < 0) return std::weak_ordering::less;
  if (s > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::optional<Scalar> Scalar::sqrt() const {
  int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return Scalar(0);
  if (d_ == 1) {
    Rat root;
    if (rat_sqrt(a_, &root)) return Scalar(root);
    // a may be d * square: sqrt = root * sqrt(d) for some valid d
    for (int d : {2, 3, 5}) {
      if (rat_sqrt(a_ / d, &root)) return Scalar(Rat(0), root, d);
    }
    return std::nullopt;
  }
  // Solve (x + y*sqrt(d))^2 = a + b*sqrt(d): x^2 + y^2 d = a, 2xy = b.
  // x^2 is a root of t^2 - a t + (b^2 d)/4 = 0.
  Rat disc = a_ * a_ - b_ * b_ * d_;
  Rat droot;
  if (!rat_sqrt(disc, &droot)) return std::nullopt;
  for (int pick : {0, 1}) {
    Rat top = pick == 0 ? Rat(a_ + droot) : Rat(a_ - droot);
    Rat x2 = top / 2;
    Rat x;
    if (sgn(x2) >= 0 && rat_sqrt(x2, &x) && sgn(x) != 0) {
      Rat y = b_ / (2 * x);
      Scalar cand(x, y, d_);
      if (cand.sign() < 0) cand = -cand;
      if (cand * cand == *this) return cand;
    }
  }
  return std::nullopt;
}

Int Scalar::floor() const {
  if (d_ == 1) return rat_floor(a_);
  // Initial guess from doubles, corrected by exact comparisons.
  double approx = to_double();
  Int n;
  mpz_set_d(n.get_mpz_t(), std::floor(approx));
  while (*this - Scalar(Rat(n)) < Scalar(0)) n -= 1;
  while (*this - Scalar(Rat(n + 1)) >= Scalar(0)) n += 1;
  return n;
}

Int Scalar::ceil() const { return -(-*this).floor(); }

double Scalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 1) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::size_t Scalar::hash() const {
  std::size_t h = static_cast<std::size_t>(d_);
  h = hash_mix(h, hash_rat(a_));
  h = hash_mix(h, hash_rat(b_));
  return h;
}

std::string Scalar::str() const {
  if (d_ == 1) return rat_str(a_);
  std::string s;
  if (sgn(a_) != 0) s += rat_str(a_);
  if (sgn(b_) != 0) {
    if (!s.empty() && sgn(b_) > 0) s += "+";
    if (b_ == -1) {
      s += "-";
    } else if (b_ != 1) {
      s += rat_str(b_) + "*";
    }
    s += "sqrt(" + std::to_string(d_) + ")";
  }
  return s.empty() ? "0" : s;
}

} // namespace skel
