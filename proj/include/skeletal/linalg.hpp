#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skeletal/scalar.hpp"

namespace skel {

struct Vec3 {
  Scalar x, y, z;

  Vec3() = default;
  Vec3(Scalar x_, Scalar y_, Scalar z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Vec3 zero() { return Vec3(0, 0, 0); }

  const Scalar& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Scalar& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return Vec3(x + o.x, y + o.y, z + o.z); }
  Vec3 operator-(const Vec3& o) const { return Vec3(x - o.x, y - o.y, z - o.z); }
  Vec3 operator-() const { return Vec3(-x, -y, -z); }
  Vec3 operator*(const Scalar& s) const { return Vec3(x * s, y * s, z * s); }
  Vec3 operator/(const Scalar& s) const { return Vec3(x / s, y / s, z / s); }

  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  std::weak_ordering operator<=>(const Vec3& o) const;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  Scalar dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return Vec3(y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x);
  }
  Scalar norm2() const { return dot(*this); }

  std::size_t hash() const;
  std::string str() const;
};

inline Vec3 operator*(const Scalar& s, const Vec3& v) { return v * s; }

struct Vec3Hash {
  std::size_t operator()(const Vec3& v) const { return v.hash(); }
};

// Row-major 3x3 matrix acting on row vectors from the right: v -> v*M.
struct Mat3 {
  std::array<std::array<Scalar, 3>, 3> m;

  Mat3() = default;

  static Mat3 identity();
  static Mat3 zero();
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
  // Diagonal matrix.
  static Mat3 diag(const Scalar& a, const Scalar& b, const Scalar& c);

  const Scalar& operator()(int r, int c) const { return m[r][c]; }
  Scalar& operator()(int r, int c) { return m[r][c]; }

  Vec3 row(int r) const { return Vec3(m[r][0], m[r][1], m[r][2]); }
  Vec3 col(int c) const { return Vec3(m[0][c], m[1][c], m[2][c]); }

  Mat3 operator*(const Mat3& o) const;
  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(const Scalar& s) const;
  Mat3 operator-() const;
  bool operator==(const Mat3& o) const { return m == o.m; }
  std::weak_ordering operator<=>(const Mat3& o) const;

  Mat3 transpose() const;
  Scalar det() const;
  Scalar trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  bool is_identity() const { return *this == identity(); }
  bool is_orthogonal() const;
  std::optional<Mat3> inverse() const;

  std::size_t hash() const;
  std::string str() const;
};

// Row vector times matrix.
Vec3 operator*(const Vec3& v, const Mat3& M);

struct Mat3Hash {
  std::size_t operator()(const Mat3& M) const { return M.hash(); }
};

// Solutions x of x*A = rhs (row convention). Empty optional when inconsistent.
std::optional<Vec3> solve_left(const Mat3& A, const Vec3& rhs);

// Basis of { v : v*A = 0 }.
std::vector<Vec3> left_null_space(const Mat3& A);

// Rank of the span of the given vectors.
int span_rank(const std::vector<Vec3>& vs);

// Matrix power order: least k >= 1 with M^k = I, up to `bound`; nullopt if none.
std::optional<int> matrix_order(const Mat3& M, int bound = 60);

} // namespace skel
