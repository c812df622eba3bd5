#include "skeletal/linalg.hpp"

namespace skel {

std::weak_ordering Vec3::operator<=>(const Vec3& o) const {
  if (auto c = x <=> o.x; c != 0) return c;
  if (auto c = y <=> o.y; c != 0) return c;
  return z <=> o.z;
}

std::size_t Vec3::hash() const {
  std::size_t h = x.hash();
  h = hash_mix(h, y.hash());
  h = hash_mix(h, z.hash());
  return h;
}

std::string Vec3::str() const { return "(" + x.str() + "," + y.str() + "," + z.str() + ")"; }

Mat3 Mat3::identity() {
  Mat3 r = zero();
  r.m[0][0] = r.m[1][1] = r.m[2][2] = 1;
  return r;
}

Mat3 Mat3::zero() {
  Mat3 r;
  for (auto& row : r.m)
    for (auto& e : row) e = Scalar(0);
  return r;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  Mat3 r;
  for (int c = 0; c < 3; ++c) {
    r.m[0][c] = r0[c];
    r.m[1][c] = r1[c];
    r.m[2][c] = r2[c];
  }
  return r;
}

Mat3 Mat3::diag(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat3 r = zero();
  r.m[0][0] = a;
  r.m[1][1] = b;
  r.m[2][2] = c;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r = zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (m[i][k].is_zero()) continue;
      for (int j = 0; j < 3; ++j) r.m[i][j] += m[i][k] * o.m[k][j];
    }
  return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Mat3 Mat3::operator*(const Scalar& s) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

Mat3 Mat3::operator-() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = -m[i][j];
  return r;
}

std::weak_ordering Mat3::operator<=>(const Mat3& o) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (auto c = m[i][j] <=> o.m[i][j]; c != 0) return c;
  return std::weak_ordering::equivalent;
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Scalar Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Mat3::is_orthogonal() const { return (transpose() * *this) == identity(); }

std::optional<Mat3> Mat3::inverse() const {
  Scalar d = det();
  if (d.is_zero()) return std::nullopt;
  Mat3 adj;
  adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return adj * d.inverse();
}

std::size_t Mat3::hash() const {
  std::size_t h = 0x5eed;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h = hash_mix(h, m[i][j].hash());
  return h;
}

std::string Mat3::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += row(i).str();
    if (i < 2) s += ",";
  }
  return s + "]";
}

Vec3 operator*(const Vec3& v, const Mat3& M) {
  return Vec3(v.x * M(0, 0) + v.y * M(1, 0) + v.z * M(2, 0),
              v.x * M(0, 1) + v.y * M(1, 1) + v.z * M(2, 1),
              v.x * M(0, 2) + v.y * M(1, 2) + v.z * M(2, 2));
}

std::optional<Vec3> solve_left(const Mat3& A, const Vec3& rhs) {
  // x*A = rhs  <=>  A^T x^T = rhs^T; eliminate on A^T augmented with rhs.
  Mat3 T = A.transpose();
  std::array<std::array<Scalar, 4>, 3> aug;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) aug[i][j] = T(i, j);
    aug[i][3] = rhs[i];
  }
  int pivot_col_of_row[3] = {-1, -1, -1};
  int r = 0;
  for (int c = 0; c < 3 && r < 3; ++c) {
    int p = -1;
    for (int i = r; i < 3; ++i)
      if (!aug[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[r]);
    Scalar inv = aug[r][c].inverse();
    for (int j = c; j < 4; ++j) aug[r][j] *= inv;
    for (int i = 0; i < 3; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      Scalar f = aug[i][c];
      for (int j = c; j < 4; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col_of_row[r] = c;
    ++r;
  }
  for (int i = r; i < 3; ++i)
    if (!aug[i][3].is_zero()) return std::nullopt;
  Vec3 x = Vec3::zero();
  for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = aug[i][3];
  return x;
}

std::vector<Vec3> left_null_space(const Mat3& A) {
  // v*A = 0 <=> A^T v^T = 0; reduce A^T.
  Mat3 T = A.transpose();
  std::array<std::array<Scalar, 3>, 3> mat = T.m;
  int pivot_col_of_row[3] = {-1, -1, -1};
  bool col_has_pivot[3] = {false, false, false};
  int r = 0;
  for (int c = 0; c < 3 && r < 3; ++c) {
    int p = -1;
    for (int i = r; i < 3; ++i)
      if (!mat[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(mat[p], mat[r]);
    Scalar inv = mat[r][c].inverse();
    for (int j = c; j < 3; ++j) mat[r][j] *= inv;
    for (int i = 0; i < 3; ++i) {
      if (i == r || mat[i][c].is_zero()) continue;
      Scalar f = mat[i][c];
      for (int j = c; j < 3; ++j) mat[i][j] -= f * mat[r][j];
    }
    pivot_col_of_row[r] = c;
    col_has_pivot[c] = true;
    ++r;
  }
  std::vector<Vec3> basis;
  for (int c = 0; c < 3; ++c) {
    if (col_has_pivot[c]) continue;
    Vec3 v = Vec3::zero();
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -mat[i][c];
    basis.push_back(v);
  }
  return basis;
}

int span_rank(const std::vector<Vec3>& vs) {
  std::vector<Vec3> rows;
  for (Vec3 v : vs) {
    for (const Vec3& b : rows) {
      // eliminate using b's leading coordinate
      for (int c = 0; c < 3; ++c) {
        if (!b[c].is_zero()) {
          v = v - b * (v[c] / b[c]);
          break;
        }
      }
    }
    if (!v.is_zero()) rows.push_back(v);
    if (rows.size() == 3) break;
  }
  return static_cast<int>(rows.size());
}

std::optional<int> matrix_order(const Mat3& M, int bound) {
  Mat3 p = M;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * M;
  }
  return std::nullopt;
}

} // namespace skel
