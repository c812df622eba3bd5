#include "skeletal/json_io.hpp"

#include <cstdint>

#include "skeletal/error.hpp"

namespace skel {

namespace {

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail(ErrorCode::IoError, "expected integer or string for bignum");
}

} // namespace

Json to_json(const Rat& r) { return Json::array({int_to_json(r.get_num()), int_to_json(r.get_den())}); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::IoError, "rational must be [num,den]");
  Rat r(int_from_json(j[0]), int_from_json(j[1]));
  r.canonicalize();
  return r;
}

Json to_json(const Scalar& s) {
  return Json{{"d", s.radicand()}, {"a", to_json(s.rational_part())}, {"b", to_json(s.radical_part())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_array()) return Scalar(rat_from_json(j));
  return Scalar(rat_from_json(j.at("a")), rat_from_json(j.at("b")), j.at("d").get<int>());
}

Json to_json(const Vec3& v) { return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)}); }

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::IoError, "vector must have 3 entries");
  return Vec3(scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2]));
}

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) rows.push_back(to_json(m(i, c)));
  return rows;
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 9) fail(ErrorCode::IoError, "matrix must have 9 entries (row-major)");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) m(i, c) = scalar_from_json(j[static_cast<std::size_t>(3 * i + c)]);
  return m;
}

Json to_json(const Isometry& f) {
  return Json{{"linear", to_json(f.linear)}, {"translation", to_json(f.translation)}};
}

Isometry isometry_from_json(const Json& j) {
  return Isometry(mat3_from_json(j.at("linear")), vec3_from_json(j.at("translation")));
}

namespace {

// rational := [-]digits[/digits]
Rat parse_rat_token(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  std::string num = s.substr(start, i - start);
  if (num.empty() || num == "+" || num == "-") fail(ErrorCode::IoError, "bad scalar literal: " + s);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    den = s.substr(dstart, i - dstart);
    if (den.empty()) fail(ErrorCode::IoError, "bad scalar literal: " + s);
  }
  Rat r{Int(num), Int(den)};
  r.canonicalize();
  return r;
}

} // namespace

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::IoError, "empty scalar literal");

  Scalar total(0);
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') { ++i; }
    else if (s[i] == '-') { sign = -1; ++i; }
    Rat coeff(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_rat_token(s, i);
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i + 4 < s.size() && s.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= s.size() || s[i] != ')') fail(ErrorCode::IoError, "bad scalar literal: " + text);
      int d = std::stoi(s.substr(dstart, i - dstart));
      ++i;
      total += Scalar(Rat(0), sign * coeff, d);
    } else if (have_coeff) {
      total += Scalar(sign * coeff);
    } else {
      fail(ErrorCode::IoError, "bad scalar literal: " + text);
    }
  }
  return total;
}

} // namespace skel
