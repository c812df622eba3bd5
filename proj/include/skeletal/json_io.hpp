#pragma once

#include <json.hpp>

#include "skeletal/isometry.hpp"

namespace skel {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Vec3& v);
Vec3 vec3_from_json(const Json& j);

Json to_json(const Mat3& m);
Mat3 mat3_from_json(const Json& j);

Json to_json(const Isometry& f);
Isometry isometry_from_json(const Json& j);

// Parses "3", "-5/2", "sqrt(2)", "3/2*sqrt(5)", "1+sqrt(2)", "2-1/2*sqrt(3)".
Scalar parse_scalar(const std::string& text);

} // namespace skel
