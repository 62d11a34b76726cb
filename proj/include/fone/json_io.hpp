#pragma once

#include <string>

#include <json.hpp>

#include "fone/monoid.hpp"
#include "fone/rep.hpp"

namespace fone {

using Json = nlohmann::json;

Json group_to_json(const PointedGroup& g);
PointedGroup group_from_json(const Json& j);

Json matrix_to_json(const SubmonomialMatrix& m);
SubmonomialMatrix matrix_from_json(const PointedGroup& group, const Json& j);

Json monoid_to_json(const GLinearMonoid& m);
GLinearMonoid monoid_from_json(const Json& j);

Json rep_to_json(const Representation& r);
Representation rep_from_json(const GLinearMonoid& m, const Json& j);

Json melem_to_json(const GLinearMonoid& m, const MonoidElement& x);
MonoidElement melem_from_json(const GLinearMonoid& m, const Json& j);
// Accepts "0", a basis name, or "name@(r1,r2,..)".
MonoidElement melem_from_name(const GLinearMonoid& m, const std::string& name);

Quiver quiver_from_json(const Json& j);

std::vector<std::pair<MonoidElement, MonoidElement>> order_from_json(
    const GLinearMonoid& m, const Json& j);

// Sorted keys, fixed indentation, trailing newline.
std::string canonical_dump(const Json& j);

Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace fone
