#pragma once

// JSON encodings of exact values. Integers travel as decimal strings.

#include "obill/geometry.hpp"

#include <nlohmann/json.hpp>

namespace obill {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QuadExt& q);  // {"a":"p/q","b":"r/s","d":2}
Json to_json(const Point& p);    // {"x":..,"y":..}
Json to_json(const ConvexPolygon& poly);  // array of points
Json to_json(const Similarity& s);

QuadExt quadext_from_json(const Json& j);
Point point_from_json(const Json& j);
ConvexPolygon polygon_from_json(const Json& j);

// "x,y" with exact coordinates, e.g. "1/2,3/2" or "1+sqrt2,-1/2".
Point parse_point(std::string_view text);

}  // namespace obill
