#include "obill/io.hpp"

namespace obill {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QuadExt& q) {
    Json j;
    j["a"] = q.a().str();
    j["b"] = q.b().str();
    j["d"] = q.d();
    return j;
}

Json to_json(const Point& p) {
    Json j;
    j["x"] = to_json(p.x);
    j["y"] = to_json(p.y);
    return j;
}

Json to_json(const ConvexPolygon& poly) {
    Json j = Json::array();
    for (const auto& p : poly.vertices()) j.push_back(to_json(p));
    return j;
}

Json to_json(const Similarity& s) {
    Json j;
    j["cos"] = to_json(s.c());
    j["sin"] = to_json(s.s());
    j["translation"] = to_json(s.t());
    return j;
}

QuadExt quadext_from_json(const Json& j) {
    if (j.is_string()) return QuadExt::parse(j.get<std::string>());
    return QuadExt(Rational::parse(j.at("a").get<std::string>()), Rational::parse(j.at("b").get<std::string>()),
                   j.at("d").get<int>());
}

Point point_from_json(const Json& j) { return {quadext_from_json(j.at("x")), quadext_from_json(j.at("y"))}; }

ConvexPolygon polygon_from_json(const Json& j) {
    std::vector<Point> v;
    for (const auto& e : j) v.push_back(point_from_json(e));
    return ConvexPolygon(std::move(v));
}

Point parse_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("point must be 'x,y': '" + std::string(text) + "'");
    return {QuadExt::parse(text.substr(0, comma)), QuadExt::parse(text.substr(comma + 1))};
}

}  // namespace obill
