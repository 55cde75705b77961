#pragma once

// Exact planar geometry over QuadExt coordinates.

#include "obill/quadext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace obill {

struct Point {
    QuadExt x;
    QuadExt y;

    Point() = default;
    Point(QuadExt x_, QuadExt y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator*(const QuadExt& k, const Point& p) { return {k * p.x, k * p.y}; }
    Point operator-() const { return {-x, -y}; }
    friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

    [[nodiscard]] int field() const { return join_field(x.d(), y.d()); }
    [[nodiscard]] std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// Lexicographic (x, then y) exact order; used for deterministic sorting.
int compare(const Point& p, const Point& q);
bool lex_less(const Point& p, const Point& q);

QuadExt cross(const Point& u, const Point& v);
QuadExt dot(const Point& u, const Point& v);
// Sign of cross(b - a, c - a).
int orient(const Point& a, const Point& b, const Point& c);
Point midpoint(const Point& p, const Point& q);

// a*x + b*y + c >= 0; the closed left side of the directed line p -> q.
struct HalfPlane {
    QuadExt a, b, c;

    static HalfPlane left_of(const Point& p, const Point& q);
    [[nodiscard]] QuadExt eval(const Point& p) const { return a * p.x + b * p.y + c; }
    [[nodiscard]] int side(const Point& p) const { return eval(p).sign(); }
    [[nodiscard]] HalfPlane flipped() const { return {-a, -b, -c}; }
};

enum class Location { Interior, Boundary, Exterior };

class ConvexPolygon {
public:
    ConvexPolygon() = default;  // empty
    // Vertices in any cyclic order of a convex set; orientation, duplicates
    // and collinear points are normalized away.
    explicit ConvexPolygon(std::vector<Point> vertices);

    static ConvexPolygon box(const QuadExt& x0, const QuadExt& y0, const QuadExt& x1, const QuadExt& y1);
    static ConvexPolygon hull(std::vector<Point> points);

    [[nodiscard]] const std::vector<Point>& vertices() const { return v_; }
    [[nodiscard]] std::size_t size() const { return v_.size(); }
    [[nodiscard]] bool empty() const { return v_.empty(); }
    [[nodiscard]] bool is_point() const { return v_.size() == 1; }
    [[nodiscard]] bool is_segment() const { return v_.size() == 2; }
    [[nodiscard]] bool is_degenerate() const { return v_.size() < 3; }

    // Twice the signed (CCW positive) area.
    [[nodiscard]] QuadExt area2() const;
    [[nodiscard]] QuadExt area() const;
    [[nodiscard]] Point centroid() const;  // vertex average; interior for proper polygons
    [[nodiscard]] Location locate(const Point& p) const;
    [[nodiscard]] std::vector<HalfPlane> edges() const;

    // Lowest vertex first, lexicographically; gives a canonical vertex order.
    [[nodiscard]] ConvexPolygon canonical() const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

private:
    std::vector<Point> v_;
};

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h);
ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b);
// Both closed sets share an interior point.
bool overlaps(const ConvexPolygon& a, const ConvexPolygon& b);
// a \ b as disjoint convex pieces (closures); zero-area pieces dropped.
std::vector<ConvexPolygon> subtract(const ConvexPolygon& a, const ConvexPolygon& b);
bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

// Boundary loops of the union of convex polygons with disjoint interiors.
// Shared edges (including partial overlaps) cancel; collinear vertices are
// dropped. Outer loops are CCW, holes CW. Loops are ordered by their lowest
// vertex and start there.
std::vector<std::vector<Point>> union_outline(const std::vector<ConvexPolygon>& parts);
// Two-dimensional connected groups: indices of parts linked by shared edges.
std::vector<std::vector<std::size_t>> edge_connected_groups(const std::vector<ConvexPolygon>& parts);
bool share_edge(const ConvexPolygon& a, const ConvexPolygon& b);

// Orientation-preserving similarity p -> L p + t with L = [[c, -s], [s, c]].
// An isometry when c^2 + s^2 = 1.
class Similarity {
public:
    Similarity() : c_(1), s_(0) {}
    Similarity(QuadExt c, QuadExt s, Point t) : c_(std::move(c)), s_(std::move(s)), t_(std::move(t)) {}

    static Similarity identity() { return {}; }
    static Similarity translation(Point t) { return {QuadExt(1), QuadExt(0), std::move(t)}; }
    // Counterclockwise rotation by `degrees`; throws if the angle is not a
    // multiple of 30 or 45.
    static Similarity rotation(int degrees, const Point& center = {});
    static Similarity point_reflection(const Point& center);
    static Similarity homothety(const Point& center, const QuadExt& ratio);

    [[nodiscard]] Point apply(const Point& p) const;
    [[nodiscard]] ConvexPolygon apply(const ConvexPolygon& poly) const;
    [[nodiscard]] HalfPlane apply(const HalfPlane& h) const;
    [[nodiscard]] Similarity inverse() const;
    // (*this o other)(p) = this->apply(other.apply(p))
    [[nodiscard]] Similarity compose(const Similarity& other) const;
    [[nodiscard]] Similarity operator*(const Similarity& other) const { return compose(other); }

    [[nodiscard]] const QuadExt& c() const { return c_; }
    [[nodiscard]] const QuadExt& s() const { return s_; }
    [[nodiscard]] const Point& t() const { return t_; }
    [[nodiscard]] QuadExt scale2() const { return c_ * c_ + s_ * s_; }
    [[nodiscard]] bool is_isometry() const { return scale2() == QuadExt(1); }
    // Rotation angle in degrees in [0, 360) for isometries whose angle is a
    // multiple of 15; nullopt otherwise.
    [[nodiscard]] std::optional<int> angle_degrees() const;
    // Unique fixed point when the linear part is not the identity.
    [[nodiscard]] std::optional<Point> fixed_point() const;

    friend bool operator==(const Similarity& a, const Similarity& b) {
        return a.c_ == b.c_ && a.s_ == b.s_ && a.t_ == b.t_;
    }

private:
    QuadExt c_, s_;
    Point t_;
};

using Isometry = Similarity;

// cos and sin of a multiple of 15 degrees that is a multiple of 30 or 45.
std::pair<QuadExt, QuadExt> unit_vector(int degrees);

}  // namespace obill
