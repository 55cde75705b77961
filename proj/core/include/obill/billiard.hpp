#pragma once

// Outer billiard map around a convex polygon.

#include "obill/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace obill {

enum class TableKind { Square, TriangleLattice, HexagonLattice, Octagon, Dodecagon };

TableKind parse_table_kind(std::string_view name);
std::string to_string(TableKind k);

struct BilliardTable {
    TableKind kind;
    std::vector<Point> vertices;  // CCW
    int field = 1;
    bool regular = false;  // vertices on a circle centered at the origin

    [[nodiscard]] std::size_t n() const { return vertices.size(); }
    [[nodiscard]] const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
    [[nodiscard]] ConvexPolygon polygon() const { return ConvexPolygon(vertices); }
    // Rotation about the center generating the symmetry group (regular tables).
    [[nodiscard]] Isometry symmetry(int k = 1) const;
    [[nodiscard]] int symmetry_degrees() const { return 360 / static_cast<int>(n()); }
};

BilliardTable make_table(TableKind kind);

// Closed wedge D_i: x with orient(x, A_i, A_{i-1}) >= 0 and orient(x, A_i, A_{i+1}) >= 0.
std::vector<HalfPlane> tangency_wedge(const BilliardTable& t, std::size_t i);

inline constexpr int kUndefinedOnRay = -1;

struct OutsideTableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex A_i with every other vertex strictly left of the ray x -> A_i, or
// kUndefinedOnRay when x lies on a side extension. Throws OutsideTableError
// for points inside or on the table.
int tangent_vertex(const BilliardTable& t, const Point& x);
// Mirror predicate: every other vertex strictly right.
int back_tangent_vertex(const BilliardTable& t, const Point& x);

// Both throw std::domain_error when undefined.
Point step(const BilliardTable& t, const Point& x);
Point step_back(const BilliardTable& t, const Point& x);

enum class Outcome { Finite, Periodic, BudgetExceeded };
std::string to_string(Outcome o);

struct OrbitResult {
    Outcome outcome;
    std::uint64_t steps = 0;  // k for Finite, p for Periodic, budget otherwise
    std::vector<int> itinerary;
    std::vector<Point> points;  // only when requested; points[k] = T^k x
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

OrbitResult orbit(const BilliardTable& t, const Point& x, std::uint64_t budget = kDefaultBudget, bool keep_points = false);

// Fundamental domain of the rotation group: the wedge D_0. For x in D_0 the
// folded map is R^{-j}(2 A_0 - x) where the reflected point lies in D_j.
struct FoldedStep {
    Point image;
    int sector;  // j
};
FoldedStep folded_step(const BilliardTable& t, const Point& x);
// The isometry applied by folded_step when the image lands in sector j.
Isometry folded_motion(const BilliardTable& t, int sector);

// One JSON object per step: {"index":k,"vertex":i,"point":{...}}.
void write_orbit_jsonl(std::ostream& os, const OrbitResult& r);

}  // namespace obill
