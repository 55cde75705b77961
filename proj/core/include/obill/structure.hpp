#pragma once

// Components, first-return partitions, invariant figures, lattice censuses
// and plane scans.

#include "obill/billiard.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace obill {

using Region = std::vector<ConvexPolygon>;

QuadExt area(const Region& r);

struct Component {
    ConvexPolygon region;  // closure of the open component
    std::uint64_t period = 0;
    std::vector<int> itinerary;  // one full period, starting at the seed
    bool center_special = false;  // contains a center of odd period period/2
};

// Throws std::invalid_argument if x is not periodic within `budget`.
Component component_of(const BilliardTable& t, const Point& x, std::uint64_t budget = kDefaultBudget);

// A map defined by isometries on convex parts with disjoint interiors.
struct PiecewiseIsometry {
    std::vector<ConvexPolygon> parts;
    std::vector<Isometry> maps;
    std::vector<int> labels;

    void add(ConvexPolygon part, Isometry map, int label) {
        parts.push_back(std::move(part));
        maps.push_back(std::move(map));
        labels.push_back(label);
    }
    [[nodiscard]] std::size_t size() const { return parts.size(); }
    // Index of the part containing p in its interior, or -1.
    [[nodiscard]] int locate(const Point& p) const;
    [[nodiscard]] Point apply(const Point& p) const;
};

// Orbit of a point under a piecewise isometry: labels of the parts visited.
struct MapOrbit {
    bool periodic = false;
    std::uint64_t steps = 0;  // period when periodic
    std::vector<int> labels;
};
// Throws std::domain_error if the orbit meets a part boundary.
MapOrbit map_orbit(const PiecewiseIsometry& map, const Point& x, std::uint64_t budget);

// Region helpers; regions are unions of convex parts with disjoint interiors.
bool region_contains(const Region& r, const Point& p);  // closed
bool region_interior(const Region& r, const Point& p);  // strictly inside some part
bool region_covers(const Region& outer, const Region& inner);
bool same_set(const Region& a, const Region& b);
Region apply(const Similarity& s, const Region& r);

// Strictly interior point of a proper polygon: a random convex combination of
// its vertices with positive rational weights.
template <class Rng>
Point interior_sample(const ConvexPolygon& poly, Rng& rng) {
    const auto& v = poly.vertices();
    std::vector<std::int64_t> w(v.size());
    std::int64_t total = 0;
    for (auto& x : w) total += (x = static_cast<std::int64_t>(rng() % 1000003) + 1);
    Point p{QuadExt(0), QuadExt(0)};
    for (std::size_t i = 0; i < v.size(); ++i) p = p + QuadExt(Rational(w[i], total)) * v[i];
    return p;
}

// Greedily unions parts whose union is convex.
Region merge_convex(Region parts);

// Folded map on the wedge D_0 of a regular table, split by image sector and
// clipped to `clip_to` (the parts are unbounded otherwise).
PiecewiseIsometry folded_map(const BilliardTable& t, const ConvexPolygon& clip_to);
// T itself restricted to `clip_to`: one part per tangency wedge.
PiecewiseIsometry billiard_map(const BilliardTable& t, const ConvexPolygon& clip_to);

// A maximal connected set of points sharing return time and motion. It may be
// non-convex; `parts` is a convex decomposition and `outline` its boundary.
struct ReturnPiece {
    Region parts;
    std::vector<Point> outline;
    std::uint64_t return_time = 0;
    Isometry motion;
    std::vector<int> word;  // part labels visited, length return_time
    [[nodiscard]] std::size_t side_count() const { return outline.size(); }
    [[nodiscard]] QuadExt area() const;
    [[nodiscard]] bool convex() const { return parts.size() == 1; }
};

struct ReturnPartition {
    std::vector<ReturnPiece> pieces;  // sorted by (return_time, outline)
    Region unresolved;                // parts of the base still travelling at the budget
    QuadExt lost_area;                // area that left the map's domain (should be 0)
};

struct ReturnOptions {
    std::uint64_t budget = 100000;
    bool keep_words = true;
    bool merge = true;
};

// First-return map of `base` (a union of convex parts) under `map`.
ReturnPartition return_partition(const PiecewiseIsometry& map, const Region& base, const ReturnOptions& opt = {});
ReturnPartition return_partition(const PiecewiseIsometry& map, const Region& base, std::uint64_t budget);

// The first invariant ring of a regular table, folded into D_0: bounded by
// the two rays of D_0 and by the nearest ring of table translates (the
// necklace), which is found as the fixed component of the folded map that
// is a translate of the table.
struct InvariantDomain {
    Component necklace;      // the necklace polygon on the bisector of D_0
    Region region;           // convex parts, union is the domain
    PiecewiseIsometry map;   // folded map restricted to the domain
    ConvexPolygon hull;      // convex hull of the domain
};

InvariantDomain first_invariant_domain(const BilliardTable& t);
// Restriction of `map` to `region`: every part of `map` intersected with
// every part of `region`.
PiecewiseIsometry restrict_map(const PiecewiseIsometry& map, const Region& region);

// Largest subset of `zone` invariant under `rot` (rot must have finite order).
ConvexPolygon invariant_figure(const ConvexPolygon& zone, const Isometry& rot);
// Smallest m >= 1 with rot^m = id, up to 360; 0 if none.
int isometry_order(const Isometry& rot);

// Lattice census -------------------------------------------------------

struct CensusOrbit {
    int sides = 0;               // shape of the components
    std::uint64_t components = 0;  // distinct components visited
    std::uint64_t period = 0;      // period of interior points
};

struct CensusRecord {
    TableKind table;
    int level = 0;
    std::vector<CensusOrbit> orbits;  // sorted by (sides, components)
};

CensusRecord lattice_census(const BilliardTable& t, int level);

// Plane scans ------------------------------------------------------------

enum class CellKind : std::uint8_t { Table, Finite, Periodic, Budget };

struct CellLabel {
    CellKind kind = CellKind::Table;
    std::uint64_t value = 0;  // period, finite step count, or budget
    friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

struct ScanWindow {
    QuadExt x0, y0, x1, y1;
};

struct ScanGrid {
    ScanWindow window;
    int width = 0;
    int height = 0;
    std::vector<CellLabel> labels;  // row-major, row 0 at the top
    [[nodiscard]] const CellLabel& at(int row, int col) const { return labels[static_cast<std::size_t>(row) * width + col]; }
    [[nodiscard]] Point cell_center(int row, int col) const;
};

ScanGrid scan_classify(const BilliardTable& t, const ScanWindow& window, int width, int height,
                       std::uint64_t budget, int workers = 1);

void write_pgm(std::ostream& os, const ScanGrid& g);
void write_scan_svg(std::ostream& os, const ScanGrid& g, const BilliardTable& t);

// Runs fn(i) for i in [0, n) on `workers` threads; fn must write only to
// slot i of its own output.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace obill
