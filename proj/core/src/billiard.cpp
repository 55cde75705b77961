#include "obill/billiard.hpp"

#include "obill/io.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <stdexcept>

namespace obill {

TableKind parse_table_kind(std::string_view name) {
    if (name == "square") return TableKind::Square;
    if (name == "triangle_lattice" || name == "triangle") return TableKind::TriangleLattice;
    if (name == "hexagon_lattice" || name == "hexagon") return TableKind::HexagonLattice;
    if (name == "octagon") return TableKind::Octagon;
    if (name == "dodecagon") return TableKind::Dodecagon;
    throw std::invalid_argument("unknown table '" + std::string(name) + "'");
}

std::string to_string(TableKind k) {
    switch (k) {
        case TableKind::Square: return "square";
        case TableKind::TriangleLattice: return "triangle_lattice";
        case TableKind::HexagonLattice: return "hexagon_lattice";
        case TableKind::Octagon: return "octagon";
        case TableKind::Dodecagon: return "dodecagon";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Finite: return "finite";
        case Outcome::Periodic: return "periodic";
        case Outcome::BudgetExceeded: return "budget";
    }
    return "?";
}

Isometry BilliardTable::symmetry(int k) const {
    if (!regular) throw std::logic_error("symmetry: table is not regular");
    return Isometry::rotation(k * symmetry_degrees());
}

BilliardTable make_table(TableKind kind) {
    BilliardTable t{kind, {}, 1, false};
    auto pts = [](std::initializer_list<std::pair<int, int>> l) {
        std::vector<Point> v;
        for (auto [x, y] : l) v.emplace_back(QuadExt(x), QuadExt(y));
        return v;
    };
    switch (kind) {
        case TableKind::Square: t.vertices = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); break;
        case TableKind::TriangleLattice: t.vertices = pts({{0, 0}, {1, 0}, {0, 1}}); break;
        case TableKind::HexagonLattice: t.vertices = pts({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}); break;
        case TableKind::Octagon:
        case TableKind::Dodecagon: {
            const int n = kind == TableKind::Octagon ? 8 : 12;
            t.field = kind == TableKind::Octagon ? 2 : 3;
            t.regular = true;
            for (int k = 0; k < n; ++k) {
                auto [c, s] = unit_vector(k * 360 / n);
                t.vertices.emplace_back(c, s);
            }
            break;
        }
    }
    return t;
}

std::vector<HalfPlane> tangency_wedge(const BilliardTable& t, std::size_t i) {
    const std::size_t n = t.n();
    const Point& a = t.vertex(i);
    const Point& prev = t.vertex(i + n - 1);
    const Point& next = t.vertex(i + 1);
    return {HalfPlane::left_of(a, prev), HalfPlane::left_of(a, next)};
}

namespace {

int find_vertex(const BilliardTable& t, const Point& x, int want) {
    const std::size_t n = t.n();
    bool on_ray = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = t.vertex(i);
        const int o1 = orient(x, a, t.vertex(i + n - 1)) * want;
        if (o1 < 0) continue;
        const int o2 = orient(x, a, t.vertex(i + 1)) * want;
        if (o2 < 0) continue;
        if (o1 > 0 && o2 > 0) return static_cast<int>(i);
        if (!(x == a)) on_ray = true;
    }
    if (on_ray && t.polygon().locate(x) == Location::Exterior) return kUndefinedOnRay;
    throw OutsideTableError("point " + x.str() + " is not outside the table");
}

}  // namespace

int tangent_vertex(const BilliardTable& t, const Point& x) { return find_vertex(t, x, 1); }
int back_tangent_vertex(const BilliardTable& t, const Point& x) { return find_vertex(t, x, -1); }

Point step(const BilliardTable& t, const Point& x) {
    const int i = tangent_vertex(t, x);
    if (i == kUndefinedOnRay) throw std::domain_error("step undefined on side extension at " + x.str());
    return QuadExt(2) * t.vertex(static_cast<std::size_t>(i)) - x;
}

Point step_back(const BilliardTable& t, const Point& x) {
    const int i = back_tangent_vertex(t, x);
    if (i == kUndefinedOnRay) throw std::domain_error("step_back undefined on side extension at " + x.str());
    return QuadExt(2) * t.vertex(static_cast<std::size_t>(i)) - x;
}

OrbitResult orbit(const BilliardTable& t, const Point& x0, std::uint64_t budget, bool keep_points) {
    OrbitResult r{Outcome::BudgetExceeded, budget, {}, {}};
    Point x = x0;
    for (std::uint64_t k = 0; k < budget; ++k) {
        if (keep_points) r.points.push_back(x);
        const int i = tangent_vertex(t, x);
        if (i == kUndefinedOnRay) {
            r.outcome = Outcome::Finite;
            r.steps = k;
            return r;
        }
        r.itinerary.push_back(i);
        x = QuadExt(2) * t.vertex(static_cast<std::size_t>(i)) - x;
        if (x == x0) {
            r.outcome = Outcome::Periodic;
            r.steps = k + 1;
            return r;
        }
    }
    return r;
}

Isometry folded_motion(const BilliardTable& t, int sector) {
    return t.symmetry(-sector).compose(Isometry::point_reflection(t.vertex(0)));
}

FoldedStep folded_step(const BilliardTable& t, const Point& x) {
    if (!t.regular) throw std::logic_error("folded_step: table is not regular");
    const Point y = QuadExt(2) * t.vertex(0) - x;
    const int j = tangent_vertex(t, y);
    if (j == kUndefinedOnRay) throw std::domain_error("folded_step: image on a side extension");
    return {t.symmetry(-j).apply(y), j};
}

void write_orbit_jsonl(std::ostream& os, const OrbitResult& r) {
    for (std::size_t k = 0; k < r.itinerary.size(); ++k) {
        nlohmann::ordered_json j;
        j["index"] = k;
        j["vertex"] = r.itinerary[k];
        if (k < r.points.size()) j["point"] = to_json(r.points[k]);
        os << j.dump() << '\n';
    }
}

}  // namespace obill
