#include "obill/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <optional>
#include <thread>

namespace obill {

QuadExt area(const Region& r) {
    QuadExt a;
    for (const auto& p : r) a += p.area();
    return a;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    const auto w = static_cast<std::size_t>(std::max(1, workers));
    if (w == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (std::size_t k = 0; k < w; ++k) {
        pool.emplace_back([&, k] {
            try {
                for (std::size_t i = k; i < n; i += w) fn(i);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Components --------------------------------------------------------------

namespace {

bool touches_box(const ConvexPolygon& p, const QuadExt& lo_x, const QuadExt& lo_y, const QuadExt& hi_x,
                 const QuadExt& hi_y) {
    for (const auto& v : p.vertices())
        if (v.x == lo_x || v.x == hi_x || v.y == lo_y || v.y == hi_y) return true;
    return false;
}

}  // namespace

Component component_of(const BilliardTable& t, const Point& x, std::uint64_t budget) {
    const OrbitResult r = orbit(t, x, budget);
    if (r.outcome != Outcome::Periodic)
        throw std::invalid_argument("component_of: point " + x.str() + " is not periodic (" + to_string(r.outcome) + ")");
    Component c;
    c.period = r.steps;
    c.itinerary = r.itinerary;
    if (c.period % 2 == 1) {
        c.center_special = true;
        c.period *= 2;
        c.itinerary.insert(c.itinerary.end(), r.itinerary.begin(), r.itinerary.end());
    } else if ((c.period / 2) % 2 == 1 &&
               std::equal(c.itinerary.begin(), c.itinerary.begin() + static_cast<std::ptrdiff_t>(c.period / 2),
                          c.itinerary.begin() + static_cast<std::ptrdiff_t>(c.period / 2))) {
        c.center_special = true;
    }

    std::vector<HalfPlane> constraints;
    Isometry m;
    for (int v : c.itinerary) {
        const Isometry back = m.inverse();
        for (const auto& h : tangency_wedge(t, static_cast<std::size_t>(v))) constraints.push_back(back.apply(h));
        m = Isometry::point_reflection(t.vertex(static_cast<std::size_t>(v))).compose(m);
    }

    QuadExt radius(4);
    for (const auto& v : t.vertices) radius += abs(v.x.a()) + abs(v.y.a()) + abs(v.x.b()) * 2 + abs(v.y.b()) * 2;
    radius += abs(x.x.a()) + abs(x.y.a()) + abs(x.x.b()) * 2 + abs(x.y.b()) * 2;
    for (int attempt = 0; attempt < 40; ++attempt, radius *= QuadExt(2)) {
        const QuadExt lx = x.x - radius, ly = x.y - radius, hx = x.x + radius, hy = x.y + radius;
        ConvexPolygon region = ConvexPolygon::box(lx, ly, hx, hy);
        for (const auto& h : constraints) region = clip(region, h);
        if (region.empty()) throw std::logic_error("component_of: empty region for periodic point " + x.str());
        if (!touches_box(region, lx, ly, hx, hy)) {
            c.region = std::move(region);
            return c;
        }
    }
    throw std::logic_error("component_of: unbounded region at " + x.str());
}

// Piecewise isometries -------------------------------------------------------

int PiecewiseIsometry::locate(const Point& p) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].locate(p) == Location::Interior) return static_cast<int>(i);
    return -1;
}

Point PiecewiseIsometry::apply(const Point& p) const {
    const int i = locate(p);
    if (i < 0) throw std::domain_error("piecewise map undefined at " + p.str());
    return maps[static_cast<std::size_t>(i)].apply(p);
}

MapOrbit map_orbit(const PiecewiseIsometry& map, const Point& x, std::uint64_t budget) {
    MapOrbit o;
    Point y = x;
    for (std::uint64_t k = 0; k < budget; ++k) {
        const int i = map.locate(y);
        if (i < 0) throw std::domain_error("map_orbit: orbit of " + x.str() + " meets a boundary at " + y.str());
        o.labels.push_back(map.labels[static_cast<std::size_t>(i)]);
        y = map.maps[static_cast<std::size_t>(i)].apply(y);
        if (y == x) {
            o.periodic = true;
            o.steps = k + 1;
            return o;
        }
    }
    o.steps = budget;
    return o;
}

bool region_contains(const Region& r, const Point& p) {
    return std::any_of(r.begin(), r.end(), [&](const ConvexPolygon& q) { return q.locate(p) != Location::Exterior; });
}

bool region_interior(const Region& r, const Point& p) {
    return std::any_of(r.begin(), r.end(), [&](const ConvexPolygon& q) { return q.locate(p) == Location::Interior; });
}

bool region_covers(const Region& outer, const Region& inner) {
    QuadExt inside;
    for (const auto& a : inner)
        for (const auto& b : outer) inside += intersect(a, b).area();
    return inside == area(inner);
}

bool same_set(const Region& a, const Region& b) { return area(a) == area(b) && region_covers(a, b); }

Region apply(const Similarity& s, const Region& r) {
    Region out;
    out.reserve(r.size());
    for (const auto& p : r) out.push_back(s.apply(p));
    return out;
}

PiecewiseIsometry folded_map(const BilliardTable& t, const ConvexPolygon& clip_to) {
    if (!t.regular) throw std::logic_error("folded_map: table is not regular");
    PiecewiseIsometry m;
    ConvexPolygon d0 = clip_to;
    for (const auto& h : tangency_wedge(t, 0)) d0 = clip(d0, h);
    const Isometry refl = Isometry::point_reflection(t.vertex(0));
    for (std::size_t j = 0; j < t.n(); ++j) {
        ConvexPolygon part = d0;
        for (const auto& h : tangency_wedge(t, j)) part = clip(part, refl.apply(h));
        if (part.area2().sign() > 0) m.add(std::move(part), folded_motion(t, static_cast<int>(j)), static_cast<int>(j));
    }
    return m;
}

PiecewiseIsometry billiard_map(const BilliardTable& t, const ConvexPolygon& clip_to) {
    PiecewiseIsometry m;
    for (std::size_t i = 0; i < t.n(); ++i) {
        ConvexPolygon part = clip_to;
        for (const auto& h : tangency_wedge(t, i)) part = clip(part, h);
        if (part.area2().sign() > 0) m.add(std::move(part), Isometry::point_reflection(t.vertex(i)), static_cast<int>(i));
    }
    return m;
}

PiecewiseIsometry restrict_map(const PiecewiseIsometry& map, const Region& region) {
    PiecewiseIsometry out;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (const auto& r : region) {
            ConvexPolygon q = intersect(r, map.parts[i]);
            if (q.size() >= 3 && q.area2().sign() > 0) out.add(std::move(q), map.maps[i], map.labels[i]);
        }
    return out;
}

namespace {

bool is_translate(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() != b.size()) return false;
    const auto ca = a.canonical().vertices();
    const auto cb = b.canonical().vertices();
    const Point d = cb[0] - ca[0];
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(cb[i] - ca[i] == d)) return false;
    return true;
}

}  // namespace

InvariantDomain first_invariant_domain(const BilliardTable& t) {
    if (!t.regular) throw std::logic_error("first_invariant_domain: table is not regular");
    const QuadExt r(16);
    const ConvexPolygon box = ConvexPolygon::box(-r, -r, r, r);
    const PiecewiseIsometry f = folded_map(t, box);
    const ConvexPolygon table = t.polygon();
    const Point& apex = t.vertex(0);

    InvariantDomain dom;
    std::optional<QuadExt> best;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto fp = f.maps[i].fixed_point();
        if (!fp || f.parts[i].locate(*fp) != Location::Interior) continue;
        Component c = component_of(t, *fp);
        if (!is_translate(c.region, table)) continue;
        const QuadExt d2 = dot(*fp - apex, *fp - apex);
        if (!best || d2 < *best) {
            best = d2;
            dom.necklace = std::move(c);
        }
    }
    if (!best) throw std::logic_error("first_invariant_domain: no necklace component found");

    ConvexPolygon wedge = box;
    for (const auto& h : tangency_wedge(t, 0)) wedge = clip(wedge, h);
    Region pieces{wedge};
    for (std::size_t k = 0; k < t.n(); ++k) {
        const ConvexPolygon copy = t.symmetry(static_cast<int>(k)).apply(dom.necklace.region);
        Region next;
        for (const auto& p : pieces) {
            if (!overlaps(p, copy)) {
                next.push_back(p);
                continue;
            }
            for (auto& s : subtract(p, copy)) next.push_back(std::move(s));
        }
        pieces = std::move(next);
    }

    // Piece touching the apex, then everything connected to it through edges.
    const auto wh = tangency_wedge(t, 0);
    std::vector<bool> in(pieces.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& v = pieces[i].vertices();
        if (std::find(v.begin(), v.end(), apex) != v.end()) {
            in[i] = true;
            stack.push_back(i);
        }
    }
    if (stack.size() != 1) throw std::logic_error("first_invariant_domain: apex is not on exactly one piece");
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (in[j] || !share_edge(pieces[i], pieces[j])) continue;
            in[j] = true;
            stack.push_back(j);
        }
    }
    Region region;
    std::vector<Point> all;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!in[i]) continue;
        for (const auto& v : pieces[i].vertices()) {
            if (abs(v.x.a()) == Rational(16) || abs(v.y.a()) == Rational(16))
                throw std::logic_error("first_invariant_domain: domain is unbounded");
            all.push_back(v);
        }
        region.push_back(pieces[i]);
    }
    dom.region = merge_convex(std::move(region));
    std::sort(dom.region.begin(), dom.region.end(), [](const ConvexPolygon& a, const ConvexPolygon& b) {
        return lex_less(a.canonical().vertices()[0], b.canonical().vertices()[0]);
    });
    for (auto& p : dom.region) p = p.canonical();
    dom.hull = ConvexPolygon::hull(std::move(all));
    dom.map = restrict_map(f, dom.region);
    return dom;
}

// Return partitions -----------------------------------------------------------

namespace {

struct Box {
    double x0, y0, x1, y1;
    [[nodiscard]] bool meets(const Box& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
};

Box bbox(const ConvexPolygon& p) {
    Box b{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (const auto& v : p.vertices()) {
        const double x = v.x.to_double(), y = v.y.to_double();
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x);
        b.y1 = std::max(b.y1, y);
    }
    const double eps = 1e-9 * (1 + std::max({std::fabs(b.x0), std::fabs(b.x1), std::fabs(b.y0), std::fabs(b.y1)}));
    b.x0 -= eps;
    b.y0 -= eps;
    b.x1 += eps;
    b.y1 += eps;
    return b;
}

struct Live {
    ConvexPolygon cur;  // motion applied to the original piece
    Isometry motion;
    std::vector<int> word;
};

bool positive(const ConvexPolygon& p) { return p.size() >= 3 && p.area2().sign() > 0; }

}  // namespace

Region merge_convex(Region polys) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < polys.size() && !changed; ++j) {
                if (!bbox(polys[i]).meets(bbox(polys[j]))) continue;
                std::vector<Point> pts = polys[i].vertices();
                pts.insert(pts.end(), polys[j].vertices().begin(), polys[j].vertices().end());
                ConvexPolygon h = ConvexPolygon::hull(std::move(pts));
                if (h.area2() == polys[i].area2() + polys[j].area2()) {
                    polys[i] = std::move(h);
                    polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    return polys;
}

namespace {

bool same_motion(const Isometry& a, const Isometry& b) { return a == b; }


}  // namespace

ReturnPartition return_partition(const PiecewiseIsometry& map, const Region& base, std::uint64_t budget) {
    ReturnOptions opt;
    opt.budget = budget;
    return return_partition(map, base, opt);
}

ReturnPartition return_partition(const PiecewiseIsometry& map, const Region& base, const ReturnOptions& opt) {
    ReturnPartition out;
    std::vector<Box> part_boxes, base_boxes;
    for (const auto& p : map.parts) part_boxes.push_back(bbox(p));
    for (const auto& b : base) base_boxes.push_back(bbox(b));

    std::vector<Live> live;
    for (const auto& b : base)
        if (positive(b)) live.push_back({b, Isometry(), {}});

    struct Returned {
        ConvexPolygon image;
        Isometry motion;
        std::vector<int> word;
        std::uint64_t time;
    };
    std::vector<Returned> returned;

    for (std::uint64_t step = 1; step <= opt.budget && !live.empty(); ++step) {
        std::vector<Live> moved;
        for (auto& l : live) {
            const Box lb = bbox(l.cur);
            QuadExt covered;
            for (std::size_t i = 0; i < map.size(); ++i) {
                if (!lb.meets(part_boxes[i])) continue;
                ConvexPolygon q = intersect(l.cur, map.parts[i]);
                if (!positive(q)) continue;
                covered += q.area2();
                Live n{map.maps[i].apply(q), map.maps[i].compose(l.motion), {}};
                if (opt.keep_words) {
                    n.word = l.word;
                    n.word.push_back(map.labels[i]);
                }
                moved.push_back(std::move(n));
            }
            const QuadExt lost = l.cur.area2() - covered;
            if (!lost.is_zero()) out.lost_area += lost * QuadExt(Rational(1, 2));
        }

        live.clear();
        for (auto& m : moved) {
            std::vector<ConvexPolygon> rest{m.cur};
            for (std::size_t k = 0; k < base.size() && !rest.empty(); ++k) {
                std::vector<ConvexPolygon> next_rest;
                for (auto& r : rest) {
                    if (!bbox(r).meets(base_boxes[k])) {
                        next_rest.push_back(std::move(r));
                        continue;
                    }
                    ConvexPolygon in = intersect(r, base[k]);
                    if (!positive(in)) {
                        next_rest.push_back(std::move(r));
                        continue;
                    }
                    for (auto& s : subtract(r, base[k])) next_rest.push_back(std::move(s));
                    returned.push_back({std::move(in), m.motion, m.word, step});
                }
                rest = std::move(next_rest);
            }
            for (auto& r : rest) live.push_back({std::move(r), m.motion, m.word});
        }

        if (opt.merge && live.size() > 1) {
            std::vector<Live> merged;
            std::vector<bool> used(live.size(), false);
            for (std::size_t i = 0; i < live.size(); ++i) {
                if (used[i]) continue;
                std::vector<ConvexPolygon> group{live[i].cur};
                for (std::size_t j = i + 1; j < live.size(); ++j) {
                    if (!used[j] && same_motion(live[i].motion, live[j].motion)) {
                        used[j] = true;
                        group.push_back(live[j].cur);
                    }
                }
                if (group.size() == 1) {
                    merged.push_back(std::move(live[i]));
                    continue;
                }
                for (auto& g : merge_convex(std::move(group))) merged.push_back({std::move(g), live[i].motion, live[i].word});
            }
            live = std::move(merged);
        }
    }
    for (auto& l : live) out.unresolved.push_back(l.motion.inverse().apply(l.cur));

    // Group returned images by (time, motion), merge, pull back.
    std::vector<bool> used(returned.size(), false);
    for (std::size_t i = 0; i < returned.size(); ++i) {
        if (used[i]) continue;
        std::vector<ConvexPolygon> group{returned[i].image};
        for (std::size_t j = i + 1; j < returned.size(); ++j) {
            if (!used[j] && returned[j].time == returned[i].time && same_motion(returned[j].motion, returned[i].motion)) {
                used[j] = true;
                group.push_back(returned[j].image);
            }
        }
        if (opt.merge) group = merge_convex(std::move(group));
        const Isometry inv = returned[i].motion.inverse();
        Region pulled;
        for (const auto& g : group) pulled.push_back(inv.apply(g).canonical());
        const auto comps = opt.merge ? edge_connected_groups(pulled) : std::vector<std::vector<std::size_t>>{};
        auto emit = [&](Region parts) {
            ReturnPiece p;
            auto loops = union_outline(parts);
            p.outline = loops.size() == 1 ? std::move(loops[0]) : std::vector<Point>{};
            if (loops.size() != 1)
                for (auto& l : loops) p.outline.insert(p.outline.end(), l.begin(), l.end());
            p.parts = std::move(parts);
            p.return_time = returned[i].time;
            p.motion = returned[i].motion;
            p.word = returned[i].word;
            out.pieces.push_back(std::move(p));
        };
        if (opt.merge) {
            for (const auto& c : comps) {
                Region parts;
                for (std::size_t k : c) parts.push_back(pulled[k]);
                emit(std::move(parts));
            }
        } else {
            for (auto& g : pulled) emit({std::move(g)});
        }
    }
    std::sort(out.pieces.begin(), out.pieces.end(), [](const ReturnPiece& a, const ReturnPiece& b) {
        if (a.return_time != b.return_time) return a.return_time < b.return_time;
        if (a.word != b.word) return a.word < b.word;
        return std::lexicographical_compare(a.outline.begin(), a.outline.end(), b.outline.begin(), b.outline.end(),
                                            lex_less);
    });
    return out;
}

namespace {

struct RingGauge {
    Point center;
    QuadExt width;  // gauge width of one level
    std::function<QuadExt(const Point&)> gauge;
};

RingGauge ring_gauge(const BilliardTable& t) {
    switch (t.kind) {
        case TableKind::Square: {
            Point c{QuadExt(Rational(1, 2)), QuadExt(Rational(1, 2))};
            return {c, QuadExt(1), [c](const Point& p) { return abs(p.x - c.x) + abs(p.y - c.y); }};
        }
        case TableKind::HexagonLattice: {
            Point c{QuadExt(1), QuadExt(1)};
            return {c, QuadExt(2), [c](const Point& p) {
                        const QuadExt dx = p.x - c.x, dy = p.y - c.y;
                        return max(max(abs(dx), abs(dy)), abs(dx - dy));
                    }};
        }
        case TableKind::TriangleLattice: {
            Point c{QuadExt(Rational(1, 3)), QuadExt(Rational(1, 3))};
            return {c, QuadExt(2), [c](const Point& p) {
                        const QuadExt dx = p.x - c.x, dy = p.y - c.y;
                        return max(max(abs(dx), abs(dy)), abs(dx + dy));
                    }};
        }
        default: throw std::invalid_argument("lattice_census: table is not a lattice table");
    }
}

}  // namespace

CensusRecord lattice_census(const BilliardTable& t, int level) {
    if (level < 1) throw std::invalid_argument("lattice_census: level must be positive");
    const RingGauge g = ring_gauge(t);
    const QuadExt lo = g.width * QuadExt(level - 1), hi = g.width * QuadExt(level);
    const std::int64_t reach = static_cast<std::int64_t>(std::ceil(hi.to_double())) + 2;
    constexpr std::int64_t kSub = 8;
    const ConvexPolygon table = t.polygon();

    CensusRecord rec{t.kind, level, {}};
    std::vector<ConvexPolygon> seen;
    auto known = [&](const Point& p) {
        for (const auto& c : seen)
            if (c.locate(p) != Location::Exterior) return true;
        return false;
    };
    const Rational cx = g.center.x.a(), cy = g.center.y.a();
    for (std::int64_t i = -reach * kSub; i < reach * kSub; ++i) {
        for (std::int64_t j = -reach * kSub; j < reach * kSub; ++j) {
            const Point x{QuadExt(cx + Rational(2 * i + 1, 2 * kSub)), QuadExt(cy + Rational(2 * j + 1, 2 * kSub))};
            if (g.gauge(x) > hi + QuadExt(2) || table.locate(x) != Location::Exterior || known(x)) continue;
            const OrbitResult r = orbit(t, x, kDefaultBudget);
            if (r.outcome != Outcome::Periodic) continue;
            const Component c = component_of(t, x);
            // Walk the component around its orbit; the centroid visits each image once.
            const Point start = c.region.centroid();
            const OrbitResult co = orbit(t, start, kDefaultBudget);
            ConvexPolygon img = c.region;
            QuadExt min_gauge = g.gauge(start);
            std::vector<ConvexPolygon> images;
            Point y = start;
            for (int v : co.itinerary) {
                images.push_back(img);
                min_gauge = min(min_gauge, g.gauge(y));
                const Isometry refl = Isometry::point_reflection(t.vertex(static_cast<std::size_t>(v)));
                img = refl.apply(img);
                y = refl.apply(y);
            }
            for (auto& im : images) seen.push_back(std::move(im));
            if (min_gauge > lo && min_gauge <= hi)
                rec.orbits.push_back({static_cast<int>(c.region.size()), co.steps, c.period});
        }
    }
    std::sort(rec.orbits.begin(), rec.orbits.end(), [](const CensusOrbit& a, const CensusOrbit& b) {
        return std::tie(a.sides, a.components, a.period) < std::tie(b.sides, b.components, b.period);
    });
    return rec;
}

QuadExt ReturnPiece::area() const { return obill::area(parts); }

// Invariant figures ----------------------------------------------------------

int isometry_order(const Isometry& rot) {
    Isometry p = rot;
    for (int m = 1; m <= 360; ++m) {
        if (p == Isometry()) return m;
        p = rot.compose(p);
    }
    return 0;
}

ConvexPolygon invariant_figure(const ConvexPolygon& zone, const Isometry& rot) {
    const int m = isometry_order(rot);
    if (m == 0) throw std::invalid_argument("invariant_figure: rotation has infinite order");
    ConvexPolygon fig = zone;
    Isometry p = rot;
    for (int k = 1; k < m && !fig.empty(); ++k) {
        fig = intersect(fig, p.apply(zone));
        p = rot.compose(p);
    }
    return fig;
}

// Scans ----------------------------------------------------------------------

Point ScanGrid::cell_center(int row, int col) const {
    const QuadExt fx(Rational(2 * col + 1, 2 * static_cast<std::int64_t>(width)));
    const QuadExt fy(Rational(2 * row + 1, 2 * static_cast<std::int64_t>(height)));
    return {window.x0 + fx * (window.x1 - window.x0), window.y1 - fy * (window.y1 - window.y0)};
}

ScanGrid scan_classify(const BilliardTable& t, const ScanWindow& window, int width, int height,
                       std::uint64_t budget, int workers) {
    if (width < 1 || height < 1) throw std::invalid_argument("scan: resolution must be positive");
    if (!(window.x0 < window.x1) || !(window.y0 < window.y1)) throw std::invalid_argument("scan: empty window");
    ScanGrid g{window, width, height, std::vector<CellLabel>(static_cast<std::size_t>(width) * height)};
    const ConvexPolygon table = t.polygon();
    parallel_for(static_cast<std::size_t>(height), workers, [&](std::size_t row) {
        for (int col = 0; col < width; ++col) {
            const Point p = g.cell_center(static_cast<int>(row), col);
            CellLabel& label = g.labels[row * static_cast<std::size_t>(width) + col];
            if (table.locate(p) != Location::Exterior) {
                label = {CellKind::Table, 0};
                continue;
            }
            const OrbitResult r = orbit(t, p, budget);
            switch (r.outcome) {
                case Outcome::Finite: label = {CellKind::Finite, r.steps}; break;
                case Outcome::Periodic: label = {CellKind::Periodic, r.steps}; break;
                case Outcome::BudgetExceeded: label = {CellKind::Budget, r.steps}; break;
            }
        }
    });
    return g;
}

namespace {

std::uint32_t mix(std::uint64_t v) {
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    v *= 0xc4ceb9fe1a85ec53ULL;
    v ^= v >> 33;
    return static_cast<std::uint32_t>(v);
}

std::uint8_t gray(const CellLabel& l) {
    switch (l.kind) {
        case CellKind::Table: return 255;
        case CellKind::Finite: return 0;
        case CellKind::Budget: return 24;
        case CellKind::Periodic: return static_cast<std::uint8_t>(60 + mix(l.value) % 180);
    }
    return 0;
}

std::string color(const CellLabel& l) {
    char buf[8];
    switch (l.kind) {
        case CellKind::Table: return "#ffffff";
        case CellKind::Finite: return "#000000";
        case CellKind::Budget: return "#303030";
        case CellKind::Periodic: {
            const std::uint32_t h = mix(l.value);
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 64 + (h & 0xff) % 192, 64 + ((h >> 8) & 0xff) % 192,
                          64 + ((h >> 16) & 0xff) % 192);
            return buf;
        }
    }
    return "#000000";
}

}  // namespace

void write_pgm(std::ostream& os, const ScanGrid& g) {
    os << "P5\n" << g.width << ' ' << g.height << "\n255\n";
    for (const auto& l : g.labels) os.put(static_cast<char>(gray(l)));
}

void write_scan_svg(std::ostream& os, const ScanGrid& g, const BilliardTable& t) {
    const QuadExt cw = (g.window.x1 - g.window.x0) / QuadExt(g.width);
    const QuadExt ch = (g.window.y1 - g.window.y0) / QuadExt(g.height);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << g.width << ' ' << g.height << "\" width=\""
       << g.width << "\" height=\"" << g.height << "\" shape-rendering=\"crispEdges\">\n";
    os << "<!-- window x0=" << g.window.x0.str() << " y0=" << g.window.y0.str() << " x1=" << g.window.x1.str()
       << " y1=" << g.window.y1.str() << " cell=" << cw.str() << "x" << ch.str() << " -->\n";
    for (int r = 0; r < g.height; ++r) {
        int c = 0;
        while (c < g.width) {
            int e = c + 1;
            while (e < g.width && g.at(r, e) == g.at(r, c)) ++e;
            os << "<rect x=\"" << c << "\" y=\"" << r << "\" width=\"" << (e - c) << "\" height=\"1\" fill=\""
               << color(g.at(r, c)) << "\"/>\n";
            c = e;
        }
    }
    // table outline in pixel coordinates
    os << "<polygon fill=\"none\" stroke=\"#c00000\" stroke-width=\"0.5\" points=\"";
    for (std::size_t i = 0; i < t.n(); ++i) {
        const Point& v = t.vertices[i];
        const QuadExt px = (v.x - g.window.x0) / cw;
        const QuadExt py = (g.window.y1 - v.y) / ch;
        os << (i ? " " : "") << px.approx(12) << ',' << py.approx(12);
    }
    os << "\"/>\n</svg>\n";
}

}  // namespace obill
