#include "obill/renorm_dodecagon.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace obill::dodecagon {

namespace {

constexpr std::array<int, 5> kDegrees{150, 120, 90, 60, 30};

QuadExt q(const char* text) { return QuadExt::parse(text); }

QuadExt dist2(const Point& a, const Point& b) {
    const Point d = b - a;
    return dot(d, d);
}

// Interior angle at each vertex, in degrees; -1 if not a multiple of 15 we recognise.
int angle_at(const Point& prev, const Point& v, const Point& next) {
    const Point a = prev - v;
    const Point b = next - v;
    const QuadExt d = dot(a, b);
    const QuadExt d2 = d * d;
    const QuadExt ab = dot(a, a) * dot(b, b);
    if (d.is_zero()) return 90;
    const int s = d.sign();
    if (d2 * QuadExt(4) == ab) return s < 0 ? 120 : 60;
    if (d2 * QuadExt(4) == ab * QuadExt(3)) return s < 0 ? 150 : 30;
    if (d2 * QuadExt(2) == ab) return s < 0 ? 135 : 45;
    return -1;
}

std::vector<int> angles(const ConvexPolygon& p) {
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = angle_at(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
    return out;
}

bool equilateral(const ConvexPolygon& p) {
    const auto& v = p.vertices();
    const QuadExt first = dist2(v[0], v[1]);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(dist2(v[i], v[(i + 1) % v.size()]) == first)) return false;
    return true;
}

bool is_kite(const ConvexPolygon& p) {
    if (p.size() != 4) return false;
    const auto& v = p.vertices();
    for (std::size_t s = 0; s < 2; ++s) {
        const Point& a = v[s];
        const Point& b = v[s + 1];
        const Point& c = v[(s + 2) % 4];
        const Point& d = v[(s + 3) % 4];
        if (dist2(a, b) == dist2(b, c) && dist2(c, d) == dist2(d, a)) return true;
    }
    return false;
}

// Index of the map part whose closure contains all of r, or -1.
int containing_part(const PiecewiseIsometry& map, const Region& r) {
    const QuadExt total = area(r);
    for (std::size_t i = 0; i < map.size(); ++i) {
        QuadExt inside;
        for (const auto& p : r) inside += intersect(p, map.parts[i]).area();
        if (inside == total) return static_cast<int>(i);
    }
    return -1;
}

// Periodic components met just outside the edges of `r`, inside `within`.
std::vector<ConvexPolygon> adjacent_components(const BilliardTable& t, const Region& r, const Region& within) {
    static const std::array<const char*, 7> kFractions{"1/2", "1/4", "3/4", "1/8", "7/8", "1/32", "31/32"};
    static const std::array<const char*, 4> kOffsets{"1/1000", "1/200", "1/50", "1/10"};
    std::vector<ConvexPolygon> found;
    for (const auto& loop : union_outline(r)) {
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const Point& a = loop[i];
            const Point e = loop[(i + 1) % loop.size()] - a;
            const Point outward{e.y, -e.x};
            for (const char* f : kFractions) {
                for (const char* o : kOffsets) {
                    const Point m = a + q(f) * e + q(o) * outward;
                    if (!region_interior(within, m) || region_contains(r, m)) continue;
                    try {
                        const ConvexPolygon c = component_of(t, m, 20000).region.canonical();
                        if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
                    } catch (const std::exception&) {
                    }
                }
            }
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const ConvexPolygon& x, const ConvexPolygon& y) { return y.area() < x.area(); });
    return found;
}

void locate_x(RocketSystem& sys) {
    Region y = sys.small_middle;
    Isometry acc;
    for (unsigned a = 1; a <= 12; ++a) {
        const int part = containing_part(sys.map, y);
        if (part < 0) break;
        const Isometry& m = sys.map.maps[static_cast<std::size_t>(part)];
        y = obill::apply(m, y);
        acc = m.compose(acc);
        if (!region_covers(sys.middle, y)) continue;
        const auto around = adjacent_components(sys.table, y, sys.middle);
        if (around.size() < 3) continue;
        sys.x_rocket = y;
        sys.x_steps = a;
        sys.gamma_x = acc.compose(Similarity::homothety(sys.apex, sys.lambda));
        for (std::size_t k = 0; k < 3; ++k) sys.x_neighbors[k] = around[k];
        if (!same_set(obill::apply(sys.gamma_x, sys.middle), sys.x_rocket))
            throw ValidationError("X", "gamma_x does not map the middle rocket onto X");
        return;
    }
    throw ValidationError("X", "no rigid image of the small middle rocket is surrounded by three components");
}

ConjugacyReport run_conjugacy(const RocketSystem& sys, const Similarity& g, const Region& image, std::size_t samples,
                              std::uint64_t seed, int workers) {
    ConjugacyReport rep;

    // Piece level: every middle piece maps onto an image piece with the conjugated motion.
    const ReturnPartition mid = rocket_partition(sys, Target::Middle);
    const auto budget = 2 * expected_table(Target::SmallMiddle).back().return_time;
    const ReturnPartition img = return_partition(sys.map, image, budget);
    const Similarity ginv = g.inverse();
    rep.partition_match = img.unresolved.empty() && mid.pieces.size() == img.pieces.size();
    std::vector<bool> used(img.pieces.size(), false);
    for (const auto& p : mid.pieces) {
        if (!rep.partition_match) break;
        const Region target = obill::apply(g, p.parts);
        const Similarity motion = g.compose(p.motion).compose(ginv);
        bool hit = false;
        for (std::size_t i = 0; i < img.pieces.size() && !hit; ++i) {
            if (used[i] || !(img.pieces[i].motion == motion) || !same_set(img.pieces[i].parts, target)) continue;
            used[i] = hit = true;
        }
        if (!hit) {
            rep.partition_match = false;
            rep.failures.push_back("no image piece for middle piece of return time " + std::to_string(p.return_time));
        }
    }
    std::vector<TableEntry> times;
    for (const auto& p : img.pieces) times.push_back({p.side_count(), p.return_time});
    std::stable_sort(times.begin(), times.end(), [](const TableEntry& a, const TableEntry& b) {
        return a.return_time != b.return_time ? a.return_time < b.return_time : a.sides < b.sides;
    });
    rep.times_match = times == expected_table(Target::SmallMiddle);
    if (!rep.times_match) rep.failures.push_back("image partition differs from the small middle table");

    // Point level on random exact samples.
    std::mt19937_64 rng(seed);
    const std::size_t attempts = samples * 2;
    std::vector<Point> points;
    points.reserve(attempts);
    for (std::size_t i = 0; i < attempts; ++i) {
        const auto& part = sys.middle[rng() % sys.middle.size()];
        points.push_back(interior_sample(part, rng));
    }
    enum class Status { Excluded, Ok, Defect };
    std::vector<Status> status(attempts, Status::Excluded);
    std::vector<std::string> notes(attempts);
    parallel_for(attempts, workers, [&](std::size_t i) {
        const Point& x = points[i];
        std::pair<Point, std::uint64_t> tx;
        try {
            tx = first_return(sys, sys.middle, x, 1000);
        } catch (const std::domain_error&) {
            return;
        }
        try {
            const auto ty = first_return(sys, image, g.apply(x), 100000);
            if (ty.first == g.apply(tx.first)) {
                status[i] = Status::Ok;
                return;
            }
            notes[i] = "identity fails at " + x.str();
        } catch (const std::domain_error& e) {
            notes[i] = std::string("image orbit undefined at ") + x.str() + ": " + e.what();
        }
        status[i] = Status::Defect;
    });
    for (std::size_t i = 0; i < attempts && rep.samples < samples; ++i) {
        if (status[i] == Status::Excluded) {
            ++rep.excluded;
            continue;
        }
        ++rep.samples;
        if (status[i] == Status::Defect) {
            ++rep.defects;
            rep.failures.push_back(notes[i]);
        }
    }
    return rep;
}

// Sample strictly inside c, off its center (which may lie on a part boundary).
Point offset_sample(const ConvexPolygon& c) {
    return QuadExt(Rational(3, 4)) * c.centroid() +
           QuadExt(Rational(1, 4)) * midpoint(c.vertices()[0], c.vertices()[1]);
}

}  // namespace

std::string to_string(Target t) {
    switch (t) {
        case Target::Small: return "small";
        case Target::SmallSmall: return "small-small";
        case Target::Middle: return "middle";
        case Target::SmallMiddle: return "small-middle";
        case Target::Airplane: return "airplane";
        case Target::SmallAirplane: return "small-airplane";
        case Target::Zone0: return "zone0";
        case Target::MiddleZone0: return "middle-zone0";
    }
    return "?";
}

Target parse_target(std::string_view name) {
    for (Target t : kAllTargets)
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown rocket target '" + std::string(name) + "'");
}

const Region& RocketSystem::target(Target t) const {
    switch (t) {
        case Target::Small: return small;
        case Target::SmallSmall: return small_small;
        case Target::Middle: return middle;
        case Target::SmallMiddle: return small_middle;
        case Target::Airplane: return airplane;
        case Target::SmallAirplane: return small_airplane;
        case Target::Zone0: return zone0;
        case Target::MiddleZone0: return middle_zone0;
    }
    throw std::invalid_argument("unknown rocket target");
}

RocketSystem build_rocket_system() {
    RocketSystem sys;
    sys.table = make_table(TableKind::Dodecagon);
    sys.apex = sys.table.vertex(0);
    const InvariantDomain dom = first_invariant_domain(sys.table);
    sys.rocket = dom.region;

    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < dom.map.size(); ++i) by_label[dom.map.labels[i]].push_back(i);
    if (by_label.size() != 5)
        throw ValidationError("zone count", "expected 5 zones, found " + std::to_string(by_label.size()));

    std::vector<std::pair<int, int>> order;  // (angle, label)
    for (const auto& [label, idx] : by_label) {
        const auto deg = dom.map.maps[idx.front()].angle_degrees();
        if (!deg) throw ValidationError("rotation angles", "zone motion is not a rotation by a multiple of 15");
        order.emplace_back(*deg, label);
    }
    std::sort(order.rbegin(), order.rend());
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& [deg, label] = order[k];
        if (deg != kDegrees[k])
            throw ValidationError("rotation angles",
                                  "zone " + std::to_string(k) + " rotates by " + std::to_string(deg) + " degrees");
        Zone& z = sys.zones[k];
        z.index = static_cast<int>(k);
        z.degrees = deg;
        z.motion = dom.map.maps[by_label[label].front()];
        Region parts;
        for (std::size_t i : by_label[label]) {
            if (!(dom.map.maps[i] == z.motion)) throw ValidationError("zone motion", "one zone, two motions");
            parts.push_back(dom.map.parts[i]);
        }
        z.region = merge_convex(std::move(parts));
        const auto loops = union_outline(z.region);
        if (loops.size() != 1) throw ValidationError("zone shape", "zone " + std::to_string(k) + " is not simply connected");
        z.outline = loops.front();
        const auto c = z.motion.fixed_point();
        if (!c) throw ValidationError("fixed point", "zone " + std::to_string(k) + " has no rotation center");
        z.center = *c;
        for (const auto& part : z.region) sys.map.add(part, z.motion, z.index);
    }
    QuadExt total;
    for (const auto& z : sys.zones) total += area(z.region);
    if (!(total == area(sys.rocket))) throw ValidationError("tiling", "zones do not tile the rocket");
    for (std::size_t k = 0; k < 4; ++k)
        if (!sys.zones[k].convex()) throw ValidationError("zone shape", "zone " + std::to_string(k) + " is not convex");
    if (sys.zones[4].convex()) throw ValidationError("zone shape", "zone 4 is convex");
    {
        const ConvexPolygon& z0 = sys.zones[0].region.front();
        const auto& v = z0.vertices();
        if (z0.size() != 3 ||
            !(dist2(v[0], v[1]) == dist2(v[0], v[2]) || dist2(v[1], v[0]) == dist2(v[1], v[2]) ||
              dist2(v[2], v[0]) == dist2(v[2], v[1])))
            throw ValidationError("zone shape", "zone 0 is not an isosceles triangle");
    }
    for (std::size_t k = 1; k <= 3; ++k)
        if (!is_kite(sys.zones[k].region.front()))
            throw ValidationError("zone shape", "zone " + std::to_string(k) + " is not a kite");

    const QuadExt unit = QuadExt(2) - QuadExt::sqrt(3);
    sys.lambda = q("7-4*sqrt3");
    if (!(sys.lambda == unit * unit) || !(sys.lambda * q("7+4*sqrt3") == QuadExt(1)))
        throw ValidationError("lambda", "7-4*sqrt3 is not the squared unit");
    sys.mu = q("-3+2*sqrt3");
    sys.gamma = Similarity::homothety(sys.apex, sys.lambda);
    const Similarity h_mu = Similarity::homothety(sys.apex, sys.mu);

    sys.small = obill::apply(sys.gamma, sys.rocket);
    sys.small_small = obill::apply(sys.gamma, sys.small);
    sys.middle = obill::apply(h_mu, sys.rocket);
    sys.small_middle = obill::apply(sys.gamma, sys.middle);
    sys.zone0 = sys.zones[0].region;
    sys.middle_zone0 = obill::apply(h_mu, sys.zone0);

    // Airplane: the apex joined to the three upper vertices of the zone 1 figure.
    const ConvexPolygon fig1 = invariant_figure(sys.zones[1].region.front(), sys.zones[1].motion);
    std::vector<Point> top = fig1.vertices();
    if (top.size() < 3) throw ValidationError("airplane", "zone 1 figure is degenerate");
    std::sort(top.begin(), top.end(), [](const Point& a, const Point& b) { return b.y < a.y; });
    top.resize(3);
    std::sort(top.begin(), top.end(), lex_less);
    sys.airplane = {ConvexPolygon({sys.apex, top[0], top[1]}), ConvexPolygon({sys.apex, top[1], top[2]})};
    if (sys.airplane[0].is_degenerate() || sys.airplane[1].is_degenerate())
        throw ValidationError("airplane", "airplane triangles are degenerate");
    sys.small_airplane = obill::apply(sys.gamma, sys.airplane);

    for (Target t : kAllTargets)
        if (!region_covers(sys.rocket, sys.target(t)))
            throw ValidationError("sub-rockets", to_string(t) + " leaves the rocket");
    if (!region_covers(sys.middle, sys.small_middle))
        throw ValidationError("sub-rockets", "small middle rocket leaves the middle rocket");

    locate_x(sys);
    return sys;
}

std::array<InvariantFigure, 4> zone_invariant_figures(const RocketSystem& sys) {
    std::array<InvariantFigure, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const Zone& z = sys.zones[k];
        InvariantFigure& f = out[k];
        f.zone = z.index;
        f.polygon = invariant_figure(z.region.front(), z.motion);
        if (f.polygon.is_degenerate())
            throw ValidationError("invariant figure", "zone " + std::to_string(k) + " figure is empty");
        if (!(z.motion.apply(f.polygon).canonical() == f.polygon.canonical()))
            throw ValidationError("invariant figure", "zone " + std::to_string(k) + " figure is not invariant");
        f.order = isometry_order(z.motion);
        f.equilateral = equilateral(f.polygon);
        f.angles = angles(f.polygon);
        f.regular = f.equilateral && std::all_of(f.angles.begin(), f.angles.end(),
                                                 [&](int a) { return a == f.angles.front(); });
    }
    auto angle_set = [](const InvariantFigure& f) {
        std::vector<int> a = f.angles;
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    };
    for (std::size_t k : {0u, 3u})
        if (out[k].polygon.size() != 12 || !out[k].regular)
            throw ValidationError("invariant figure", "zone " + std::to_string(k) + " figure is not a regular 12-gon");
    if (out[1].polygon.size() != 6 || !out[1].equilateral || angle_set(out[1]) != std::vector<int>{90, 150})
        throw ValidationError("invariant figure", "zone 1 figure is not an equilateral 90/150 hexagon");
    if (out[2].polygon.size() != 8 || !out[2].equilateral || angle_set(out[2]) != std::vector<int>{120, 150})
        throw ValidationError("invariant figure", "zone 2 figure is not an equilateral 120/150 octagon");
    return out;
}

const std::vector<TableEntry>& expected_table(Target t) {
    using V = std::vector<TableEntry>;
    static const V small{{4, 2}, {3, 3}, {3, 11}, {4, 20}, {3, 35}, {6, 37}, {4, 63}, {4, 185}, {4, 269}, {3, 479}};
    static const V small_small{{4, 70},   {3, 105},  {3, 499},  {4, 754},  {6, 961},
                               {3, 1179}, {4, 1423}, {4, 5009}, {4, 7533}, {3, 13843}};
    static const V middle{{3, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 10}, {3, 25}, {4, 27}, {4, 53}};
    static const V small_middle{{4, 20}, {3, 35}, {4, 37}, {4, 63}, {4, 318}, {4, 525}, {3, 743}, {4, 987}};
    static const V airplane{{3, 1}, {3, 9}, {4, 18}, {3, 33}, {6, 35}, {4, 61}, {4, 183}, {4, 267}, {3, 477}};
    static const V small_airplane{{3, 35},   {3, 429},  {4, 684},  {6, 891}, {3, 1109},
                                  {4, 1353}, {4, 4939}, {4, 7463}, {3, 13773}};
    static const V zone0{{4, 1}, {3, 10}, {4, 19}, {3, 34}, {6, 36}, {4, 62}, {4, 184}, {4, 268}, {3, 478}};
    static const V middle_zone0{{3, 18}, {4, 20}, {4, 24}, {3, 35},  {5, 37},
                                {5, 48}, {4, 63}, {4, 196}, {4, 280}, {3, 490}};
    switch (t) {
        case Target::Small: return small;
        case Target::SmallSmall: return small_small;
        case Target::Middle: return middle;
        case Target::SmallMiddle: return small_middle;
        case Target::Airplane: return airplane;
        case Target::SmallAirplane: return small_airplane;
        case Target::Zone0: return zone0;
        case Target::MiddleZone0: return middle_zone0;
    }
    throw std::invalid_argument("unknown rocket target");
}

ReturnPartition rocket_partition(const RocketSystem& sys, Target t) {
    const std::uint64_t budget = 2 * expected_table(t).back().return_time;
    ReturnPartition rp = return_partition(sys.map, sys.target(t), budget);
    if (!rp.unresolved.empty())
        throw std::runtime_error(to_string(t) + ": " + std::to_string(rp.unresolved.size()) +
                                 " parts unresolved after " + std::to_string(budget) + " steps");
    if (!rp.lost_area.is_zero()) throw std::runtime_error(to_string(t) + ": area left the rocket");
    std::stable_sort(rp.pieces.begin(), rp.pieces.end(), [](const ReturnPiece& a, const ReturnPiece& b) {
        return a.return_time != b.return_time ? a.return_time < b.return_time : a.side_count() < b.side_count();
    });
    return rp;
}

std::vector<TableEntry> rocket_return_table(const RocketSystem& sys, Target t) {
    std::vector<TableEntry> out;
    for (const auto& p : rocket_partition(sys, t).pieces) out.push_back({p.side_count(), p.return_time});
    return out;
}

std::pair<Point, std::uint64_t> first_return(const RocketSystem& sys, const Region& base, const Point& x,
                                             std::uint64_t budget) {
    Point y = x;
    for (std::uint64_t k = 1; k <= budget; ++k) {
        const int i = sys.map.locate(y);
        if (i < 0) throw std::domain_error("orbit of " + x.str() + " meets a zone boundary");
        y = sys.map.maps[static_cast<std::size_t>(i)].apply(y);
        if (region_interior(base, y)) return {y, k};
        if (region_contains(base, y)) throw std::domain_error("orbit of " + x.str() + " meets the base boundary");
    }
    throw std::domain_error("orbit of " + x.str() + " does not return within the budget");
}

ConjugacyReport verify_scaling_conjugacy(const RocketSystem& sys, std::size_t samples, std::uint64_t seed,
                                         int workers) {
    return run_conjugacy(sys, sys.gamma, sys.small_middle, samples, seed, workers);
}

ConjugacyReport verify_hypothesis1(const RocketSystem& sys, std::size_t samples, std::uint64_t seed, int workers) {
    return run_conjugacy(sys, sys.gamma_x, sys.x_rocket, samples, seed, workers);
}

GrowthWitness period_growth_witness(const RocketSystem& sys, int n_max) {
    if (n_max < 3) throw std::invalid_argument("period_growth_witness: n_max must be at least 3");
    GrowthWitness w;
    w.limit = *sys.gamma_x.fixed_point();
    std::vector<ConvexPolygon> regions(sys.x_neighbors.begin(), sys.x_neighbors.end());
    for (int n = 3; n <= n_max; ++n) regions.push_back(sys.gamma_x.apply(regions[static_cast<std::size_t>(n - 3)]));

    ConvexPolygon box = ConvexPolygon::hull([&] {
        std::vector<Point> pts;
        for (const auto& p : sys.middle) pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
        return pts;
    }());
    for (int k = 0; 3 * k <= n_max; ++k) {
        if (k > 0) {
            ConvexPolygon next = sys.gamma_x.apply(box);
            if (!contains(box, next) || !(next.area() < box.area()))
                throw ValidationError("growth witness", "boxes are not nested");
            box = std::move(next);
        }
        if (box.locate(w.limit) == Location::Exterior)
            throw ValidationError("growth witness", "limit point outside a box");
        w.boxes.push_back(box);
    }

    for (std::size_t n = 0; n < regions.size(); ++n) {
        const ConvexPolygon& c = regions[n];
        if (!contains(w.boxes[n / 3], c))
            throw ValidationError("growth witness", "C_" + std::to_string(n) + " leaves its box");
        const Point s = offset_sample(c);
        GrowthLink link;
        link.region = c;
        Point x = s;
        Isometry acc;
        do {
            if (region_interior(sys.middle, x)) ++link.middle_period;
            const int i = sys.map.locate(x);
            if (i < 0) throw ValidationError("growth witness", "orbit of C_" + std::to_string(n) + " meets a boundary");
            const Isometry& m = sys.map.maps[static_cast<std::size_t>(i)];
            x = m.apply(x);
            acc = m.compose(acc);
            ++link.folded_period;
        } while (!(x == s) && link.folded_period < 100'000'000);
        if (!(x == s)) throw ValidationError("growth witness", "C_" + std::to_string(n) + " is not periodic");
        if (!(acc.apply(c).canonical() == c.canonical()))
            throw ValidationError("growth witness", "C_" + std::to_string(n) + " is not invariant under its period");
        const Component comp = component_of(sys.table, s, 100'000'000);
        if (!(comp.region.canonical() == c.canonical()))
            throw ValidationError("growth witness", "C_" + std::to_string(n) + " is not a maximal component");
        link.period = comp.period;
        w.chain.push_back(std::move(link));
    }
    for (std::size_t n = 0; n + 3 < w.chain.size(); ++n) {
        const auto& a = w.chain[n];
        const auto& b = w.chain[n + 3];
        if (b.middle_period < 2 * a.middle_period || b.folded_period < 2 * a.folded_period)
            throw ValidationError("growth witness", "per(C_" + std::to_string(n + 3) + ") < 2 per(C_" +
                                                        std::to_string(n) + ")");
    }
    return w;
}

}  // namespace obill::dodecagon
