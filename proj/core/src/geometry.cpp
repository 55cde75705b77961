#include "obill/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace obill {

int compare(const Point& p, const Point& q) {
    const int cx = compare(p.x, q.x);
    return cx != 0 ? cx : compare(p.y, q.y);
}

bool lex_less(const Point& p, const Point& q) { return compare(p, q) < 0; }

QuadExt cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
QuadExt dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

int orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

Point midpoint(const Point& p, const Point& q) {
    const QuadExt half(Rational(1, 2));
    return {half * (p.x + q.x), half * (p.y + q.y)};
}

HalfPlane HalfPlane::left_of(const Point& p, const Point& q) {
    QuadExt dx = q.x - p.x;
    QuadExt dy = q.y - p.y;
    return {-dy, dx, dy * p.x - dx * p.y};
}

namespace {

std::vector<Point> normalize(std::vector<Point> v) {
    std::vector<Point> u;
    for (auto& p : v)
        if (u.empty() || !(u.back() == p)) u.push_back(std::move(p));
    while (u.size() > 1 && u.front() == u.back()) u.pop_back();
    if (u.size() <= 2) return u;

    QuadExt a2;
    for (std::size_t i = 0; i < u.size(); ++i) a2 += cross(u[i], u[(i + 1) % u.size()]);
    if (a2.sign() == 0) {
        auto [lo, hi] = std::minmax_element(u.begin(), u.end(), lex_less);
        if (*lo == *hi) return {*lo};
        return {*lo, *hi};
    }
    if (a2.sign() < 0) std::reverse(u.begin(), u.end());

    bool changed = true;
    while (changed && u.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const Point& prev = u[(i + u.size() - 1) % u.size()];
            const Point& next = u[(i + 1) % u.size()];
            if (orient(prev, u[i], next) == 0 || u[i] == next) {
                u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return u;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : v_(normalize(std::move(vertices))) {}

ConvexPolygon ConvexPolygon::box(const QuadExt& x0, const QuadExt& y0, const QuadExt& x1, const QuadExt& y1) {
    return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon ConvexPolygon::hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return ConvexPolygon(std::move(pts));
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return ConvexPolygon(std::move(h));
}

QuadExt ConvexPolygon::area2() const {
    QuadExt a;
    if (v_.size() < 3) return a;
    for (std::size_t i = 0; i < v_.size(); ++i) a += cross(v_[i], v_[(i + 1) % v_.size()]);
    return a;
}

QuadExt ConvexPolygon::area() const { return area2() * QuadExt(Rational(1, 2)); }

Point ConvexPolygon::centroid() const {
    if (v_.empty()) throw std::logic_error("centroid of empty polygon");
    QuadExt sx, sy;
    for (const auto& p : v_) {
        sx += p.x;
        sy += p.y;
    }
    const QuadExt inv(Rational(1, static_cast<std::int64_t>(v_.size())));
    return {sx * inv, sy * inv};
}

std::vector<HalfPlane> ConvexPolygon::edges() const {
    std::vector<HalfPlane> out;
    if (v_.size() < 3) return out;
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(HalfPlane::left_of(v_[i], v_[(i + 1) % v_.size()]));
    return out;
}

Location ConvexPolygon::locate(const Point& p) const {
    if (v_.empty()) return Location::Exterior;
    if (v_.size() == 1) return p == v_[0] ? Location::Boundary : Location::Exterior;
    if (v_.size() == 2) {
        if (orient(v_[0], v_[1], p) != 0) return Location::Exterior;
        return dot(p - v_[0], p - v_[1]).sign() <= 0 ? Location::Boundary : Location::Exterior;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const int o = orient(v_[i], v_[(i + 1) % v_.size()], p);
        if (o < 0) return Location::Exterior;
        if (o == 0) on_edge = true;
    }
    return on_edge ? Location::Boundary : Location::Interior;
}

ConvexPolygon ConvexPolygon::canonical() const {
    ConvexPolygon r = *this;
    if (r.v_.empty()) return r;
    auto it = std::min_element(r.v_.begin(), r.v_.end(), lex_less);
    std::rotate(r.v_.begin(), it, r.v_.end());
    return r;
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.v_.size() != b.v_.size()) return false;
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return ca.v_ == cb.v_;
}

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h) {
    const auto& v = poly.vertices();
    if (v.empty()) return {};
    std::vector<QuadExt> e;
    e.reserve(v.size());
    bool all_in = true, all_out = true;
    for (const auto& p : v) {
        e.push_back(h.eval(p));
        const int s = e.back().sign();
        if (s < 0) all_in = false;
        if (s >= 0) all_out = false;
    }
    if (all_in) return poly;
    if (all_out) return {};
    std::vector<Point> out;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const int si = e[i].sign();
        const int sj = e[j].sign();
        if (si >= 0) out.push_back(v[i]);
        if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) {
            const QuadExt t = e[i] / (e[i] - e[j]);
            out.push_back(v[i] + t * (v[j] - v[i]));
        }
    }
    return ConvexPolygon(std::move(out));
}

ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (b.is_degenerate()) {
        if (a.is_degenerate()) throw std::invalid_argument("intersect: both operands degenerate");
        return intersect(b, a);
    }
    ConvexPolygon r = a;
    for (const auto& h : b.edges()) {
        r = clip(r, h);
        if (r.empty()) break;
    }
    return r;
}

bool overlaps(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.is_degenerate() || b.is_degenerate()) return false;
    return intersect(a, b).area2().sign() > 0;
}

std::vector<ConvexPolygon> subtract(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (b.is_degenerate()) return {a};
    std::vector<ConvexPolygon> out;
    ConvexPolygon rest = a;
    for (const auto& h : b.edges()) {
        ConvexPolygon outside = clip(rest, h.flipped());
        if (outside.area2().sign() > 0) out.push_back(std::move(outside));
        rest = clip(rest, h);
        if (rest.area2().sign() <= 0) break;
    }
    return out;
}

bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
    for (const auto& p : inner.vertices())
        if (outer.locate(p) == Location::Exterior) return false;
    return true;
}

bool share_edge(const ConvexPolygon& a, const ConvexPolygon& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    if (va.size() < 2 || vb.size() < 2) return false;
    for (std::size_t i = 0; i < va.size(); ++i) {
        const Point& p1 = va[i];
        const Point& p2 = va[(i + 1) % va.size()];
        const Point d = p2 - p1;
        const QuadExt len = dot(d, d);
        for (std::size_t j = 0; j < vb.size(); ++j) {
            const Point& q1 = vb[j];
            const Point& q2 = vb[(j + 1) % vb.size()];
            if (orient(p1, p2, q1) != 0 || orient(p1, p2, q2) != 0) continue;
            QuadExt t1 = dot(q1 - p1, d), t2 = dot(q2 - p1, d);
            if (t2 < t1) std::swap(t1, t2);
            const QuadExt lo = t1 > QuadExt(0) ? t1 : QuadExt(0);
            const QuadExt hi = t2 < len ? t2 : len;
            if (lo < hi) return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> edge_connected_groups(const std::vector<ConvexPolygon>& parts) {
    const std::size_t n = parts.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (find(i) != find(j) && share_edge(parts[i], parts[j])) parent[find(j)] = find(i);
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return groups;
}

std::vector<std::vector<Point>> union_outline(const std::vector<ConvexPolygon>& parts) {
    std::vector<Point> verts;
    for (const auto& p : parts)
        for (const auto& v : p.vertices()) verts.push_back(v);
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    // Directed sub-edges after splitting at every vertex lying on an edge.
    std::map<std::pair<std::size_t, std::size_t>, int> count;
    auto index = [&](const Point& p) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p, lex_less) - verts.begin());
    };
    for (const auto& poly : parts) {
        const auto& v = poly.vertices();
        if (v.size() < 3) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % v.size()];
            const Point d = b - a;
            const QuadExt len = dot(d, d);
            std::vector<std::pair<QuadExt, std::size_t>> stops{{QuadExt(0), index(a)}, {len, index(b)}};
            for (std::size_t k = 0; k < verts.size(); ++k) {
                const Point& q = verts[k];
                if (q == a || q == b || orient(a, b, q) != 0) continue;
                const QuadExt t = dot(q - a, d);
                if (t.sign() > 0 && t < len) stops.emplace_back(t, k);
            }
            std::sort(stops.begin(), stops.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
                const std::size_t from = stops[k].second, to = stops[k + 1].second;
                auto rev = count.find({to, from});
                if (rev != count.end() && rev->second > 0) {
                    if (--rev->second == 0) count.erase(rev);
                } else {
                    ++count[{from, to}];
                }
            }
        }
    }
    std::multimap<std::size_t, std::size_t> next;
    for (const auto& [e, c] : count)
        for (int k = 0; k < c; ++k) next.emplace(e.first, e.second);

    std::vector<std::vector<Point>> loops;
    while (!next.empty()) {
        auto it = next.begin();
        const std::size_t start = it->first;
        std::vector<std::size_t> loop{start};
        std::size_t cur = it->second;
        next.erase(it);
        while (cur != start) {
            loop.push_back(cur);
            auto jt = next.find(cur);
            if (jt == next.end()) throw std::logic_error("union_outline: open boundary chain");
            cur = jt->second;
            next.erase(jt);
        }
        std::vector<Point> pts;
        for (std::size_t i : loop) pts.push_back(verts[i]);
        bool changed = true;
        while (changed && pts.size() > 3) {
            changed = false;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Point& prev = pts[(i + pts.size() - 1) % pts.size()];
                const Point& nxt = pts[(i + 1) % pts.size()];
                if (orient(prev, pts[i], nxt) == 0 && dot(pts[i] - prev, nxt - pts[i]).sign() > 0) {
                    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            }
        }
        auto lo = std::min_element(pts.begin(), pts.end(), lex_less);
        std::rotate(pts.begin(), lo, pts.end());
        loops.push_back(std::move(pts));
    }
    std::sort(loops.begin(), loops.end(), [](const auto& a, const auto& b) { return lex_less(a[0], b[0]); });
    return loops;
}

std::pair<QuadExt, QuadExt> unit_vector(int degrees) {
    int deg = ((degrees % 360) + 360) % 360;
    const int quarter = deg / 90;
    const int rest = deg % 90;
    QuadExt c, s;
    const QuadExt half(Rational(1, 2));
    switch (rest) {
        case 0: c = 1; s = 0; break;
        case 45: c = half * QuadExt::sqrt(2); s = c; break;
        case 30: c = half * QuadExt::sqrt(3); s = half; break;
        case 60: c = half; s = half * QuadExt::sqrt(3); break;
        default:
            throw std::invalid_argument("rotation by " + std::to_string(degrees) + " degrees is not representable");
    }
    for (int q = 0; q < quarter; ++q) {
        QuadExt nc = -s;
        s = c;
        c = nc;
    }
    return {c, s};
}

Similarity Similarity::rotation(int degrees, const Point& center) {
    auto [c, s] = unit_vector(degrees);
    Similarity r(c, s, Point());
    r.t_ = center - r.apply(center);
    return r;
}

Similarity Similarity::point_reflection(const Point& center) {
    return {QuadExt(-1), QuadExt(0), QuadExt(2) * center};
}

Similarity Similarity::homothety(const Point& center, const QuadExt& ratio) {
    return {ratio, QuadExt(0), (QuadExt(1) - ratio) * center};
}

Point Similarity::apply(const Point& p) const {
    if (s_.is_zero()) return {c_ * p.x + t_.x, c_ * p.y + t_.y};
    return {c_ * p.x - s_ * p.y + t_.x, s_ * p.x + c_ * p.y + t_.y};
}

ConvexPolygon Similarity::apply(const ConvexPolygon& poly) const {
    std::vector<Point> v;
    v.reserve(poly.size());
    for (const auto& p : poly.vertices()) v.push_back(apply(p));
    return ConvexPolygon(std::move(v));
}

HalfPlane Similarity::apply(const HalfPlane& h) const {
    const Similarity inv = inverse();
    return {h.a * inv.c_ + h.b * inv.s_, h.b * inv.c_ - h.a * inv.s_, h.a * inv.t_.x + h.b * inv.t_.y + h.c};
}

Similarity Similarity::inverse() const {
    const QuadExt k2 = scale2();
    Similarity r(c_ / k2, -s_ / k2, Point());
    const Point lt = r.apply(t_);
    r.t_ = -lt;
    return r;
}

Similarity Similarity::compose(const Similarity& o) const {
    Similarity r(c_ * o.c_ - s_ * o.s_, s_ * o.c_ + c_ * o.s_, Point());
    r.t_ = apply(o.t_);
    return r;
}

std::optional<int> Similarity::angle_degrees() const {
    if (!is_isometry()) return std::nullopt;
    for (int deg = 0; deg < 360; deg += 15) {
        if (deg % 30 != 0 && deg % 45 != 0) continue;
        auto [c, s] = unit_vector(deg);
        if (c == c_ && s == s_) return deg;
    }
    return std::nullopt;
}

std::optional<Point> Similarity::fixed_point() const {
    const QuadExt alpha = QuadExt(1) - c_;
    const QuadExt beta = -s_;
    const QuadExt n = alpha * alpha + beta * beta;
    if (n.is_zero()) return std::nullopt;
    // p = t * (alpha - i beta) / n as complex numbers
    return Point{(t_.x * alpha + t_.y * beta) / n, (t_.y * alpha - t_.x * beta) / n};
}

}  // namespace obill
