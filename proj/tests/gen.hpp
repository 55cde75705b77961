#pragma once

// Hand-rolled random generators for property tests.

#include "obill/billiard.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace obill {

// Readable parameter names in test listings.
inline void PrintTo(TableKind k, std::ostream* os) { *os << to_string(k); }

}  // namespace obill

namespace obill::gen {

using Rng = std::mt19937_64;

inline std::int64_t integer(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Mostly small values; one in eight has numerator and denominator near 2^62
// so the multiprecision path is exercised.
inline Rational rational(Rng& rng) {
    if (integer(rng, 0, 7) == 0) {
        const std::int64_t big = (std::int64_t{1} << 62) - integer(rng, 1, 1000);
        return Rational(integer(rng, 0, 1) ? big : -big, big - integer(rng, 1, 1000));
    }
    return Rational(integer(rng, -200, 200), integer(rng, 1, 60));
}

inline QuadExt quad(Rng& rng, int d) {
    if (d == 1) return QuadExt(rational(rng));
    return QuadExt(rational(rng), rational(rng), d);
}

inline QuadExt nonzero_quad(Rng& rng, int d) {
    for (;;) {
        QuadExt q = quad(rng, d);
        if (!q.is_zero()) return q;
    }
}

// Small-denominator coordinate so geometry stays cheap.
inline QuadExt coord(Rng& rng, int d) {
    QuadExt a(Rational(integer(rng, -40, 40), integer(rng, 1, 12)));
    if (d == 1) return a;
    return a + QuadExt(Rational(0), Rational(integer(rng, -20, 20), integer(rng, 1, 12)), d);
}

inline Point point(Rng& rng, int d) { return {coord(rng, d), coord(rng, d)}; }

inline ConvexPolygon polygon(Rng& rng, int d) {
    for (;;) {
        std::vector<Point> pts;
        const auto n = integer(rng, 3, 8);
        for (std::int64_t i = 0; i < n; ++i) pts.push_back(point(rng, d));
        ConvexPolygon p = ConvexPolygon::hull(pts);
        if (!p.is_degenerate()) return p;
    }
}

// Rotation by an angle representable in field d, about a random center.
inline Similarity isometry(Rng& rng, int d) {
    const int step = d == 2 ? 45 : d == 3 ? 30 : 90;
    const int deg = static_cast<int>(integer(rng, 0, 360 / step - 1)) * step;
    return Similarity::rotation(deg, point(rng, d));
}

}  // namespace obill::gen
