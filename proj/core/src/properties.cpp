#include "obill/properties.hpp"

#include <algorithm>
#include <optional>

namespace obill {

namespace {

constexpr std::size_t kAttemptFactor = 30;

Rational random_rational(std::mt19937_64& rng, int radius) {
    const long den = static_cast<long>(rng() % 61) + 3;
    const long span = 2L * radius * den;
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(span + 1)) - radius * den;
    return Rational(num, den);
}

// Random exterior point whose orbit is periodic within the budget, with its component.
std::optional<Component> random_component(const BilliardTable& t, std::mt19937_64& rng, std::uint64_t budget,
                                          Point& seed) {
    seed = random_exterior_point(t, rng);
    try {
        return component_of(t, seed, budget);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

template <class Fn>
PropertyCheck run_check(std::string name, const SampleOptions& opt, Fn&& attempt) {
    PropertyCheck c;
    c.name = std::move(name);
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = 0; c.samples < opt.samples && i < opt.samples * kAttemptFactor; ++i)
        if (attempt(rng, c)) ++c.samples;
    return c;
}

}  // namespace

Point random_exterior_point(const BilliardTable& t, std::mt19937_64& rng, int radius) {
    const ConvexPolygon poly = t.polygon();
    for (;;) {
        Point p{QuadExt(random_rational(rng, radius)), QuadExt(random_rational(rng, radius))};
        if (poly.locate(p) == Location::Exterior) return p;
    }
}

PropertyCheck check_type_invariance(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("type invariance", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        const Point x = random_exterior_point(t, rng);
        const OrbitResult r = orbit(t, x, opt.budget);
        if (r.outcome == Outcome::BudgetExceeded || (r.outcome == Outcome::Finite && r.steps == 0)) return false;
        const OrbitResult s = orbit(t, step(t, x), opt.budget);
        const bool ok = r.outcome == Outcome::Periodic ? s.outcome == Outcome::Periodic && s.steps == r.steps
                                                       : s.outcome == Outcome::Finite && s.steps + 1 == r.steps;
        if (!ok) c.failures.push_back("type changes after one step at " + x.str());
        return true;
    });
}

PropertyCheck check_periodic_neighborhood(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("periodic neighborhood", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        Point x;
        const auto comp = random_component(t, rng, opt.budget, x);
        if (!comp) return false;
        for (int k = 0; k < 9; ++k) {
            const Point y = interior_sample(comp->region, rng);
            const OrbitResult r = orbit(t, y, comp->period);
            const bool ok = r.outcome == Outcome::Periodic &&
                            (r.steps == comp->period || (comp->center_special && 2 * r.steps == comp->period)) &&
                            std::equal(r.itinerary.begin(), r.itinerary.end(), comp->itinerary.begin());
            if (!ok) {
                c.failures.push_back("sample " + y.str() + " differs from its component");
                break;
            }
        }
        return true;
    });
}

PropertyCheck check_even_period(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("even period", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        Point x;
        const auto comp = random_component(t, rng, opt.budget, x);
        if (!comp) return false;
        if (comp->period % 2 != 0) c.failures.push_back("odd component period at " + x.str());
        const OrbitResult r = orbit(t, comp->region.centroid(), comp->period);
        if (r.outcome != Outcome::Periodic) {
            c.failures.push_back("center of the component at " + x.str() + " is not periodic");
        } else if (r.steps != comp->period) {
            if (2 * r.steps != comp->period || r.steps % 2 == 0 || !comp->center_special)
                c.failures.push_back("center period " + std::to_string(r.steps) + " at " + x.str());
        } else if (comp->center_special) {
            c.failures.push_back("special center has the full period at " + x.str());
        }
        return true;
    });
}

PropertyCheck check_two_step_translation(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("two-step translation", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        const Point x = random_exterior_point(t, rng);
        const int i1 = tangent_vertex(t, x);
        if (i1 == kUndefinedOnRay) return false;
        const Point x1 = step(t, x);
        const int i2 = tangent_vertex(t, x1);
        if (i2 == kUndefinedOnRay) return false;
        const Point v = step(t, x1) - x;
        const Point side = t.vertex(static_cast<std::size_t>(i2)) - t.vertex(static_cast<std::size_t>(i1));
        if (!(v == QuadExt(2) * side) || i1 == i2) c.failures.push_back("T^2 is not twice a chord at " + x.str());
        const QuadExt delta(Rational(1, 4096));
        for (int k = 0; k < 4; ++k) {
            const Point y = x + Point{delta * QuadExt(static_cast<long>(rng() % 5) - 2),
                                      delta * QuadExt(static_cast<long>(rng() % 5) - 2)};
            if (t.polygon().locate(y) != Location::Exterior || tangent_vertex(t, y) != i1) continue;
            const Point y1 = step(t, y);
            if (tangent_vertex(t, y1) != i2) continue;
            if (!(step(t, y1) - y == v)) c.failures.push_back("translation differs near " + x.str());
        }
        return true;
    });
}

PropertyCheck check_parallel_sides(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("parallel sides", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        Point x;
        const auto comp = random_component(t, rng, opt.budget, x);
        if (!comp) return false;
        const auto& v = comp->region.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point e = v[(i + 1) % v.size()] - v[i];
            bool parallel = false;
            for (std::size_t j = 0; j < t.n() && !parallel; ++j)
                parallel = cross(e, t.vertex(j + 1) - t.vertex(j)).is_zero();
            if (!parallel) {
                c.failures.push_back("component side not parallel to the table at " + x.str());
                break;
            }
        }
        return true;
    });
}

PropertyCheck check_nondegenerate(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("nondegenerate components", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        Point x;
        const auto comp = random_component(t, rng, opt.budget, x);
        if (!comp) return false;
        if (comp->region.is_degenerate() || comp->region.area().sign() <= 0)
            c.failures.push_back("degenerate component at " + x.str());
        return true;
    });
}

PropertyCheck check_step_inverse(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("step inverse", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        const Point x = random_exterior_point(t, rng);
        if (tangent_vertex(t, x) == kUndefinedOnRay || back_tangent_vertex(t, x) == kUndefinedOnRay) return false;
        if (!(step_back(t, step(t, x)) == x) || !(step(t, step_back(t, x)) == x))
            c.failures.push_back("step and step_back disagree at " + x.str());
        return true;
    });
}

PropertyCheck check_rotation_equivariance(const BilliardTable& t, const SampleOptions& opt) {
    return run_check("rotation equivariance", opt, [&](std::mt19937_64& rng, PropertyCheck& c) {
        if (!t.regular) return false;
        const Point x = random_exterior_point(t, rng);
        const OrbitResult r = orbit(t, x, opt.budget);
        if (r.outcome == Outcome::BudgetExceeded) return false;
        const OrbitResult s = orbit(t, t.symmetry(1).apply(x), opt.budget);
        bool ok = s.outcome == r.outcome && s.steps == r.steps && s.itinerary.size() == r.itinerary.size();
        const int n = static_cast<int>(t.n());
        for (std::size_t k = 0; ok && k < r.itinerary.size(); ++k) ok = s.itinerary[k] == (r.itinerary[k] + 1) % n;
        if (!ok) c.failures.push_back("rotated orbit differs at " + x.str());
        return true;
    });
}

std::vector<PropertyCheck> invariant_suite(const BilliardTable& t, const SampleOptions& opt) {
    std::vector<PropertyCheck> out{
        check_type_invariance(t, opt),    check_periodic_neighborhood(t, opt), check_even_period(t, opt),
        check_two_step_translation(t, opt), check_parallel_sides(t, opt),    check_step_inverse(t, opt),
    };
    if (!t.regular) out.push_back(check_nondegenerate(t, opt));
    else out.push_back(check_rotation_equivariance(t, opt));
    return out;
}

PropertyCheck check_square_rings(int d_max, std::size_t per_cell, std::uint64_t seed) {
    const BilliardTable t = make_table(TableKind::Square);
    PropertyCheck c;
    c.name = "square rings";
    std::mt19937_64 rng(seed);
    auto unit = [&] {
        const long den = static_cast<long>(rng() % 997) + 2;
        return Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1)) + 1, den);
    };
    for (int d = 1; d <= d_max; ++d) {
        std::size_t cells = 0;
        for (int i = -d; i <= d; ++i) {
            for (int j = -d; j <= d; ++j) {
                const int dist = std::abs(i) + std::abs(j);
                if (dist != d) continue;
                ++cells;
                for (std::size_t k = 0; k < per_cell; ++k) {
                    const Point p{QuadExt(Rational(i) + unit()), QuadExt(Rational(j) + unit())};
                    const OrbitResult r = orbit(t, p, 16 * static_cast<std::uint64_t>(d));
                    ++c.samples;
                    if (r.outcome != Outcome::Periodic || r.steps != 4 * static_cast<std::uint64_t>(d))
                        c.failures.push_back("cell (" + std::to_string(i) + "," + std::to_string(j) + ") sample " +
                                             p.str() + " is not of period " + std::to_string(4 * d));
                }
            }
        }
        if (cells != 4 * static_cast<std::size_t>(d))
            c.failures.push_back("ring " + std::to_string(d) + " has " + std::to_string(cells) + " cells");
        for (int i = -d - 1; i <= d + 1; ++i) {
            for (int j = -d - 1; j <= d + 1; ++j) {
                const Point p{QuadExt(i), QuadExt(j)};
                if (t.polygon().locate(p) != Location::Exterior) continue;
                if (orbit(t, p, 1000).outcome != Outcome::Finite)
                    c.failures.push_back("lattice point " + p.str() + " is not finite");
            }
        }
    }
    return c;
}

}  // namespace obill
