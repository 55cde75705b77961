#include "gen.hpp"
#include "obill/billiard.hpp"
#include "obill/io.hpp"
#include "obill/properties.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace obill;

namespace {

Point pt(const char* s) { return parse_point(s); }

const BilliardTable& square() {
    static const BilliardTable t = make_table(TableKind::Square);
    return t;
}
const BilliardTable& octagon() {
    static const BilliardTable t = make_table(TableKind::Octagon);
    return t;
}

}  // namespace

TEST(Tables, Vertices) {
    EXPECT_EQ(square().vertices, (std::vector<Point>{pt("0,0"), pt("1,0"), pt("1,1"), pt("0,1")}));
    EXPECT_EQ(octagon().n(), 8u);
    EXPECT_EQ(octagon().vertex(0), pt("1,0"));
    EXPECT_EQ(octagon().vertex(1), pt("1/2*sqrt2,1/2*sqrt2"));
    const BilliardTable dodeca = make_table(TableKind::Dodecagon);
    EXPECT_EQ(dodeca.vertex(1), pt("1/2*sqrt3,1/2"));
    EXPECT_EQ(dodeca.field, 3);
    EXPECT_EQ(make_table(TableKind::HexagonLattice).n(), 6u);
    EXPECT_EQ(parse_table_kind("triangle_lattice"), TableKind::TriangleLattice);
    EXPECT_THROW(parse_table_kind("heptagon"), std::invalid_argument);
}

TEST(Billiard, TangentVertexExamples) {
    EXPECT_EQ(tangent_vertex(square(), pt("1/2,3/2")), 3);
    EXPECT_EQ(octagon().vertex(static_cast<std::size_t>(tangent_vertex(octagon(), pt("3,0")))), pt("0,1"));
    EXPECT_EQ(tangent_vertex(square(), pt("0,2")), kUndefinedOnRay);
    EXPECT_THROW(tangent_vertex(square(), pt("1/2,1/2")), OutsideTableError);
    EXPECT_THROW(tangent_vertex(square(), pt("1,1/2")), OutsideTableError);
}

TEST(Billiard, StepExamples) {
    EXPECT_EQ(step(square(), pt("1/2,3/2")), pt("-1/2,1/2"));
    EXPECT_EQ(step(octagon(), pt("3,0")), pt("-3,2"));
    EXPECT_EQ(step_back(square(), step(square(), pt("1/2,3/2"))), pt("1/2,3/2"));
    EXPECT_THROW(step(square(), pt("0,2")), std::domain_error);
}

TEST(Billiard, OrbitExamples) {
    const OrbitResult r = orbit(square(), pt("1/2,3/2"), 100, true);
    EXPECT_EQ(r.outcome, Outcome::Periodic);
    EXPECT_EQ(r.steps, 4u);
    EXPECT_EQ(r.itinerary, (std::vector<int>{3, 0, 1, 2}));
    ASSERT_EQ(r.points.size(), 4u);
    EXPECT_EQ(step(square(), r.points.back()), r.points.front());

    const OrbitResult ring2 = orbit(square(), pt("3/2,3/2"), 100);
    EXPECT_EQ(ring2.outcome, Outcome::Periodic);
    EXPECT_EQ(ring2.steps, 8u);

    const OrbitResult at_ray = orbit(square(), pt("0,2"), 10);
    EXPECT_EQ(at_ray.outcome, Outcome::Finite);
    EXPECT_EQ(at_ray.steps, 0u);
    const OrbitResult one_step = orbit(square(), pt("2,0"), 10);
    EXPECT_EQ(one_step.outcome, Outcome::Finite);
    EXPECT_EQ(one_step.steps, 1u);

    const OrbitResult capped = orbit(square(), pt("1/2,3/2"), 3);
    EXPECT_EQ(capped.outcome, Outcome::BudgetExceeded);
    EXPECT_EQ(capped.steps, 3u);
}

TEST(Billiard, OrbitJsonLines) {
    std::ostringstream os;
    write_orbit_jsonl(os, orbit(square(), pt("1/2,3/2"), 100, true));
    std::istringstream in(os.str());
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        EXPECT_EQ(j.at("index").get<int>(), n);
        EXPECT_TRUE(j.contains("vertex"));
        EXPECT_TRUE(j.contains("point"));
        ++n;
    }
    EXPECT_GE(n, 4);
    EXPECT_EQ(point_from_json(Json::parse(os.str().substr(0, os.str().find('\n'))).at("point")),
              pt("1/2,3/2"));
}

TEST(Billiard, FoldedStepStaysInSector) {
    for (TableKind kind : {TableKind::Octagon, TableKind::Dodecagon}) {
        const BilliardTable t = make_table(kind);
        const auto wedge = tangency_wedge(t, 0);
        gen::Rng rng(5);
        int checked = 0;
        while (checked < 60) {
            const Point x = random_exterior_point(t, rng);
            bool inside = true;
            for (const auto& h : wedge) inside = inside && h.side(x) > 0;
            if (!inside) continue;
            FoldedStep f;
            try {
                f = folded_step(t, x);
            } catch (const std::domain_error&) {
                continue;
            }
            for (const auto& h : wedge) EXPECT_GE(h.side(f.image), 0);
            EXPECT_EQ(folded_motion(t, f.sector).apply(x), f.image);
            // Unfolding: the true image is a rotate of the folded one.
            EXPECT_EQ(t.symmetry(f.sector).apply(f.image), step(t, x));
            ++checked;
        }
    }
}

// Randomized invariants over all five tables.
class BilliardInvariants : public ::testing::TestWithParam<TableKind> {};

TEST_P(BilliardInvariants, TypeInvariance) {
    const auto c = check_type_invariance(make_table(GetParam()), {.seed = 11, .samples = 40});
    EXPECT_TRUE(c.passed()) << (c.failures.empty() ? "no samples" : c.failures.front());
}

TEST_P(BilliardInvariants, StepInverse) {
    const auto c = check_step_inverse(make_table(GetParam()), {.seed = 12, .samples = 200});
    EXPECT_TRUE(c.passed()) << (c.failures.empty() ? "no samples" : c.failures.front());
}

TEST_P(BilliardInvariants, TwoStepTranslation) {
    const auto c = check_two_step_translation(make_table(GetParam()), {.seed = 13, .samples = 60});
    EXPECT_TRUE(c.passed()) << (c.failures.empty() ? "no samples" : c.failures.front());
}

TEST(RegularTables, RotationEquivariance) {
    for (TableKind kind : {TableKind::Octagon, TableKind::Dodecagon}) {
        const BilliardTable t = make_table(kind);
        ASSERT_TRUE(t.regular);
        const auto c = check_rotation_equivariance(t, {.seed = 14, .samples = 40});
        EXPECT_TRUE(c.passed()) << (c.failures.empty() ? "no samples" : c.failures.front());
    }
}

INSTANTIATE_TEST_SUITE_P(AllTables, BilliardInvariants,
                         ::testing::Values(TableKind::Square, TableKind::TriangleLattice,
                                           TableKind::HexagonLattice, TableKind::Octagon,
                                           TableKind::Dodecagon),
                         [](const auto& info) { return to_string(info.param); });
