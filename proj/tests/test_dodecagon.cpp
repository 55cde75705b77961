#include "obill/io.hpp"
#include "obill/renorm_dodecagon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace obill;
using namespace obill::dodecagon;

namespace obill::dodecagon {

inline void PrintTo(Target t, std::ostream* os) { *os << to_string(t); }

}  // namespace obill::dodecagon

namespace {

const RocketSystem& rocket() {
    static const RocketSystem sys = build_rocket_system();
    return sys;
}

std::vector<TableEntry> entries(const std::vector<std::size_t>& sides, const std::vector<std::uint64_t>& times) {
    std::vector<TableEntry> out;
    for (std::size_t i = 0; i < sides.size(); ++i) out.push_back({sides[i], times[i]});
    return out;
}

}  // namespace

TEST(Rocket, Zones) {
    const RocketSystem& sys = rocket();
    const std::array<int, 5> degrees{150, 120, 90, 60, 30};
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(sys.zones[i].index, i);
        EXPECT_EQ(sys.zones[i].degrees, degrees[i]);
        EXPECT_EQ(sys.zones[i].motion.angle_degrees(), degrees[i]);
        EXPECT_EQ(sys.zones[i].convex(), i < 4);
    }
    QuadExt total(0);
    for (const auto& z : sys.zones) total += area(z.region);
    EXPECT_EQ(total, area(sys.rocket));
}

TEST(Rocket, ScalingConstants) {
    const RocketSystem& sys = rocket();
    EXPECT_EQ(sys.lambda, QuadExt::parse("7-4*sqrt3"));
    EXPECT_EQ(sys.mu, QuadExt::parse("-3+2*sqrt3"));
    EXPECT_EQ(sys.lambda, QuadExt::parse("2-sqrt3") * QuadExt::parse("2-sqrt3"));
    EXPECT_EQ(area(sys.small), sys.lambda * sys.lambda * area(sys.rocket));
    EXPECT_TRUE(same_set(sys.small, obill::apply(sys.gamma, sys.rocket)));
    EXPECT_TRUE(same_set(sys.small_middle, obill::apply(sys.gamma, sys.middle)));
    EXPECT_TRUE(same_set(sys.small_small, obill::apply(sys.gamma, sys.small)));
    for (Target t : kAllTargets) EXPECT_TRUE(region_covers(sys.rocket, sys.target(t))) << to_string(t);
}

TEST(Rocket, XRocket) {
    const RocketSystem& sys = rocket();
    EXPECT_EQ(sys.x_steps, 2u);
    EXPECT_TRUE(same_set(sys.x_rocket, obill::apply(sys.gamma_x, sys.middle)));
    EXPECT_TRUE(region_covers(sys.middle, sys.x_rocket));
    ASSERT_TRUE(sys.gamma_x.fixed_point().has_value());
    EXPECT_EQ(*sys.gamma_x.fixed_point(), parse_point("15/14-1/14*sqrt3,-5/14-3/14*sqrt3"));
    std::vector<std::size_t> sides;
    for (const auto& n : sys.x_neighbors) sides.push_back(n.size());
    EXPECT_EQ(sides, (std::vector<std::size_t>{8, 6, 12}));
}

TEST(Rocket, TargetNames) {
    for (Target t : kAllTargets) EXPECT_EQ(parse_target(to_string(t)), t);
    EXPECT_THROW(parse_target("big"), std::invalid_argument);
}

TEST(Rocket, InvariantFigures) {
    const auto figs = zone_invariant_figures(rocket());
    EXPECT_TRUE(figs[0].regular);
    EXPECT_EQ(figs[0].polygon.size(), 12u);
    EXPECT_EQ(figs[0].order, 12);
    EXPECT_TRUE(figs[3].regular);
    EXPECT_EQ(figs[3].polygon.size(), 12u);
    EXPECT_EQ(figs[3].order, 6);

    EXPECT_EQ(figs[1].order, 3);
    EXPECT_EQ(figs[1].polygon.size(), 6u);
    EXPECT_TRUE(figs[1].equilateral);
    EXPECT_FALSE(figs[1].regular);
    for (int a : figs[1].angles) EXPECT_TRUE(a == 90 || a == 150) << a;

    EXPECT_EQ(figs[2].order, 4);
    EXPECT_EQ(figs[2].polygon.size(), 8u);
    EXPECT_TRUE(figs[2].equilateral);
    EXPECT_FALSE(figs[2].regular);
    for (int a : figs[2].angles) EXPECT_TRUE(a == 120 || a == 150) << a;
}

TEST(RocketTables, ReferenceValues) {
    EXPECT_EQ(expected_table(Target::Small),
              entries({4, 3, 3, 4, 3, 6, 4, 4, 4, 3}, {2, 3, 11, 20, 35, 37, 63, 185, 269, 479}));
    EXPECT_EQ(expected_table(Target::Middle), entries({3, 4, 4, 4, 4, 3, 4, 4}, {1, 1, 1, 1, 10, 25, 27, 53}));
    EXPECT_EQ(expected_table(Target::SmallMiddle),
              entries({4, 3, 4, 4, 4, 4, 3, 4}, {20, 35, 37, 63, 318, 525, 743, 987}));
    EXPECT_EQ(expected_table(Target::Airplane),
              entries({3, 3, 4, 3, 6, 4, 4, 4, 3}, {1, 9, 18, 33, 35, 61, 183, 267, 477}));
    EXPECT_EQ(expected_table(Target::Zone0),
              entries({4, 3, 4, 3, 6, 4, 4, 4, 3}, {1, 10, 19, 34, 36, 62, 184, 268, 478}));
}

class RocketTables : public ::testing::TestWithParam<Target> {};

TEST_P(RocketTables, MatchReference) {
    const RocketSystem& sys = rocket();
    const ReturnPartition rp = rocket_partition(sys, GetParam());
    EXPECT_TRUE(rp.unresolved.empty());
    EXPECT_EQ(rp.lost_area, QuadExt(0));
    QuadExt total(0);
    for (const auto& p : rp.pieces) total += p.area();
    EXPECT_EQ(total, area(sys.target(GetParam())));
    EXPECT_EQ(rocket_return_table(sys, GetParam()), expected_table(GetParam()));
}

TEST_P(RocketTables, SamplesFollowTheirPiece) {
    const RocketSystem& sys = rocket();
    const Region& base = sys.target(GetParam());
    const ReturnPartition rp = rocket_partition(sys, GetParam());
    std::mt19937_64 rng(41);
    for (const auto& piece : rp.pieces) {
        if (piece.return_time > 2000) continue;  // long pieces are covered by the conjugacy suites
        const Point x = interior_sample(piece.parts.front(), rng);
        const auto [y, k] = first_return(sys, base, x);
        EXPECT_EQ(k, piece.return_time);
        EXPECT_EQ(y, piece.motion.apply(x));
    }
}

INSTANTIATE_TEST_SUITE_P(Targets, RocketTables, ::testing::ValuesIn(kAllTargets), [](const auto& info) {
    std::string name = to_string(info.param);
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
});

TEST(Conjugacy, ScalingAndX) {
    const RocketSystem& sys = rocket();
    const ConjugacyReport g = verify_scaling_conjugacy(sys, 100, 7);
    EXPECT_TRUE(g.matched()) << (g.failures.empty() ? "" : g.failures.front());
    EXPECT_EQ(g.samples, 100u);
    EXPECT_EQ(g.defects, 0u);
    const ConjugacyReport h = verify_hypothesis1(sys, 100, 8);
    EXPECT_TRUE(h.matched()) << (h.failures.empty() ? "" : h.failures.front());
    EXPECT_EQ(h.samples, 100u);
    EXPECT_EQ(h.defects, 0u);
}

TEST(Conjugacy, IndependentOfWorkers) {
    const RocketSystem& sys = rocket();
    const ConjugacyReport one = verify_scaling_conjugacy(sys, 30, 3, 1);
    const ConjugacyReport four = verify_scaling_conjugacy(sys, 30, 3, 4);
    EXPECT_EQ(one.samples, four.samples);
    EXPECT_EQ(one.defects, four.defects);
    EXPECT_EQ(one.excluded, four.excluded);
}

TEST(Growth, PeriodsAtLeastDoubleEveryThreeLinks) {
    const GrowthWitness w = period_growth_witness(rocket(), 6);
    ASSERT_EQ(w.chain.size(), 7u);
    const std::vector<std::uint64_t> folded{4, 3, 222, 252, 60, 5766, 5692};
    for (std::size_t n = 0; n < w.chain.size(); ++n) EXPECT_EQ(w.chain[n].folded_period, folded[n]) << n;
    for (std::size_t n = 0; n + 3 < w.chain.size(); ++n) {
        EXPECT_GE(w.chain[n + 3].folded_period, 2 * w.chain[n].folded_period);
        EXPECT_GE(w.chain[n + 3].middle_period, 2 * w.chain[n].middle_period);
    }
    for (std::size_t k = 0; k + 1 < w.boxes.size(); ++k) EXPECT_TRUE(contains(w.boxes[k], w.boxes[k + 1]));
    for (const auto& b : w.boxes) EXPECT_NE(b.locate(w.limit), Location::Exterior);
    EXPECT_THROW(period_growth_witness(rocket(), 2), std::invalid_argument);
}
