#include "obill/io.hpp"
#include "obill/renorm_octagon.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace obill;
using namespace obill::octagon;

namespace {

const SectorSystem& sectors() {
    static const SectorSystem sys = build_sector_system();
    return sys;
}

}  // namespace

TEST(Sectors, ThreeRotationPieces) {
    const SectorSystem& sys = sectors();
    const std::array<Letter, 3> letters{'u', 'v', 'w'};
    const std::array<int, 3> degrees{135, 90, 45};
    QuadExt total(0);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(sys.pieces[i].letter, letters[i]);
        EXPECT_EQ(sys.pieces[i].degrees, degrees[i]);
        EXPECT_EQ(sys.pieces[i].motion.angle_degrees(), degrees[i]);
        EXPECT_EQ(sys.pieces[i].motion.apply(sys.pieces[i].center), sys.pieces[i].center);
        total += area(sys.pieces[i].region);
    }
    EXPECT_EQ(total, area(sys.domain));
    EXPECT_EQ(sys.gamma_ratio, QuadExt::parse("3-2*sqrt2"));
    EXPECT_EQ(sys.gamma.fixed_point(), sys.apex);
}

TEST(Sectors, SubstitutionCounts) {
    const SectorSystem& sys = sectors();
    const CountMatrix m = count_matrix(sys);
    for (int j = 0; j < 3; ++j) {
        const CountVector cv = count_letters(sys.words[j]);
        EXPECT_EQ(cv.a, m[0][j]);
        EXPECT_EQ(cv.b, m[1][j]);
        EXPECT_EQ(cv.c, m[2][j]);
    }
    auto ev = eigenvalues(m);
    std::sort(ev.begin(), ev.end());
    EXPECT_EQ(ev, (std::array<long, 3>{-3, 1, 9}));
}

TEST(Sectors, ClosedFormMatchesIteration) {
    const CountMatrix m = count_matrix(sectors());
    const ClosedForm cf = closed_form(m);
    for (const CountVector& cv0 : {CountVector{1, 0, 0}, CountVector{0, 1, 0}, CountVector{0, 0, 1}, CountVector{2, 7, 1}}) {
        CountVector cv = cv0;
        for (unsigned k = 0; k <= 8; ++k, cv = count_step(m, cv)) {
            EXPECT_EQ(cf.at(cv0, k), cv) << k;
            EXPECT_EQ(closed_form(m, cv0, k), cv) << k;
        }
    }
}

TEST(Sectors, SubstitutedWordsCountLikeTheMatrix) {
    const SectorSystem& sys = sectors();
    const CountMatrix m = count_matrix(sys);
    Word w = "u";
    CountVector cv{1, 0, 0};
    for (int k = 0; k < 4; ++k) {
        w = substitute(sys, w);
        cv = count_step(m, cv);
        EXPECT_EQ(count_letters(w), cv);
    }
}

TEST(Sectors, Conjugacy) {
    const SectorSystem& sys = sectors();
    const ConjugacyReport rep = verify_conjugacy(sys, 100, 5);
    EXPECT_TRUE(rep.matched()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_GE(rep.samples, 300u);
    EXPECT_TRUE(verify_partition_conjugacy(sys));
}

TEST(Sectors, RankOfContractedPoints) {
    const SectorSystem& sys = sectors();
    const Point x = sys.pieces[1].center;
    const auto r0 = rank(sys, x);
    ASSERT_TRUE(r0.has_value());
    EXPECT_EQ(rank(sys, sys.gamma.apply(x)), *r0 + 1);
    EXPECT_FALSE(rank(sys, sys.apex).has_value());
}

TEST(Sectors, ReferenceTableRows) {
    const auto rows = rank0_table(sectors());
    ASSERT_EQ(rows.size(), 6u);
    const auto find = [&](const std::string& name) {
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.name == name; });
        EXPECT_NE(it, rows.end()) << name;
        return *it;
    };
    const TableRow v = find("V neighborhood");
    EXPECT_EQ(v.simulated_rank0, 4u);
    EXPECT_EQ(v.simulated_rank1, 36u);
    for (const TableRow& r : rows) {
        const auto& c = r.period_coefficients;
        EXPECT_EQ(c[0] + c[1] + c[2], Rational(static_cast<long>(r.simulated_rank0))) << r.name;
        EXPECT_EQ(c[0] * Rational(9) + c[1] * Rational(-3) + c[2], Rational(static_cast<long>(r.simulated_rank1)))
            << r.name;
    }
}

TEST(Sectors, DiscrepancyReport) {
    const auto report = discrepancy_report(sectors());
    const auto matched = std::count_if(report.begin(), report.end(), [](const Discrepancy& d) { return d.matches; });
    EXPECT_EQ(report.size(), 26u);
    EXPECT_EQ(matched, 14);
    for (const auto& d : report) {
        EXPECT_FALSE(d.artifact.empty());
        EXPECT_FALSE(d.derived.empty()) << d.artifact;
    }
}

TEST(Witness, ChainGrowsInsideNestedBoxes) {
    const Witness w = aperiodic_witness(sectors(), 2);
    ASSERT_EQ(w.chain.size(), 6u);
    for (std::size_t n = 1; n < w.chain.size(); ++n) EXPECT_GT(w.chain[n].period, w.chain[n - 1].period) << n;
    for (std::size_t k = 0; k + 1 < w.boxes.size(); ++k) {
        EXPECT_TRUE(contains(w.boxes[k], w.boxes[k + 1]));
        EXPECT_LT(w.boxes[k + 1].area(), w.boxes[k].area());
    }
    for (const auto& b : w.boxes) EXPECT_NE(b.locate(w.limit), Location::Exterior);
    EXPECT_EQ(w.contraction.fixed_point(), w.limit);
}
