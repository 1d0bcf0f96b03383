#include "gwblowup/cremona.hpp"
#include "gwblowup/engine.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace {

using gwb::CurveClass;
using gwb::EnumReason;
using gwb::EnumStatus;

CurveClass sorted(CurveClass c) {
    std::sort(c.alpha.begin(), c.alpha.end(), std::greater<>{});
    return c;
}

TEST(Cremona, TransformExamples) {
    EXPECT_EQ(gwb::cremona_transform({10, {4, 4, 3, 3, 3, 3, 3, 3, 3}}, 0, 1, 2),
              (CurveClass{9, {3, 3, 2, 3, 3, 3, 3, 3, 3}}));
    EXPECT_EQ(gwb::cremona_transform({5, {2, 2, 2}}, 0, 1, 2), (CurveClass{4, {1, 1, 1}}));
    EXPECT_EQ(gwb::cremona_transform({1, {1, 1, 0}}, 0, 1, 2), (CurveClass{0, {0, 0, -1}}));
    // single step from (10, 5 3^8)
    EXPECT_EQ(sorted(gwb::cremona_transform({10, {5, 3, 3, 3, 3, 3, 3, 3, 3}}, 0, 1, 2)),
              (CurveClass{9, {4, 3, 3, 3, 3, 3, 3, 2, 2}}));
}

TEST(Cremona, TransformRejectsBadIndices) {
    EXPECT_THROW(gwb::cremona_transform({3, {1, 1}}, 0, 1, 2), std::out_of_range);
    EXPECT_THROW(gwb::cremona_transform({3, {1, 1, 1}}, 0, 0, 2), std::invalid_argument);
}

TEST(Cremona, TransformIsAnInvolutionPreservingDimension) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        CurveClass c = gwb::testing::random_class(rng, 12, 3, 8, -1000);
        std::vector<std::size_t> idx(c.r());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        CurveClass t = gwb::cremona_transform(c, idx[0], idx[1], idx[2]);
        EXPECT_EQ(gwb::cremona_transform(t, idx[0], idx[1], idx[2]), c);
        EXPECT_EQ(gwb::expected_dim(t), gwb::expected_dim(c));
        EXPECT_EQ(gwb::arithmetic_genus(t), gwb::arithmetic_genus(c));
    }
}

TEST(Cremona, ReduceExamples) {
    // the chain continues past (9, 4 3^6 2^2) while the top three exceed d
    EXPECT_EQ(gwb::cremona_reduce({10, {5, 3, 3, 3, 3, 3, 3, 3, 3}}),
              (CurveClass{6, {2, 2, 2, 2, 2, 2, 2, 2}}));
    EXPECT_EQ(gwb::cremona_reduce({10, {4, 4, 3, 3, 3, 3, 3, 3, 3}}),
              (CurveClass{9, {3, 3, 3, 3, 3, 3, 3, 3, 2}}));
    EXPECT_EQ(gwb::cremona_reduce({5, {2, 2, 2}}), (CurveClass{4, {}}));
    EXPECT_EQ(gwb::cremona_reduce({3, {}}), (CurveClass{3, {}}));
}

TEST(Cremona, ReductionPreservesInvariant) {
    gwb::MemoStore store;
    for (const CurveClass& c : {CurveClass{10, {5, 3, 3, 3, 3, 3, 3, 3, 3}},
                                CurveClass{10, {4, 4, 3, 3, 3, 3, 3, 3, 3}},
                                CurveClass{5, {2, 2, 2}}, CurveClass{7, {4, 3, 2}}}) {
        EXPECT_EQ(gwb::invariant(gwb::cremona_reduce(c), store), gwb::invariant(c, store)) << c;
    }
}

TEST(Cremona, ReductionLowersDegreeAndKeepsInvariant) {
    std::mt19937 rng(31);
    gwb::MemoStore store;
    for (int trial = 0; trial < 150; ++trial) {
        CurveClass c = gwb::testing::random_class(rng, 9, 0, 7, 0);
        CurveClass red = gwb::cremona_reduce(c);
        EXPECT_LE(red.d, c.d);
        EXPECT_GT(red.d, 0);
        EXPECT_TRUE(std::is_sorted(red.alpha.rbegin(), red.alpha.rend()));
        for (int a : red.alpha) EXPECT_GE(a, 2) << c << " -> " << red;
        EXPECT_EQ(gwb::invariant(red, store), gwb::invariant(c, store)) << c << " -> " << red;
    }
}

TEST(Cremona, InvariantSymmetry) {
    std::mt19937 rng(37);
    gwb::MemoStore store;
    int checked = 0;
    while (checked < 60) {
        CurveClass c = gwb::testing::random_class(rng, 8, 3, 6, 0);
        std::vector<std::size_t> idx(c.r());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        CurveClass t = gwb::cremona_transform(c, idx[0], idx[1], idx[2]);
        if (t.d <= 0 || std::any_of(t.alpha.begin(), t.alpha.end(), [](int a) { return a < 0; }))
            continue;
        EXPECT_EQ(gwb::invariant(t, store), gwb::invariant(c, store)) << c << " -> " << t;
        ++checked;
    }
}

TEST(Cremona, EnumerativityExamples) {
    EXPECT_EQ(gwb::enumerativity({10, {4, 4, 3, 3, 3, 3, 3, 3, 3}}),
              EnumStatus::because(EnumReason::CremonaOrbit));
    EXPECT_EQ(gwb::enumerativity({10, {5, 3, 3, 3, 3, 3, 3, 3, 3}}),
              EnumStatus::because(EnumReason::CremonaOrbit));
    EXPECT_EQ(gwb::enumerativity({11, {5, 3, 3, 3, 3, 3, 3, 3, 3, 3}}), EnumStatus::unknown());
    EXPECT_EQ(gwb::enumerativity({11, {4, 4, 3, 3, 3, 3, 3, 3, 3, 3}}), EnumStatus::unknown());
    EXPECT_EQ(gwb::enumerativity({4, {2, 2, 2}}), EnumStatus::because(EnumReason::PositiveDim));
    EXPECT_EQ(gwb::enumerativity({4, {2, 2, 2, 2, 2, 1}}),
              EnumStatus::because(EnumReason::SmallMultiplicity));
    EXPECT_EQ(gwb::enumerativity({5, {2, 2, 2, 2, 2, 2, 2}}),
              EnumStatus::because(EnumReason::SmallMultiplicity));
    EXPECT_EQ(gwb::enumerativity({8, {3, 3, 3, 3, 3, 3, 3, 2}}),
              EnumStatus::because(EnumReason::SmallMultiplicity));
    EXPECT_EQ(gwb::enumerativity({7, {4, 4, 3, 3, 3, 3}}), EnumStatus::because(EnumReason::AtMostEight));
    EXPECT_THROW(gwb::enumerativity({1, {1, 1, 1}}), std::invalid_argument);
}

TEST(Cremona, FirstMatchingRuleIsReported) {
    // n > 0 wins over a 2-entry
    EXPECT_EQ(gwb::enumerativity({3, {2}}).reason, EnumReason::PositiveDim);
    // a 2-entry wins over few points
    EXPECT_EQ(gwb::enumerativity({3, {2, 2, 2, 2}}).reason, EnumReason::SmallMultiplicity);
}

TEST(Cremona, AllDegreeAtMostTenClassesAreEnumerative) {
    int seen = 0;
    for (int d = 1; d <= 10; ++d) {
        const int total = 3 * d - 1;
        std::vector<int> alpha;
        auto rec = [&](auto&& self, int max_entry, int left) -> void {
            if (left == 0) {
                EXPECT_TRUE(gwb::enumerativity({d, alpha}).enumerative()) << CurveClass{d, alpha};
                ++seen;
                return;
            }
            for (int a = std::min(max_entry, left); a >= 3; --a) {
                alpha.push_back(a);
                self(self, a, left - a);
                alpha.pop_back();
            }
        };
        rec(rec, total, total);
    }
    EXPECT_GT(seen, 100);
}

}  // namespace
