#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "lagfib/fourfold_enumerator.hpp"

using namespace lagfib;

TEST(GuanTable, ShapeAndOrder) {
    const auto table = guan_table();
    ASSERT_EQ(table.size(), 53u); // 1 + 1 + 2 + 5 + 10 + 16 + 18
    EXPECT_EQ(table.front(), (BettiPair{23, 0}));
    EXPECT_EQ(table[2], (BettiPair{7, 0}));
    EXPECT_EQ(table[3], (BettiPair{7, 8}));
    EXPECT_EQ(table.back(), (BettiPair{3, 68}));
    const auto b2_is_4 = std::count_if(table.begin(), table.end(), [](const BettiPair& p) { return p.b2 == 4; });
    EXPECT_EQ(b2_is_4, 16);
    for (const auto& p : table) {
        EXPECT_EQ(p.b3 % 4, 0);
        EXPECT_GE(p.b3, 0);
    }
    EXPECT_EQ(std::set<BettiPair>(table.begin(), table.end()).size(), table.size());
}

TEST(Invariants, HilbertSchemeS2) {
    const auto inv = invariants_from_betti({23, 0});
    EXPECT_EQ(inv.b4, 276);
    EXPECT_EQ(inv.c4, 324);
    EXPECT_EQ(inv.c2_squared, 828);
    EXPECT_EQ(inv.rw, 900);
    EXPECT_EQ(inv.sqrt_ahat, Rational(25, 32));
}

TEST(Invariants, KummerK2) {
    const auto inv = invariants_from_betti({7, 8});
    EXPECT_EQ(inv.b4, 108);
    EXPECT_EQ(inv.c4, 108);
    EXPECT_EQ(inv.c2_squared, 756);
    EXPECT_EQ(inv.rw, 972);
    EXPECT_EQ(inv.sqrt_ahat, Rational(27, 32));
}

TEST(Invariants, LargestValue) { EXPECT_EQ(invariants_from_betti({4, 60}).rw, 1036); }

TEST(Invariants, RejectsPairsOutsideGuanTable) {
    EXPECT_THROW(invariants_from_betti({7, 4}), NotInGuanTable);
    EXPECT_THROW(invariants_from_betti({4, 64}), NotInGuanTable);
    EXPECT_THROW(invariants_from_betti({22, 0}), NotInGuanTable);
}

TEST(Invariants, IdentitiesHoldOnEveryPair) {
    for (const auto& p : guan_table()) {
        const auto inv = invariants_from_betti(p);
        EXPECT_EQ(inv.c4 % 3, 0);
        EXPECT_EQ(3 * inv.c2_squared - inv.c4, 2160);
        EXPECT_EQ(inv.rw, 1008 - inv.c4 / 3);
        EXPECT_EQ(Rational(inv.rw), Rational(7 * inv.c2_squared - 4 * inv.c4, 5760) * 1152);
        EXPECT_EQ(inv.sqrt_ahat * 1152, inv.rw);
    }
}

TEST(Census, ContainsKnownExamples) {
    const auto rows = census(true);
    auto has = [&](std::int64_t b2, std::int64_t b3, std::int64_t d, std::int64_t deg) {
        return std::any_of(rows.begin(), rows.end(), [&](const CensusRow& r) {
            return r.invariants.betti == BettiPair{b2, b3} && r.d == d && r.deg_delta == deg;
        });
    };
    EXPECT_TRUE(has(23, 0, 1, 30));
    EXPECT_TRUE(has(7, 8, 3, 18));
}

TEST(Census, RowInvariants) {
    for (bool integral : {true, false}) {
        const auto rows = census(integral);
        ASSERT_FALSE(rows.empty());
        for (const auto& r : rows) {
            EXPECT_GE(r.invariants.betti.b2, 4);
            EXPECT_EQ(r.d * r.deg_delta_squared, r.invariants.rw);
            EXPECT_LE(r.d, 1036);
            if (r.deg_delta) {
                EXPECT_EQ(*r.deg_delta * *r.deg_delta * r.d, r.invariants.rw);
                EXPECT_LE(*r.deg_delta, 32);
            }
            if (integral) {
                EXPECT_TRUE(r.deg_delta.has_value());
            }
        }
        EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
            return std::tie(a.invariants.betti.b2, a.invariants.betti.b3, a.d) <
                   std::tie(b.invariants.betti.b2, b.invariants.betti.b3, b.d);
        }));
    }
}

TEST(Census, IntegerFilterKeepsExactlyTheSquareQuotients) {
    const auto all = census(false);
    const auto integral = census(true);
    const auto squares = std::count_if(all.begin(), all.end(), [](const CensusRow& r) { return r.deg_delta.has_value(); });
    EXPECT_EQ(static_cast<std::size_t>(squares), integral.size());
}

TEST(Census, ParallelMatchesSerial) {
    for (bool integral : {true, false}) {
        const auto serial = census(integral, 1);
        for (unsigned workers : {2u, 3u, 8u, 64u}) {
            const auto parallel = census(integral, workers);
            ASSERT_EQ(parallel.size(), serial.size());
            for (std::size_t i = 0; i < serial.size(); ++i) {
                ASSERT_EQ(parallel[i].invariants.betti, serial[i].invariants.betti);
                ASSERT_EQ(parallel[i].d, serial[i].d);
                ASSERT_EQ(parallel[i].deg_delta, serial[i].deg_delta);
            }
        }
    }
}

TEST(Bounds, FullCensus) {
    const auto b = bounds_summary(census(true));
    EXPECT_EQ(b.max_rw, 1036);
    EXPECT_EQ(b.max_deg, 32);
    EXPECT_EQ(b.max_d, 1036);
    const auto loose = bounds_summary(census(false));
    EXPECT_EQ(loose.max_d, 1036);
    EXPECT_EQ(loose.max_deg, 32); // floor(sqrt(1036))
}

TEST(Bounds, RestrictedToB2Equal23) {
    auto rows = census(true);
    std::erase_if(rows, [](const CensusRow& r) { return r.invariants.betti.b2 != 23; });
    // Divisors d of 900 with 900/d a perfect square.
    std::vector<std::int64_t> expected_d;
    for (std::int64_t d = 1; d <= 900; ++d) {
        if (900 % d != 0) continue;
        std::int64_t r = 0;
        while ((r + 1) * (r + 1) <= 900 / d) ++r;
        if (r * r == 900 / d) expected_d.push_back(d);
    }
    ASSERT_EQ(rows.size(), expected_d.size());
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].d, expected_d[i]);
    const auto b = bounds_summary(rows);
    EXPECT_EQ(b.max_deg, 30);
    EXPECT_EQ(rows.front().d, 1);
    EXPECT_EQ(rows.front().deg_delta, 30);
}

TEST(Bounds, EmptyCensusIsAnError) { EXPECT_THROW(bounds_summary({}), EmptyCensus); }

TEST(Census, ExcludesB2Equal3) {
    for (bool integral : {true, false})
        for (const auto& r : census(integral)) EXPECT_NE(r.invariants.betti.b2, 3);
    // (3, 68) would otherwise exceed the bound.
    EXPECT_EQ(invariants_from_betti({3, 68}).rw, 1048);
}

TEST(Census, RwRange) {
    std::int64_t lo = 1 << 30, hi = 0;
    for (const auto& r : census(false)) {
        lo = std::min(lo, r.invariants.rw);
        hi = std::max(hi, r.invariants.rw);
    }
    EXPECT_EQ(lo, 900);
    EXPECT_EQ(hi, 1036);
}
