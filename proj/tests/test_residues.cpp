#include <gtest/gtest.h>

#include <random>

#include "disccount/residues.hpp"
#include "oracles.hpp"

using namespace disccount;

TEST(SquareRootsMod, Examples) {
    EXPECT_EQ(square_roots_mod(1, 4), (std::vector<i64>{1, 3}));
    EXPECT_TRUE(square_roots_mod(2, 4).empty());
    EXPECT_EQ(square_roots_mod(0, 1), (std::vector<i64>{0}));
    EXPECT_EQ(square_roots_mod(-3, 4), (std::vector<i64>{1, 3}));
}

TEST(SquareRootsMod, GuardAndDomain) {
    EXPECT_THROW(square_roots_mod(1, 0), DomainError);
    EXPECT_THROW(square_roots_mod(1, kSquareRootScanCap + 1), GuardExceeded);
}

TEST(SquareRootsMod, ClosedUnderNegation) {
    for (i64 m = 1; m <= 200; ++m)
        for (i64 t = 0; t < m; ++t) {
            const auto roots = square_roots_mod(t, m);
            EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
            for (i64 r : roots) {
                EXPECT_EQ((r * r) % m, t);
                EXPECT_TRUE(std::binary_search(roots.begin(), roots.end(), (m - r) % m));
            }
        }
}

TEST(CountInClass, Examples) {
    const std::vector<i64> odd{1, 3};
    EXPECT_EQ(count_in_class(odd, 4, 1, 12), 6);
    EXPECT_EQ(count_in_class(std::vector<i64>{}, 7, -100, 100), 0);
    EXPECT_EQ(count_in_class(std::vector<i64>{0}, 1, 5, 9), 5);
    EXPECT_EQ(count_in_class(odd, 4, 5, 4), 0); // empty range
}

TEST(CountInClass, MatchesDirectScan) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> pick_m(1, 1000), pick_lo(-3000, 3000), pick_len(0, 3000);
    for (int t = 0; t < 500; ++t) {
        const i64 m = pick_m(rng), lo = pick_lo(rng), hi = lo + pick_len(rng) - 1;
        std::vector<i64> roots;
        for (i64 r = 0; r < m; ++r)
            if (rng() % 7 == 0) roots.push_back(r);
        i64 expect = 0;
        for (i64 x = lo; x <= hi; ++x) {
            const i64 xr = ((x % m) + m) % m;
            expect += std::binary_search(roots.begin(), roots.end(), xr);
        }
        EXPECT_EQ(count_in_class(roots, m, lo, hi), expect) << "m=" << m << " lo=" << lo << " hi=" << hi;
    }
}

TEST(Lemma3Count, Examples) {
    auto full = lemma3_count({0, 3, 1, 4, 4});
    EXPECT_EQ(full.count, 4);
    EXPECT_EQ(full.upper, 4);

    auto parity = lemma3_count({2, 3, 1, 100, 4});
    EXPECT_EQ(parity.count, 0);
    EXPECT_EQ(parity.upper, 100);
    EXPECT_EQ(parity.lower, 0);

    auto twice = lemma3_count({0, 9, 1, 5, 5});
    EXPECT_EQ(twice.count, 10);
    EXPECT_EQ(twice.upper, 10);
    EXPECT_EQ(oracle::window(0, 9, 1, 5, 5), 10);
}

TEST(Lemma3Count, FullWindowIdentity) {
    for (i64 m = 1; m <= 60; ++m)
        for (i64 A1 : {i64{-7}, i64{0}, i64{13}}) {
            const auto w = lemma3_count({A1, A1 + m - 1, -5, 40, m});
            EXPECT_EQ(w.count, 46) << "m=" << m;
        }
}

TEST(Lemma3Count, RandomWindowsAgainstDoubleLoop) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> pick_m(1, 200), pick_off(-300, 300), pick_len(1, 120);
    for (int t = 0; t < 2000; ++t) {
        const i64 m = pick_m(rng), A1 = pick_off(rng), B1 = pick_off(rng);
        const i64 A2 = A1 + pick_len(rng) - 1, B2 = B1 + pick_len(rng) - 1;
        const auto w = lemma3_count({A1, A2, B1, B2, m});
        EXPECT_EQ(w.count, oracle::window(A1, A2, B1, B2, m));
        EXPECT_LE(w.lower, w.count);
        EXPECT_LE(w.count, w.upper);
    }
}

TEST(Lemma3Count, MalformedAndGuard) {
    EXPECT_THROW(lemma3_count({3, 2, 0, 1, 4}), DomainError);
    EXPECT_THROW(lemma3_count({0, 1, 0, 1, 0}), DomainError);
    EXPECT_THROW(lemma3_count({0, 1, 0, 100'000'000, 2}), GuardExceeded);
}
