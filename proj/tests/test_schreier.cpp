#include <doctest.h>

#include "oracle_helpers.hpp"
#include "tsirnorm/schreier.hpp"

using namespace tsir;

TEST_CASE("Schreier membership at the base levels") {
    CHECK(schreier::member(IndexSet{5}, 0));
    CHECK(schreier::member(IndexSet{}, 0));
    CHECK(schreier::member(IndexSet{}, 3));
    CHECK(!schreier::member(IndexSet{1, 2}, 0));
    CHECK(schreier::member(IndexSet{2, 3}, 1));
    CHECK(!schreier::member(IndexSet{1, 2}, 1));
    CHECK(schreier::member(IndexSet{3, 4, 5}, 1));
    CHECK(!schreier::member(IndexSet{2, 3, 4}, 1));
    CHECK(schreier::member(IndexSet{2, 3, 4}, 2));
    // a set containing 1 with a second element never enters any S_n
    for (int n = 0; n <= 5; ++n) CHECK(!schreier::member(IndexSet{1, 2, 3}, n));
    CHECK_THROWS_AS(schreier::member(IndexSet{2}, -1), Error);
}

TEST_CASE("greedy decision agrees with exhaustive decomposition") {
    for (int mask = 0; mask < (1 << 10); ++mask) {
        std::vector<int> f;
        for (int b = 0; b < 10; ++b)
            if (mask & (1 << b)) f.push_back(b + 1);
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(mask);
            CAPTURE(n);
            CHECK(schreier::member(IndexSet(f), n) == testing::member_exhaustive(f, n));
        }
    }
}

TEST_CASE("nesting and hereditariness on a full window") {
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::vector<int> f;
        for (int b = 0; b < 9; ++b)
            if (mask & (1 << b)) f.push_back(b + 1);
        IndexSet fs(f);
        for (int n = 0; n <= 3; ++n) {
            if (!schreier::member(fs, n)) continue;
            CHECK(schreier::member(fs, n + 1));
            for (int sub = 0; sub < (1 << f.size()); ++sub) {
                std::vector<int> g;
                for (size_t b = 0; b < f.size(); ++b)
                    if (sub & (1 << b)) g.push_back(f[b]);
                CHECK(schreier::member(IndexSet(g), n));
            }
        }
    }
}

TEST_CASE("spreading: shifting elements rightwards preserves membership") {
    // {2,3} in S_1 spreads to {2,4}, {3,7}, ...
    CHECK(schreier::member(IndexSet{2, 4}, 1));
    CHECK(schreier::member(IndexSet{3, 7}, 1));
    // {2,3,4} in S_2 spreads to {2,5,9} and {4,6,11}
    CHECK(schreier::member(IndexSet{2, 5, 9}, 2));
    CHECK(schreier::member(IndexSet{4, 6, 11}, 2));
    // systematic: every S_2 member of a small window, bumped pointwise
    for (const IndexSet& f : schreier::maximal_members(IndexSet{2, 3, 4, 5, 6, 7}, 2)) {
        std::vector<int> spread;
        int bump = 0;
        for (int a : f) spread.push_back(a + ++bump);
        CHECK(schreier::member(IndexSet(spread), 2));
    }
}

TEST_CASE("admissible and allowable families") {
    CHECK(schreier::admissible(SetFamily{IndexSet{2}, IndexSet{3, 4}}, 1));
    CHECK(!schreier::admissible(SetFamily{IndexSet{1}, IndexSet{2}}, 1));
    CHECK(!schreier::admissible(SetFamily{IndexSet{3, 5}, IndexSet{4}}, 1));
    CHECK(schreier::allowable(SetFamily{IndexSet{2, 5}, IndexSet{3, 7}}, 1));
    CHECK(!schreier::allowable(SetFamily{IndexSet{2, 5}, IndexSet{5, 7}}, 1));
    CHECK(schreier::admissible(SetFamily{}, 1));

    // every admissible family is allowable at the same level
    std::vector<SetFamily> samples = {
        SetFamily{IndexSet{2}, IndexSet{3, 4}},
        SetFamily{IndexSet{3}, IndexSet{4, 5}, IndexSet{6, 9}},
        SetFamily{IndexSet{1}, IndexSet{2}},
        SetFamily{IndexSet{4, 5}, IndexSet{6}, IndexSet{7}, IndexSet{8}},
    };
    for (int n = 1; n <= 3; ++n)
        for (const auto& fam : samples)
            if (schreier::admissible(fam, n)) CHECK(schreier::allowable(fam, n));
}

TEST_CASE("maximal member enumeration") {
    CHECK(schreier::maximal_members(IndexSet{1, 2, 3}, 1) ==
          std::vector<IndexSet>{IndexSet{1}, IndexSet{2, 3}});
    CHECK(schreier::maximal_members(IndexSet{}, 2).empty());
    CHECK(schreier::maximal_members(IndexSet{3, 4, 5}, 1) ==
          std::vector<IndexSet>{IndexSet{3, 4, 5}});

    SUBCASE("every member is below some maximal member") {
        IndexSet window{1, 2, 3, 4, 5, 6, 7};
        for (int n = 0; n <= 3; ++n) {
            auto maximal = schreier::maximal_members(window, n);
            for (int mask = 1; mask < (1 << 7); ++mask) {
                std::vector<int> f;
                for (int b = 0; b < 7; ++b)
                    if (mask & (1 << b)) f.push_back(b + 1);
                IndexSet fs(f);
                if (!schreier::member(fs, n)) continue;
                bool covered = false;
                for (const IndexSet& big : maximal) {
                    bool subset = true;
                    for (int j : fs)
                        if (!big.contains(j)) {
                            subset = false;
                            break;
                        }
                    if (subset) {
                        covered = true;
                        break;
                    }
                }
                CHECK(covered);
            }
        }
    }

    SUBCASE("guard fails loudly") {
        std::vector<int> big;
        for (int j = 1; j <= 21; ++j) big.push_back(j);
        CHECK_THROWS_AS(schreier::maximal_members(IndexSet(big), 1, 20), Error);
    }
}

TEST_CASE("Schreier norms against the brute-force oracle") {
    CHECK(schreier::norm(FinVec::unit(7), 0).value == 1);
    CHECK(schreier::norm(FinVec::unit(7), 4).value == 1);
    CHECK(schreier::norm(FinVec::parse("1:1,2:1,3:1"), 1).value == 2);
    CHECK(schreier::norm(FinVec::parse("1:1,2:1,3:1"), 1).witness == IndexSet{2, 3});
    CHECK(schreier::norm(FinVec::parse("3:1,4:1,5:1"), 1).value == 3);
    CHECK(schreier::norm(FinVec::zero(), 2).value == 0);

    std::vector<FinVec> samples = {
        FinVec::parse("1:1,2:-1/2,3:1/3,5:1"),
        FinVec::parse("2:1/2,3:1/2,4:1,6:-1/3,9:1"),
        FinVec::parse("4:1,5:1,6:1,7:1,8:1"),
        FinVec::parse("1:-1,7:1/3"),
    };
    for (const FinVec& x : samples)
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(x.to_string());
            CHECK(schreier::norm(x, n).value == testing::schreier_norm_brute(x, n));
        }

    SUBCASE("monotone in n, dominated by l1, equal once the support is a member") {
        FinVec x = FinVec::parse("2:1/2,3:1,4:1/3");
        Rational prev(0);
        for (int n = 0; n <= 4; ++n) {
            Rational v = schreier::norm(x, n).value;
            CHECK(v >= prev);
            CHECK(v <= x.l1());
            prev = v;
        }
        CHECK(schreier::member(IndexSet{2, 3, 4}, 2));
        CHECK(schreier::norm(x, 2).value == x.l1());
    }
}
