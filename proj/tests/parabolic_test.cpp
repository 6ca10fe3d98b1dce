#include "frozen.hpp"
#include "support.hpp"
#include "trisym/parabolic.hpp"

#include <gtest/gtest.h>

using namespace trisym;
using testing_support::parse_set;
using testing_support::vectors;

namespace {

RootSystemPtr sys(const char* t) { return build_root_system(parse_simple_type(t)); }

ParabolicDatum datum(const RootSystemPtr& rs, const std::string& base, const std::string& subset) {
    return ParabolicDatum(validate_base(rs, rs->parse_roots(base)), parse_subset(subset, rs->rank()));
}

const char* kG2Base = "[-3,1*r3],[2,0]";
const char* kA3Base = "[1,-1,0,0],[0,1,-1,0],[0,0,1,-1]";

}  // namespace

TEST(Subset, ParseAndFormat) {
    EXPECT_EQ(parse_subset("13", 3), (std::vector<int>{0, 2}));
    EXPECT_EQ(parse_subset("1,3", 3), (std::vector<int>{0, 2}));
    EXPECT_EQ(parse_subset("{3,1}", 3), (std::vector<int>{0, 2}));
    EXPECT_TRUE(parse_subset("", 3).empty());
    EXPECT_TRUE(parse_subset("-", 3).empty());
    EXPECT_THROW(parse_subset("4", 3), InputError);
    EXPECT_THROW(parse_subset("0", 3), InputError);
    EXPECT_THROW(parse_subset("1x", 3), InputError);
    EXPECT_EQ(format_subset({0, 2}), "{1,3}");
    EXPECT_EQ(format_subset({}), "{}");
}

TEST(Grade, G2ShortRoot) {
    auto rs = sys("G2");
    GradedDecomposition g(datum(rs, kG2Base, "2"));
    EXPECT_EQ(g.max_level(), 3);
    EXPECT_EQ(vectors(*rs, g.level_set(1)), parse_set("[-1,1*r3],[2,0]"));
    EXPECT_EQ(vectors(*rs, g.level_set(2)), parse_set("[1,1*r3]"));
    EXPECT_EQ(vectors(*rs, g.level_set(3)), parse_set("[0,2*r3],[3,1*r3]"));
    EXPECT_TRUE(g.level_set(4).empty());
}

TEST(Grade, G2FullSet) {
    auto rs = sys("G2");
    GradedDecomposition g(datum(rs, kG2Base, "12"));
    EXPECT_EQ(g.max_level(), 5);
    EXPECT_EQ(vectors(*rs, g.level_set(1)), parse_set("[-3,1*r3],[2,0]"));
    EXPECT_EQ(vectors(*rs, g.level_set(2)), parse_set("[-1,1*r3]"));
    EXPECT_EQ(vectors(*rs, g.level_set(3)), parse_set("[1,1*r3]"));
    EXPECT_EQ(vectors(*rs, g.level_set(4)), parse_set("[3,1*r3]"));
    EXPECT_EQ(vectors(*rs, g.level_set(5)), parse_set("[0,2*r3]"));
}

TEST(Grade, A3FirstTwo) {
    auto rs = sys("A3");
    GradedDecomposition g(datum(rs, kA3Base, "12"));
    EXPECT_EQ(vectors(*rs, g.level_set(1)), parse_set("[1,-1,0,0],[0,1,-1,0],[0,1,0,-1]"));
    EXPECT_EQ(vectors(*rs, g.level_set(2)), parse_set("[1,0,0,-1],[1,0,-1,0]"));
    EXPECT_TRUE(g.level_set(3).empty());
    EXPECT_EQ(g.max_level(), 2);
}

TEST(Grade, EmptySubset) {
    auto rs = sys("C3");
    GradedDecomposition g(ParabolicDatum(catalog_base(rs), {}));
    EXPECT_EQ(g.max_level(), 0);
    EXPECT_TRUE(g.positive_part().empty());
    EXPECT_EQ(g.level_zero().count(), rs->size());
}

TEST(Grade, LevelsAreOddAndAdditive) {
    for (auto t : testing_support::types_up_to(4)) {
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        for (unsigned mask = 0; mask < (1U << t.rank); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < t.rank; ++i)
                if (mask & (1U << i)) subset.push_back(i);
            GradedDecomposition g(ParabolicDatum(b, subset));
            for (RootId a = 0; a < rs->size(); ++a) {
                int expected = 0;
                for (int i : subset) expected += b.coefficients(a)[static_cast<std::size_t>(i)];
                EXPECT_EQ(g.level(a), expected);
                EXPECT_EQ(g.level(rs->neg(a)), -g.level(a));
                for (RootId c = 0; c < rs->size(); ++c)
                    if (rs->sum(a, c) != kNoRoot) EXPECT_EQ(g.level(rs->sum(a, c)), g.level(a) + g.level(c));
            }
            EXPECT_EQ(g.max_level(), g.level(b.highest()));
        }
    }
}

TEST(Series, G2FullSet) {
    auto rs = sys("G2");
    auto d = datum(rs, kG2Base, "12");
    CanonicalSeries s = canonical_series(d);
    ASSERT_EQ(s.terms.size(), frozen::kG2FullSeries.size());
    for (std::size_t i = 0; i < s.terms.size(); ++i) EXPECT_EQ(vectors(*rs, s.terms[i]), parse_set(frozen::kG2FullSeries[i]));
    EXPECT_TRUE(check_series_equals_grading(d).equal);
}

TEST(Series, WolfSetupTerminatesAtTheHighestRoot) {
    for (const char* t : {"A3", "C3", "B3", "G2", "F4"}) {
        auto rs = sys(t);
        Base b = catalog_base(rs);
        std::vector<int> subset;
        for (int i = 0; i < b.rank(); ++i)
            if (rs->cartan(b.simple_root(i), b.highest()) == 1) subset.push_back(i);
        CanonicalSeries s = canonical_series(ParabolicDatum(b, subset));
        ASSERT_GE(s.terms.size(), 3U) << t;
        EXPECT_EQ(s.terms[1].ids(), std::vector<RootId>{b.highest()}) << t;
        EXPECT_TRUE(s.terms[2].empty()) << t;
    }
}

TEST(Series, EqualsGradingOnSmallTypes) {
    for (const char* t : {"A3", "G2"}) {
        auto rs = sys(t);
        Base b = catalog_base(rs);
        for (unsigned mask = 0; mask < (1U << b.rank()); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < b.rank(); ++i)
                if (mask & (1U << i)) subset.push_back(i);
            auto cmp = check_series_equals_grading(ParabolicDatum(b, subset));
            EXPECT_TRUE(cmp.equal) << t << " mask " << mask;
            EXPECT_TRUE(cmp.mismatches.empty());
        }
    }
    auto rs = sys("A3");
    CanonicalSeries empty = canonical_series(ParabolicDatum(catalog_base(rs), {}));
    ASSERT_EQ(empty.terms.size(), 1U);
    EXPECT_TRUE(empty.terms[0].empty());
}

TEST(CanonicalElement, RecoversLevels) {
    for (const char* t : {"A3", "G2", "C3", "B3", "F4", "D4"}) {
        auto rs = sys(t);
        Base b = catalog_base(rs);
        for (unsigned mask = 0; mask < (1U << b.rank()); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < b.rank(); ++i)
                if (mask & (1U << i)) subset.push_back(i);
            ParabolicDatum d(b, subset);
            GradedDecomposition g(d);
            Vec v = canonical_element(d);
            for (RootId a = 0; a < rs->size(); ++a) EXPECT_EQ(dot(v, rs->root(a)), QSqrt3(g.level(a))) << t;
        }
    }
}

TEST(CanonicalElement, Examples) {
    auto a3 = sys("A3");
    ParabolicDatum d = datum(a3, kA3Base, "13");
    EXPECT_EQ(dot(canonical_element(d), a3->root(d.base().highest())), QSqrt3(2));
    auto g2 = sys("G2");
    ParabolicDatum e = datum(g2, kG2Base, "2");
    EXPECT_EQ(dot(canonical_element(e), parse_vec("[0,2*r3]")), QSqrt3(3));
}
