#include "frozen.hpp"
#include "support.hpp"
#include "trisym/classify.hpp"

#include <gtest/gtest.h>

using namespace trisym;
using testing_support::parse_set;
using testing_support::vectors;

namespace {

RootSystemPtr sys(const char* t) { return build_root_system(parse_simple_type(t)); }

std::vector<int> mark3(const Base& b) {
    std::vector<int> out;
    for (int i = 0; i < b.rank(); ++i)
        if (b.coefficients(b.highest())[static_cast<std::size_t>(i)] == 3) out.push_back(i);
    return out;
}

}  // namespace

TEST(Wolf, G2) {
    auto rs = sys("G2");
    WolfTwistor w = wolf_twistor(catalog_base(rs));
    EXPECT_EQ(w.datum.subset(), std::vector<int>{0});
    EXPECT_EQ(vectors(*rs, w.k.roots), parse_set("[2,0],[-2,0]"));
    EXPECT_TRUE(w.k.cartan);
    EXPECT_EQ(w.grading.max_level(), 2);
    EXPECT_EQ(w.grading.level_set(2).ids(), std::vector<RootId>{catalog_base(rs).highest()});
}

TEST(Wolf, A3AndC3) {
    auto a3 = sys("A3");
    WolfTwistor w = wolf_twistor(catalog_base(a3));
    EXPECT_EQ(w.datum.subset(), (std::vector<int>{0, 2}));
    EXPECT_EQ(vectors(*a3, w.k.roots), parse_set("[0,1,-1,0],[0,-1,1,0]"));
    SymmetricPair p = degree2(w.grading);
    EXPECT_EQ(vectors(*a3, p.f.roots - w.k.roots), parse_set("[1,0,0,-1],[-1,0,0,1]"));

    // only (1,-1,0) pairs to 1 with (2,0,0)
    auto c3 = sys("C3");
    WolfTwistor v = wolf_twistor(catalog_base(c3));
    EXPECT_EQ(v.datum.subset(), std::vector<int>{0});
    EXPECT_EQ(vectors(*c3, v.j1.roots), parse_set("[2,0,0],[1,-1,0],[1,0,-1],[1,1,0],[1,0,1]"));
    EXPECT_EQ(vectors(*c3, v.j2.roots), parse_set("[-2,0,0],[1,-1,0],[1,0,-1],[1,1,0],[1,0,1]"));
}

TEST(Wolf, EveryTypeUpToRankFour) {
    for (auto t : testing_support::types_up_to(4)) {
        if (t.rank < 2) continue;
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        WolfTwistor w = wolf_twistor(b);
        for (RootId a = 0; a < rs->size(); ++a) {
            if (a == b.highest() || a == rs->neg(b.highest())) continue;
            EXPECT_GE(w.pairing_with_highest[static_cast<std::size_t>(a)], -1) << t.str();
            EXPECT_LE(w.pairing_with_highest[static_cast<std::size_t>(a)], 1) << t.str();
        }
        CanonicalSeries s = canonical_series(w.datum);
        ASSERT_GE(s.terms.size(), 3U);
        EXPECT_EQ(s.terms[1].ids(), std::vector<RootId>{b.highest()}) << t.str();
        EXPECT_TRUE(s.terms[2].empty()) << t.str();
        EXPECT_TRUE(check_3symmetric(w.k, w.j2, w.j2.conjugate()).pass()) << t.str();
    }
    EXPECT_THROW(wolf_twistor(catalog_base(sys("A1"))), InputError);
}

TEST(GrayWolf, A3HasOnlyFlagCases) {
    auto rs = sys("A3");
    auto cases = gray_wolf_inner(catalog_base(rs));
    int singletons = 0, pairs = 0;
    for (const auto& c : cases) {
        EXPECT_NE(c.kind, InnerKind::Mark3);
        singletons += c.kind == InnerKind::Singleton1 ? 1 : 0;
        pairs += c.kind == InnerKind::Pair11 ? 1 : 0;
        EXPECT_EQ(c.fibre_dim, 0);
        EXPECT_EQ(c.fibre_pattern, "point");
    }
    EXPECT_EQ(singletons, 3);
    EXPECT_EQ(pairs, 3);
    EXPECT_EQ(cases.size(), 6U);
}

TEST(GrayWolf, ClassicalFamiliesHaveNoMarkThree) {
    for (auto t : testing_support::classical_up_to(8)) {
        auto rs = build_root_system(t);
        for (const auto& c : gray_wolf_inner(catalog_base(rs))) EXPECT_NE(c.kind, InnerKind::Mark3) << t.str();
        EXPECT_TRUE(mark3(catalog_base(rs)).empty()) << t.str();
    }
}

TEST(GrayWolf, ExceptionalMarkThreeCases) {
    struct Expect {
        const char* type;
        std::vector<std::pair<std::string, int>> cases;   // (h type, fibre dim)
    };
    const std::vector<Expect> expected = {
        {"G2", {{"A2", 4}}},
        {"F4", {{"A2+A2", frozen::kF4Mark3FibreDim}}},
        {"E6", {{"A2+A2+A2", 4}}},
        {"E7", {{"A2+A5", 4}, {"A2+A5", 10}}},
        {"E8", {{"A8", 16}, {"A2+E6", 4}}},
    };
    for (const auto& e : expected) {
        auto rs = sys(e.type);
        Base b = catalog_base(rs);
        std::vector<std::pair<std::string, int>> got;
        std::vector<int> found;
        for (const auto& c : gray_wolf_inner(b))
            if (c.kind == InnerKind::Mark3) {
                got.emplace_back(c.h_type, c.fibre_dim);
                found.insert(found.end(), c.subset.begin(), c.subset.end());
                EXPECT_EQ(c.cartan_rank, b.rank());
                EXPECT_EQ(c.fibre_dim, c.fibre_roots.count());
            }
        EXPECT_EQ(got, e.cases) << e.type;
        EXPECT_EQ(found, mark3(b)) << e.type;
    }
    for (const auto& c : gray_wolf_inner(catalog_base(sys("E8"))))
        if (c.kind == InnerKind::Mark3 && c.h_type == "A8") EXPECT_EQ(c.fibre_pattern, "CP(8)");
}

TEST(BorelDeSiebenthal, G2) {
    auto rs = sys("G2");
    Base b = catalog_base(rs);
    MaximalRankSubalgebra m = borel_de_siebenthal(b, 1);
    EXPECT_TRUE(m.h.cartan);
    oracle::VecSet h = parse_set("[-3,1*r3],[0,2*r3],[3,1*r3]");
    for (const auto& v : parse_set("[-3,1*r3],[0,2*r3],[3,1*r3]")) h.insert(-v);
    EXPECT_EQ(vectors(*rs, m.h.roots), h);
    EXPECT_EQ(format_dynkin(m.type), "A2");
    EXPECT_EQ(vectors(*rs, m.simple_system), parse_set("[-3,1*r3],[0,-2*r3]"));
    EXPECT_THROW(borel_de_siebenthal(b, 0), InputError);
}

TEST(BorelDeSiebenthal, EveryMarkThreeRoot) {
    for (auto t : testing_support::types_up_to(8)) {
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        for (int d : mark3(b)) {
            MaximalRankSubalgebra m = borel_de_siebenthal(b, d);
            EXPECT_TRUE(check_bracket_inclusion("[h,h] ⊆ h", m.h, m.h, m.h).holds);
            Fibration3 f(GradedDecomposition(ParabolicDatum(b, {d})));
            EXPECT_EQ(f.h(), m.h) << t.str();
            EXPECT_TRUE(check_3symmetric(f).pass()) << t.str();
            int roots = 0;
            for (const auto& c : m.type) roots += root_count(c);
            EXPECT_EQ(roots, m.h.roots.count());
        }
    }
}

TEST(InnerKind, Names) {
    EXPECT_EQ(to_string(InnerKind::Singleton1), "singleton-1");
    EXPECT_EQ(to_string(InnerKind::Singleton2), "singleton-2");
    EXPECT_EQ(to_string(InnerKind::Pair11), "pair-1-1");
    EXPECT_EQ(to_string(InnerKind::Mark3), "mark-3");
}
