#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace paircoal;
using namespace testing_support;

namespace {

std::vector<FamilySpec> specs_up_to(FamilyKind kind, int max_order) {
    std::vector<FamilySpec> out;
    for (int n = 1; n <= max_order; ++n)
        for (const auto& params : detail::candidates(kind, n)) {
            auto s = FamilySpec::make(kind, params);
            try {
                validate(s);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (generate(s).order() == n) out.push_back(s);
        }
    return out;
}

}  // namespace

TEST(FamilySpec, TextRoundTrip) {
    for (const char* text : {"P(6)", "C(5)", "K(4)", "Star(7)", "K(2,3)", "K(1,2,3)", "S(2,3)", "SS(1,2)", "T(3)", "B",
                             "B1(2)", "B2(1,2)", "D1(3)", "D2(1,2)", "E1(1,2)", "E2(1,1,2)", "E3(2)", "E4(1,2)", "E5(1)",
                             "E6(2)", "E7(2,1)", "AttachLeaves(P(2),2,3)", "Fig1"}) {
        const auto spec = parse_family(text);
        EXPECT_EQ(spec.to_string(), text);
        EXPECT_EQ(parse_family(spec.to_string()), spec);
    }
}

TEST(FamilySpec, ParseErrors) {
    for (const char* bad : {"", "Q(3)", "P(3", "P()", "P(0)", "C(2)", "Star(1)", "B1(0)", "B(1)", "E7(1)", "K(2,0)",
                            "AttachLeaves(P(2),1,2)", "AttachLeaves(P(2))", "P(3))", "P(x)", "T(6)"})
        EXPECT_THROW(generate(parse_family(bad)), std::invalid_argument) << bad;
}

TEST(Generate, Examples) {
    EXPECT_TRUE(are_isomorphic(family("SS(2,2)"), family("T(2)")));
    EXPECT_EQ(family("T(2)").order(), 7);

    const Graph d2 = family("D2(1,1)");
    EXPECT_EQ(d2.order(), 6);
    EXPECT_EQ(girth(d2), Girth::finite(4));

    const Graph corona = family("AttachLeaves(P(2),2,2)");
    EXPECT_TRUE(are_isomorphic(corona, family("S(2,2)")));
    EXPECT_EQ(corona.edge_count(), 5);
    EXPECT_EQ(pc_number(corona).pc, 0);

    EXPECT_EQ(family("Fig1").order(), 15);
    EXPECT_EQ(family("T(4)").order(), 31);
    EXPECT_EQ(family("K(1,2,3)").edge_count(), 11);
    EXPECT_TRUE(structure_class(family("SS(3,1)")).tree);
}

TEST(Generate, OrderFormulas) {
    for (int a = 1; a <= 6; ++a) {
        EXPECT_EQ(generate(FamilySpec::make(FamilyKind::b1, {a})).order(), 5 + a);
        for (int b = 1; b <= 6; ++b) {
            EXPECT_EQ(generate(FamilySpec::make(FamilyKind::d2, {a, b})).order(), 4 + a + b);
            EXPECT_EQ(generate(FamilySpec::make(FamilyKind::e4, {a, b})).order(), 4 + a + b);
            EXPECT_EQ(generate(FamilySpec::make(FamilyKind::b2, {a, b})).order(), 5 + a + b);
        }
    }
}

TEST(Generate, UnicyclicFamiliesHaveTheirGirth) {
    for (auto kind : unicyclic_n2_kinds())
        for (const auto& s : specs_up_to(kind, 12)) {
            const Graph g = generate(s);
            EXPECT_TRUE(structure_class(g).unicyclic) << s.to_string();
            const int expected = kind == FamilyKind::b || kind == FamilyKind::b1 || kind == FamilyKind::b2 ? 5
                                 : kind == FamilyKind::d1 || kind == FamilyKind::d2                     ? 4
                                                                                                        : 3;
            EXPECT_EQ(girth(g), Girth::finite(expected)) << s.to_string();
        }
}

TEST(Generate, UnicyclicFamilyMembersReachOrderMinusTwo) {
    int checked = 0;
    for (auto kind : unicyclic_n2_kinds())
        for (const auto& s : specs_up_to(kind, 12)) {
            const Graph g = generate(s);
            EXPECT_EQ(pc_number(g).pc, g.order() - 2) << s.to_string();
            ++checked;
        }
    EXPECT_GT(checked, 100);
}

TEST(Recognize, Examples) {
    EXPECT_EQ(recognize(cycle(5))->to_string(), "B");
    EXPECT_EQ(recognize(family("K(1,6)"))->to_string(), "Star(7)");
    std::mt19937_64 rng(kSeed + 30);
    EXPECT_EQ(recognize(shuffled(rng, family("E7(2,1)")))->to_string(), "E7(2,1)");
    EXPECT_EQ(recognize(shuffled(rng, family("B2(2,1)")))->to_string(), "B2(1,2)");
    EXPECT_FALSE(recognize(family("AttachLeaves(P(4),2,2,2,2)")).has_value());
    EXPECT_FALSE(recognize(path(40)).has_value());
}

TEST(Recognize, RoundTripsEveryParameterUpToOrderFourteen) {
    std::mt19937_64 rng(kSeed + 31);
    int checked = 0;
    for (auto kind : recognizable_kinds())
        for (const auto& s : specs_up_to(kind, 14)) {
            const Graph g = shuffled(rng, generate(s));
            const auto own = recognize(g, {kind});
            ASSERT_TRUE(own.has_value()) << s.to_string();
            EXPECT_EQ(*own, normalized(s)) << s.to_string();
            const auto any = recognize(g);
            ASSERT_TRUE(any.has_value());
            EXPECT_TRUE(are_isomorphic(generate(*any), g));
            ++checked;
        }
    EXPECT_GT(checked, 800);
}

TEST(AttachLeaves, BuildsCorona) {
    const Graph g = attach_leaves(path(4), {2, 2, 2, 2});
    EXPECT_EQ(g.order(), 12);
    const auto classes = classify_vertices(g);
    EXPECT_EQ(classes.strong_support, VertexSet::of({0, 1, 2, 3}));
    EXPECT_THROW(attach_leaves(path(4), {2, 2}), std::invalid_argument);
    EXPECT_THROW(attach_leaves(path(60), std::vector<int>(60, 2)), std::invalid_argument);
}
