#include "verlinde/axioms.hpp"

#include <gtest/gtest.h>

using namespace verlinde;

namespace {

std::shared_ptr<const RootSystem> rs_of(const std::string &name) {
    return std::make_shared<const RootSystem>(build_root_system(SimpleType::parse(name)));
}

const std::vector<std::pair<std::string, int>> kGrid{{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4}, {"A1", 5},
                                                     {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1}, {"A3", 2},
                                                     {"C2", 1}, {"C2", 2}, {"B3", 1}, {"B3", 2}, {"D4", 1},
                                                     {"G2", 1}, {"G2", 2}};

// Z[x]/(x^2 - 1) written out by hand: N(a^i b^j) = 1 iff j is even.
FusionRuleTable ising_free_table(std::size_t degree) {
    FusionRuleTable t;
    t.labels = {"e", "x"};
    t.involution = {0, 1};
    t.max_degree = degree;
    for (const auto &m : detail::multisets_up_to(2, degree)) {
        const auto xs = std::count(m.begin(), m.end(), std::size_t{1});
        if (xs % 2 == 0)
            t.set(m, 1);
    }
    return t;
}

} // namespace

TEST(Multisets, CountsAreBinomial) {
    // C(n + d, d) multisets of degree <= d on n symbols
    EXPECT_EQ(detail::multisets_up_to(3, 4).size(), 35u);
    EXPECT_EQ(detail::multisets_up_to(1, 5).size(), 6u);
    for (const auto &m : detail::multisets_up_to(4, 3))
        EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
}

TEST(FusionRuleTable, ValueIsOrderIndependent) {
    auto t = ising_free_table(4);
    EXPECT_EQ(t.value({}), 1);
    EXPECT_EQ(t.value({1, 0, 1}), 1);
    EXPECT_EQ(t.value({1, 0}), 0);
    EXPECT_THROW((void)t.value({0, 0, 0, 0, 0}), DomainError);
}

TEST(FusionRuleTable, MatchesRingForA1LevelOne) {
    const auto f = build_fusion_ring(rs_of("A1"), 1);
    const auto t = fusion_rule_table(f, 4);
    const auto hand = ising_free_table(4);
    EXPECT_EQ(t.values, hand.values);
    EXPECT_EQ(t.involution, hand.involution);
}

TEST(Axioms, HandTablePasses) {
    const auto rep = verify_fusion_rule_axioms(ising_free_table(4));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.unit, std::optional<std::size_t>{0});
}

TEST(Axioms, EveryGridRingPassesToDepthFour) {
    for (const auto &[name, level] : kGrid) {
        SCOPED_TRACE(name + " level " + std::to_string(level));
        const auto f = build_fusion_ring(rs_of(name), level);
        const auto rep = verify_fusion_rule_axioms(fusion_rule_table(f, 4), 4);
        EXPECT_TRUE(rep.f0);
        EXPECT_TRUE(rep.f1);
        EXPECT_TRUE(rep.f2) << rep.f2_violations.size() << " violations";
        EXPECT_TRUE(rep.kernel.empty());
        EXPECT_TRUE(rep.pairing);
        EXPECT_EQ(rep.unit, std::optional<std::size_t>{f.unit()});
    }
}

TEST(Axioms, DoubledSelfPairingBreaksF2) {
    const auto f = build_fusion_ring(rs_of("A1"), 1);
    auto t = fusion_rule_table(f, 4);
    const std::size_t a = f.index_of(Weight({1}));
    ASSERT_EQ(t.involution[a], a);
    t.set({a, a}, 2);
    const auto rep = verify_fusion_rule_axioms(t, 4);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.f2);
    ASSERT_TRUE(rep.has_f2_violation({a}, {a}));
    const auto it = std::find_if(rep.f2_violations.begin(), rep.f2_violations.end(),
                                 [&](const F2Violation &v) { return v.x == Multiset{a} && v.y == Multiset{a}; });
    EXPECT_EQ(it->lhs, 2);
    EXPECT_EQ(it->rhs, 4);
    EXPECT_FALSE(rep.pairing);
}

TEST(Axioms, SilentSymbolIsInKernel) {
    const auto f = build_fusion_ring(rs_of("A1"), 1);
    auto t = fusion_rule_table(f, 4);
    t.labels.push_back("beta");
    t.involution.push_back(2);
    const auto rep = verify_fusion_rule_axioms(t, 4);
    EXPECT_EQ(rep.kernel, std::vector<std::size_t>{2});
    EXPECT_FALSE(rep.nondegenerate);
    EXPECT_FALSE(rep.passed());
    // the remaining rules are untouched
    EXPECT_TRUE(rep.f0);
    EXPECT_TRUE(rep.f1);
    EXPECT_TRUE(rep.f2);
}

TEST(Axioms, AsymmetricTableBreaksF1) {
    const auto f = build_fusion_ring(rs_of("A2"), 1);
    auto t = fusion_rule_table(f, 4);
    const std::size_t a = f.index_of(Weight({1, 0}));
    ASSERT_NE(t.involution[a], a);
    t.set({a, a, a}, 5);
    const auto rep = verify_fusion_rule_axioms(t, 4);
    EXPECT_FALSE(rep.f1);
    EXPECT_FALSE(rep.f1_violations.empty());
}

TEST(Axioms, IncompleteTableIsRejected) {
    EXPECT_THROW((void)verify_fusion_rule_axioms(ising_free_table(2), 4), DomainError);
    EXPECT_THROW((void)verify_fusion_rule_axioms(ising_free_table(3), 4), DomainError);
    auto bad = ising_free_table(4);
    bad.involution = {1, 1};
    EXPECT_THROW((void)verify_fusion_rule_axioms(bad, 4), DomainError);
}
