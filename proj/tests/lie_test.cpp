#include "verlinde/lie.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace verlinde;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3",
                                      "C4", "D3", "D4", "D5", "G2", "F4", "E6"};

RootSystem rs_of(const std::string &name) { return build_root_system(SimpleType::parse(name)); }

// Standard dual Coxeter numbers, tabulated independently of the construction.
std::int64_t tabulated_dual_coxeter(const SimpleType &t) {
    switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank - 1;
    case Family::C: return t.rank + 1;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case Family::F: return 9;
    case Family::G: return 4;
    }
    return 0;
}

Weight random_weight(std::mt19937 &rng, int rank, int spread = 4) {
    std::uniform_int_distribution<int> d(-spread, spread);
    std::vector<std::int64_t> l(static_cast<std::size_t>(rank));
    for (auto &x : l)
        x = d(rng);
    return Weight(l);
}

} // namespace

TEST(SimpleType, ParsesAndValidates) {
    EXPECT_EQ(SimpleType::parse("A1").name(), "A1");
    EXPECT_EQ(SimpleType::parse("g2").family, Family::G);
    EXPECT_TRUE(SimpleType::parse("D4").verified());
    EXPECT_FALSE(SimpleType::parse("F4").verified());
    EXPECT_FALSE(SimpleType::parse("E6").verified());
    for (const char *bad : {"A0", "B1", "C1", "D2", "G3", "F3", "E5", "E9", "X2", "A", "A-1", ""})
        EXPECT_THROW((void)SimpleType::parse(bad), DomainError) << bad;
}

TEST(RootSystem, A1Basics) {
    const auto rs = rs_of("A1");
    EXPECT_EQ(rs.dual_coxeter, 2);
    EXPECT_EQ(rs.highest_root, Weight({2}));
    EXPECT_EQ(rs.weyl.size(), 2u);
}

TEST(RootSystem, A2Basics) {
    const auto rs = rs_of("A2");
    EXPECT_EQ(rs.dual_coxeter, 3);
    EXPECT_EQ(rs.highest_root, Weight({1, 1}));
    EXPECT_EQ(rs.weyl.size(), 6u);
}

TEST(RootSystem, C2Indices) {
    const auto rs = rs_of("C2");
    EXPECT_EQ(rs.dual_coxeter, 3);
    EXPECT_EQ(rs.long_index, 2);
    EXPECT_EQ(rs.connection_index, 2);
}

TEST(RootSystem, CapacityAndRankCap) {
    EXPECT_THROW((void)build_root_system(SimpleType::parse("E7")), CapacityError);
    EXPECT_THROW((void)build_root_system(SimpleType::parse("A7")), CapacityError);
    BuildOptions wide;
    wide.max_weyl_rank = 7;
    EXPECT_EQ(build_root_system(SimpleType::parse("A7"), wide).weyl.size(), 40320u);
}

TEST(RootSystem, StructuralInvariantsAcrossTypes) {
    for (const auto &name : kTypes) {
        SCOPED_TRACE(name);
        const auto rs = rs_of(name);
        const auto r = static_cast<std::size_t>(rs.rank);
        EXPECT_EQ(static_cast<std::int64_t>(rs.weyl.size()), classical_weyl_order(rs.type));
        EXPECT_EQ(static_cast<std::int64_t>(rs.positive_roots.size()), (classical_dimension(rs.type) - rs.rank) / 2);
        EXPECT_EQ(killing_pairing(rs, rs.highest_root, rs.highest_root), Rational(2));
        EXPECT_EQ(rs.dual_coxeter, level_of(rs, rs.rho) + 1);
        EXPECT_EQ(rs.dual_coxeter, tabulated_dual_coxeter(rs.type));
        for (std::size_t i = 0; i < r; ++i) {
            EXPECT_EQ(rs.rho[i], 1);
            // H_{alpha_i} pairs to 2 with alpha_i
            EXPECT_EQ(rs.simple_root(static_cast<int>(i))[i], 2);
        }
        // gram is symmetric
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                EXPECT_EQ(rs.gram[i][j], rs.gram[j][i]);

        // f = |P/Q| from the simple roots written in P
        IntMatrix simple_rows;
        for (int j = 0; j < rs.rank; ++j)
            simple_rows.push_back(rs.simple_root(j).labels());
        EXPECT_EQ(lattice_index(simple_rows, r), rs.connection_index);
        // q = |Q/Q_lg| from the long roots written in Q
        IntMatrix long_rows;
        for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
            if (rs.positive_root_long[k])
                long_rows.push_back(rs.positive_roots[k]);
        EXPECT_EQ(lattice_index(long_rows, r), rs.long_index);
        EXPECT_EQ(lattice_index(rs.long_root_lattice, r), rs.long_index);

        std::int64_t sign_sum = 0;
        for (const auto &w : rs.weyl)
            sign_sum += w.sign;
        EXPECT_EQ(sign_sum, 0);
    }
}

TEST(RootSystem, LongIndexTable) {
    EXPECT_EQ(rs_of("B3").long_index, 2);
    EXPECT_EQ(rs_of("C3").long_index, 4);
    EXPECT_EQ(rs_of("C4").long_index, 8);
    EXPECT_EQ(rs_of("F4").long_index, 4);
    EXPECT_EQ(rs_of("G2").long_index, 3);
    EXPECT_EQ(rs_of("A3").long_index, 1);
    EXPECT_EQ(rs_of("D4").long_index, 1);
    EXPECT_EQ(rs_of("E6").long_index, 1);
}

TEST(RootSystem, WeylElementsPermuteRootsAndPreserveForm) {
    std::mt19937 rng(5);
    for (const auto &name : kTypes) {
        SCOPED_TRACE(name);
        const auto rs = rs_of(name);
        std::set<Weight> roots;
        for (const auto &a : rs.positive_root_weights) {
            roots.insert(a);
            roots.insert(-a);
        }
        std::uniform_int_distribution<std::size_t> pick(0, rs.weyl.size() - 1);
        for (int s = 0; s < 40; ++s) {
            const auto &w = rs.weyl[pick(rng)];
            for (const auto &a : roots)
                ASSERT_TRUE(roots.contains(apply(rs, w, a)));
            const Weight x = random_weight(rng, rs.rank), y = random_weight(rng, rs.rank);
            EXPECT_EQ(killing_pairing(rs, apply(rs, w, x), apply(rs, w, y)), killing_pairing(rs, x, y));
        }
    }
}

TEST(KillingPairing, Examples) {
    const auto a1 = rs_of("A1");
    EXPECT_EQ(killing_pairing(a1, a1.rho, a1.rho), Rational(1, 2));
    const auto a2 = rs_of("A2");
    EXPECT_EQ(killing_pairing(a2, a2.highest_root, a2.rho), Rational(2));
    for (const auto &name : kTypes) {
        const auto rs = rs_of(name);
        std::mt19937 rng(1);
        const auto x = random_weight(rng, rs.rank);
        EXPECT_EQ(killing_pairing(rs, Weight::zero(x.size()), x), Rational(0));
        EXPECT_EQ(killing_pairing(rs, x, rs.rho), killing_pairing(rs, rs.rho, x));
    }
    EXPECT_THROW((void)killing_pairing(a2, Weight({1}), a2.rho), DomainError);
}

TEST(LevelOf, Examples) {
    const auto a1 = rs_of("A1");
    for (int p = 0; p < 7; ++p)
        EXPECT_EQ(level_of(a1, Weight({p})), p);
    const auto a2 = rs_of("A2");
    EXPECT_EQ(level_of(a2, Weight({1, 1})), 2);
    EXPECT_EQ(level_of(a2, Weight({0, 0})), 0);
    // lambda(H_theta) = (lambda | theta) since theta is long
    for (const auto &name : kTypes) {
        const auto rs = rs_of(name);
        std::mt19937 rng(3);
        for (int s = 0; s < 10; ++s) {
            const auto x = random_weight(rng, rs.rank);
            EXPECT_EQ(Rational(level_of(rs, x)), killing_pairing(rs, x, rs.highest_root));
        }
    }
}

TEST(DominantChamber, Examples) {
    const auto a1 = rs_of("A1");
    auto r = dominant_chamber(a1, Weight({-3}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->sign, -1);
    EXPECT_EQ(r->weight, Weight({3}));
    EXPECT_FALSE(dominant_chamber(a1, Weight({0})));

    const auto a2 = rs_of("A2");
    r = dominant_chamber(a2, Weight({-1, 2}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->sign, -1);
    EXPECT_EQ(r->weight, Weight({1, 1}));
}

TEST(DominantChamber, OrbitInvariance) {
    std::mt19937 rng(11);
    for (const auto &name : kTypes) {
        SCOPED_TRACE(name);
        const auto rs = rs_of(name);
        std::uniform_int_distribution<std::size_t> pick(0, rs.weyl.size() - 1);
        for (int s = 0; s < 30; ++s) {
            const auto x = random_weight(rng, rs.rank, 5);
            const auto &w = rs.weyl[pick(rng)];
            const auto wx = apply(rs, w, x);
            const auto a = dominant_chamber(rs, x);
            const auto b = dominant_chamber(rs, wx);
            ASSERT_EQ(a.has_value(), b.has_value());
            EXPECT_EQ(reflect_to_dominant(rs, x).weight, reflect_to_dominant(rs, wx).weight);
            if (a) {
                EXPECT_EQ(a->weight, b->weight);
                EXPECT_EQ(a->sign, b->sign * w.sign);
            }
        }
    }
}
