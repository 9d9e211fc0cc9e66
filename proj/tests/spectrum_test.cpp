#include "verlinde/spectrum.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace verlinde;

namespace {

std::shared_ptr<const RootSystem> rs_of(const std::string &name) {
    return std::make_shared<const RootSystem>(build_root_system(SimpleType::parse(name)));
}

const std::vector<std::pair<std::string, int>> kGrid{{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4}, {"A1", 5},
                                                     {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1}, {"A3", 2},
                                                     {"C2", 1}, {"C2", 2}, {"B3", 1}, {"B3", 2}, {"D4", 1},
                                                     {"G2", 1}, {"G2", 2}};

constexpr double kPi = std::numbers::pi;

// sl2 characters at t_m: sin(pi (l+1)(m+1)/k) / sin(pi (m+1)/k), k = level + 2.
double sl2_character(int l, int m, int level) {
    const double k = level + 2;
    return std::sin(kPi * (l + 1) * (m + 1) / k) / std::sin(kPi * (m + 1) / k);
}

// Character as a weight sum, sum_nu m(nu) exp 2 pi i (nu | mu + rho) / k.
Complex character_from_weights(const RootSystem &rs, std::int64_t level, const Weight &lambda, const Weight &mu) {
    const auto table = weight_multiplicities(rs, lambda);
    const double k = static_cast<double>(level + rs.dual_coxeter);
    Complex s{0, 0};
    for (const auto &[nu, m] : table.mults) {
        const Rational x = killing_pairing(rs, nu, mu + rs.rho);
        const double phase = 2 * kPi * boost::rational_cast<double>(x) / k;
        s += static_cast<double>(m) * std::polar(1.0, phase);
    }
    return s;
}

// sl2 Verlinde number without insertions: (k/2)^{g-1} sum_j sin(pi j / k)^{2-2g}.
double sl2_verlinde(int genus, int level) {
    const double k = level + 2;
    double s = 0;
    for (int j = 1; j < level + 2; ++j)
        s += std::pow(std::sin(kPi * j / k), 2.0 - 2.0 * genus);
    return std::pow(k / 2, genus - 1) * s;
}

} // namespace

TEST(Characters, Examples) {
    const auto a1 = rs_of("A1");
    EXPECT_NEAR(std::abs(character_value(*a1, 1, Weight({0}), Weight({1})) - Complex(1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(character_value(*a1, 1, Weight({1}), Weight({0})) - Complex(1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(character_value(*a1, 1, Weight({1}), Weight({1})) - Complex(-1, 0)), 0, 1e-12);
    EXPECT_THROW((void)character_value(*a1, 1, Weight({2}), Weight({0})), DomainError);
    EXPECT_THROW((void)character_value(*a1, 1, Weight({0}), Weight({0, 0})), DomainError);
}

TEST(Characters, Sl2ClosedForm) {
    const auto a1 = rs_of("A1");
    for (int level = 1; level <= 6; ++level)
        for (int l = 0; l <= level; ++l)
            for (int m = 0; m <= level; ++m) {
                const auto c = character_value(*a1, level, Weight({l}), Weight({m}));
                EXPECT_NEAR(c.real(), sl2_character(l, m, level), 1e-12);
                EXPECT_NEAR(c.imag(), 0, 1e-12);
            }
}

TEST(Characters, AgreeWithWeightSums) {
    for (const auto &[name, level] : kGrid) {
        SCOPED_TRACE(name + " level " + std::to_string(level));
        const auto rs = rs_of(name);
        const auto s = compute_spectrum(rs, level);
        for (const auto &p : s.points)
            for (std::size_t l = 0; l < s.size(); ++l)
                EXPECT_LT(std::abs(p.chi[l] - character_from_weights(*rs, level, s.basis[l], p.mu)), 1e-9);
    }
}

TEST(Characters, SymmetricUnderExchange) {
    for (const auto &[name, level] : kGrid) {
        const auto rs = rs_of(name);
        const auto s = compute_spectrum(rs, level);
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = 0; b < s.size(); ++b) {
                const Complex lhs = s.points[b].chi[a] * s.points[b].weyl_denominator;
                const Complex rhs = s.points[a].chi[b] * s.points[a].weyl_denominator;
                EXPECT_LT(std::abs(lhs - rhs), 1e-9) << name << " " << a << " " << b;
            }
    }
}

TEST(Spectrum, PointInvariants) {
    for (const auto &[name, level] : kGrid) {
        SCOPED_TRACE(name + " level " + std::to_string(level));
        const auto rs = rs_of(name);
        const auto f = build_fusion_ring(rs, level);
        const auto s = compute_spectrum(rs, level);
        ASSERT_EQ(s.points.size(), f.size());
        for (std::size_t m = 0; m < s.size(); ++m) {
            const auto &p = s.points[m];
            EXPECT_EQ(p.mu, f.weight(m));
            EXPECT_LT(std::abs(p.chi[f.unit()] - Complex(1, 0)), 1e-12);
            EXPECT_GT(p.delta, 0);
            double omega = 0;
            for (std::size_t l = 0; l < s.size(); ++l) {
                EXPECT_LT(std::abs(p.chi[f.dual(l)] - std::conj(p.chi[l])), 1e-9);
                omega += std::norm(p.chi[l]);
            }
            EXPECT_NEAR(p.chi_omega, omega, 1e-9 * omega);
            EXPECT_NEAR(s.points[f.dual(m)].delta, p.delta, 1e-9 * p.delta);
        }
    }
}

TEST(Spectrum, ThreadedMatchesSerial) {
    const auto rs = rs_of("B3");
    SpectrumOptions serial, threaded;
    serial.threads = 1;
    threaded.threads = 4;
    const auto a = compute_spectrum(rs, 2, serial);
    const auto b = compute_spectrum(rs, 2, threaded);
    for (std::size_t m = 0; m < a.size(); ++m) {
        EXPECT_EQ(a.points[m].delta, b.points[m].delta);
        EXPECT_EQ(a.points[m].chi, b.points[m].chi);
    }
}

TEST(Spectrum, UnverifiedTypesAreGated) {
    const auto f4 = rs_of("F4");
    EXPECT_THROW((void)compute_spectrum(f4, 1), UnverifiedTypeError);
    SpectrumOptions opts;
    opts.allow_unverified = true;
    const auto s = compute_spectrum(f4, 1, opts);
    EXPECT_TRUE(s.unverified);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_LT(torsion_identity_residual(s), 1e-9);
}

TEST(Delta, Examples) {
    const auto a1 = rs_of("A1");
    EXPECT_NEAR(delta_at(*a1, 1, Weight({0})), 3.0, 1e-12);
    EXPECT_NEAR(delta_at(*a1, 1, Weight({1})), 3.0, 1e-12);
    for (int level = 1; level <= 6; ++level)
        for (int m = 0; m <= level; ++m) {
            const double s = std::sin(kPi * (m + 1) / (level + 2));
            EXPECT_NEAR(delta_at(*a1, level, Weight({m})), 4 * s * s, 1e-12);
        }
}

TEST(Delta, BothFormsAgree) {
    for (const auto &[name, level] : kGrid) {
        const auto rs = rs_of(name);
        const TorusEvaluator ev(*rs, level);
        for (const auto &mu : enumerate_P_ell(*rs, level)) {
            const auto p = ev.point(mu);
            const double j = std::norm(ev.weyl_denominator(p));
            EXPECT_NEAR(j, ev.sine_product(mu), 1e-9 * j) << name << " " << mu.to_string();
            EXPECT_NEAR(delta_at(*rs, level, mu), j, 1e-12 * j);
        }
    }
}

TEST(Torsion, Examples) {
    EXPECT_EQ(torsion_order(*rs_of("A1"), 1), 6);
    EXPECT_EQ(torsion_order(*rs_of("A2"), 1), 48);
    EXPECT_EQ(torsion_order(*rs_of("C2"), 1), 64);
    EXPECT_EQ(torsion_order_lattice(*rs_of("A1"), 1), 6);
    EXPECT_EQ(torsion_order_lattice(*rs_of("A2"), 1), 48);
    EXPECT_EQ(torsion_order_lattice(*rs_of("C2"), 1), 64);
    EXPECT_THROW((void)torsion_order(*rs_of("A1"), 0), DomainError);
}

TEST(Torsion, FormulaMatchesLatticeIndex) {
    for (const auto &name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6"})
        for (int level = 1; level <= 3; ++level)
            EXPECT_EQ(torsion_order(*rs_of(name), level), torsion_order_lattice(*rs_of(name), level)) << name;
}

TEST(Torsion, CharacterNormIdentity) {
    for (const auto &[name, level] : kGrid) {
        const auto s = compute_spectrum(rs_of(name), level);
        EXPECT_LT(torsion_identity_residual(s), 1e-6) << name << " level " << level;
    }
}

TEST(Verlinde, Examples) {
    const auto a1 = rs_of("A1");
    const auto r = verlinde_dimension(*a1, 1, 2, std::vector<Weight>{});
    EXPECT_EQ(r.rounded, 4);
    EXPECT_LT(r.residual, 1e-6);
    const auto s = compute_spectrum(a1, 1);
    for (int g = 0; g <= 10; ++g)
        EXPECT_EQ(verlinde_dimension(s, g, std::span<const std::size_t>{}).rounded, std::int64_t{1} << g);
}

TEST(Verlinde, Sl2ClosedForm) {
    const auto a1 = rs_of("A1");
    for (int level = 1; level <= 6; ++level) {
        const auto s = compute_spectrum(a1, level);
        for (int g = 0; g <= 4; ++g) {
            const auto r = verlinde_dimension(s, g, std::span<const std::size_t>{});
            EXPECT_NEAR(r.value, sl2_verlinde(g, level), 1e-6 * std::max(1.0, r.value));
        }
    }
}

TEST(Verlinde, GenusZeroPairIsOne) {
    for (const auto &[name, level] : kGrid) {
        const auto rs = rs_of(name);
        const auto s = compute_spectrum(rs, level);
        for (const auto &w : s.basis) {
            const std::vector<Weight> ws{w, dual_weight(*rs, w)};
            EXPECT_EQ(verlinde_dimension(s, 0, ws).rounded, 1) << name << " " << w.to_string();
        }
    }
}

TEST(Verlinde, AgreesWithExactPath) {
    for (const auto &[name, level] : kGrid) {
        SCOPED_TRACE(name + " level " + std::to_string(level));
        const auto rs = rs_of(name);
        const auto f = build_fusion_ring(rs, level);
        const auto s = compute_spectrum(rs, level);
        for (int g = 0; g <= 3; ++g)
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a; b < f.size(); ++b) {
                    const std::vector<Weight> ws{f.weight(a), f.weight(b)};
                    const std::vector<std::size_t> idx{a, b};
                    const auto exact = genus_dimension(f, g, ws);
                    const auto numeric = verlinde_dimension(s, g, ws);
                    EXPECT_EQ(numeric.rounded, exact);
                    const auto spectral = spectral_genus_sum(s, g, idx);
                    EXPECT_NEAR(spectral.real(), static_cast<double>(exact), 1e-6 * std::max<double>(1, exact));
                }
    }
}

TEST(Verlinde, ToleranceBreachThrows) {
    const auto s = compute_spectrum(rs_of("A1"), 1);
    EXPECT_THROW((void)verlinde_dimension(s, 2, std::span<const std::size_t>{}, 0.0), ToleranceError);
    EXPECT_THROW((void)verlinde_dimension(s, -1, std::span<const std::size_t>{}), DomainError);
    try {
        (void)verlinde_dimension(s, 2, std::span<const std::size_t>{}, 0.0);
    } catch (const ToleranceError &e) {
        EXPECT_NE(std::string(e.what()).find("A1 level 1 genus 2"), std::string::npos);
        EXPECT_EQ(e.code(), ExitCode::tolerance);
    }
}

TEST(SpectralTable, Sl2LevelOne) {
    const auto t = spectral_table(*rs_of("A1"), 1);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(t.sigma_prime(0, 0)), h, 1e-12);
    EXPECT_NEAR(std::abs(t.sigma_prime(0, 1)), h, 1e-12);
    EXPECT_NEAR(std::abs(t.sigma_prime(1, 0)), h, 1e-12);
    EXPECT_NEAR(std::abs(t.sigma_prime(1, 1)), h, 1e-12);
    EXPECT_NEAR(std::abs(t.sigma_prime(0, 1) * t.sigma_prime(1, 0) + t.sigma_prime(1, 1) * t.sigma_prime(0, 0)), 0,
                1e-12);
    EXPECT_LT(t.unitarity_residual, 1e-12);
}

TEST(SpectralTable, GridInvariants) {
    for (const auto &[name, level] : kGrid) {
        SCOPED_TRACE(name + " level " + std::to_string(level));
        const auto rs = rs_of(name);
        const auto f = build_fusion_ring(rs, level);
        const auto t = spectral_table(compute_spectrum(rs, level));
        EXPECT_LT(t.unitarity_residual, 1e-9);
        EXPECT_LT(diagonalization_residual(t, f), 1e-6);
        EXPECT_LT(character_property_residual(t, f), 1e-8);
        EXPECT_GT(min_character_distance(t.spectrum), 1e-9);
        for (Eigen::Index m = 0; m < t.sigma.rows(); ++m)
            EXPECT_LT(std::abs(t.sigma(m, static_cast<Eigen::Index>(f.unit())) - Complex(1, 0)), 1e-12);
    }
}

TEST(SpectralTable, MismatchedRingIsRejected) {
    const auto t = spectral_table(*rs_of("A1"), 2);
    const auto f = build_fusion_ring(rs_of("A1"), 3);
    EXPECT_THROW((void)diagonalization_residual(t, f), DomainError);
}
