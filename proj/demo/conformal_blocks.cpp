// Dimensions of conformal-block spaces for sl3 at level 2, by the exact fusion-ring
// trace and by the Verlinde sum.

#include "verlinde/verlinde.hpp"

#include <cstdio>

int main() {
    using namespace verlinde;
    auto rs = std::make_shared<const RootSystem>(build_root_system(SimpleType::parse("A2")));
    const std::int64_t level = 2;
    const auto ring = build_fusion_ring(rs, level);
    const auto spectrum = compute_spectrum(rs, level);

    std::printf("%s level %lld: %zu simple objects, |T| = %lld\n", rs->type.name().c_str(),
                static_cast<long long>(level), ring.size(), static_cast<long long>(spectrum.torsion));

    const Weight fund({1, 0});
    const Weight anti({0, 1});
    const std::vector<std::vector<Weight>> insertions{{}, {fund, anti}, {fund, fund, fund}, {Weight({1, 1})}};
    for (const auto &ws : insertions) {
        std::string name = ws.empty() ? "no points" : "";
        for (const auto &w : ws)
            name += (name.empty() ? "" : " ") + w.to_string();
        for (std::int64_t g = 0; g <= 3; ++g) {
            const auto exact = genus_dimension(ring, g, ws);
            const auto numeric = verlinde_dimension(spectrum, g, ws);
            std::printf("  g=%lld  %-22s exact %-8lld numeric %.12f\n", static_cast<long long>(g), name.c_str(),
                        static_cast<long long>(exact), numeric.value);
        }
    }
}
