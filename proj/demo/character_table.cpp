// Unitary character matrix of a fusion ring and the structure constants it recovers.

#include "verlinde/verlinde.hpp"

#include <cstdio>

int main(int argc, char **argv) {
    using namespace verlinde;
    const std::string algebra = argc > 1 ? argv[1] : "G2";
    const std::int64_t level = argc > 2 ? std::atoll(argv[2]) : 1;
    try {
        auto rs = std::make_shared<const RootSystem>(build_root_system(SimpleType::parse(algebra)));
        const auto ring = build_fusion_ring(rs, level);
        const auto table = spectral_table(compute_spectrum(rs, level));

        std::printf("%s level %lld, rows t_mu, columns lambda:\n", algebra.c_str(), static_cast<long long>(level));
        for (Eigen::Index m = 0; m < table.sigma_prime.rows(); ++m) {
            std::printf("  %-12s", ring.weight(static_cast<std::size_t>(m)).to_string().c_str());
            for (Eigen::Index l = 0; l < table.sigma_prime.cols(); ++l)
                std::printf(" %8.5f%+8.5fi", table.sigma_prime(m, l).real(), table.sigma_prime(m, l).imag());
            std::printf("\n");
        }
        std::printf("unitarity residual       %.3g\n", table.unitarity_residual);
        std::printf("diagonalization residual %.3g\n", diagonalization_residual(table, ring));
    } catch (const Error &e) {
        std::fprintf(stderr, "%s\n", e.what());
        return static_cast<int>(e.code());
    }
}
