#include "verlinde/query.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace verlinde;

namespace {

const std::vector<std::pair<std::string, int>> kGrid{{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4}, {"A1", 5},
                                                     {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1}, {"A3", 2},
                                                     {"C2", 1}, {"C2", 2}, {"B3", 1}, {"B3", 2}, {"D4", 1},
                                                     {"G2", 1}, {"G2", 2}};

std::string golden_path(const std::string &alg, int level) {
    return std::string(VERLINDE_GOLDEN_DIR) + "/" + alg + "_l" + std::to_string(level) + ".json";
}

Query table_query(const std::string &alg, int level) {
    Query q;
    q.command = Command::table;
    q.algebra = SimpleType::parse(alg);
    q.level = level;
    return q;
}

} // namespace

TEST(Golden, TablesMatchByteForByte) {
    for (const auto &[alg, level] : kGrid) {
        const auto path = golden_path(alg, level);
        ASSERT_TRUE(std::filesystem::exists(path)) << path << " missing; run the regenerate-golden target";
        EXPECT_EQ(render(run_query(table_query(alg, level)), Format::json), read_file(path)) << path;
    }
}

TEST(Golden, CheckPassesOnEveryShippedTable) {
    for (const auto &[alg, level] : kGrid) {
        Query q;
        q.command = Command::check;
        q.input = golden_path(alg, level);
        const auto doc = run_query(q);
        EXPECT_EQ(doc.status, ExitCode::ok) << alg << " " << level;
        EXPECT_TRUE(doc.payload.at("report").at("passed").get<bool>());
    }
}

TEST(Golden, Sl2TablesAgreeWithThreePointRule) {
    for (int level = 1; level <= 5; ++level) {
        const auto f = ring_from_json(parse_json(read_file(golden_path("A1", level))).at("payload").at("ring"));
        for (int p = 0; p <= level; ++p)
            for (int q = 0; q <= level; ++q)
                for (int r = 0; r <= level; ++r)
                    EXPECT_EQ(f.structure(static_cast<std::size_t>(p), static_cast<std::size_t>(q),
                                          static_cast<std::size_t>(r)),
                              sl2_three_point_oracle(p, q, r, level));
    }
}
