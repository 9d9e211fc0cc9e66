#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(VERLINDE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST(Cli, DimExample) {
    const auto r = run("dim --algebra A1 --level 1 --genus 2 --format text");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("dimension 4"), std::string::npos) << r.out;
}

TEST(Cli, FuseExample) {
    const auto r = run("fuse --algebra A1 --level 2 --weights '1;1' --format text");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "(0) + (2)\n");
}

TEST(Cli, OracleExample) {
    const auto r = run("oracle --algebra A1 --level 2 --weights '1;1;2' --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "oracle,ring\n1,1\n");
}

TEST(Cli, OutputIsDeterministic) {
    const auto a = run("smatrix --algebra B3 --level 2");
    const auto b = run("smatrix --algebra B3 --level 2 --threads 3");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("dim --algebra Q3 --level 1").status, 2);
    EXPECT_EQ(run("dim --algebra A2 --level 1 --weights 1").status, 2);
    EXPECT_EQ(run("dim --algebra F4 --level 1").status, 2);
    EXPECT_EQ(run("dim --algebra F4 --level 1 --allow-unverified").status, 0);
    EXPECT_EQ(run("frobnicate --algebra A1").status, 2);
    EXPECT_EQ(run("dim --algebra E8 --level 1").status, 3);
    EXPECT_EQ(run("table --algebra A3 --level 60").status, 3);
    EXPECT_EQ(run("dim --algebra A2 --level 2 --genus 3 --weights '1,1' --tol 1e-300").status, 4);
    EXPECT_EQ(run("check --input /nonexistent/file.json").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, CheckOnBrokenTableExitsWithAxiomCode) {
    const auto path = std::string(::testing::TempDir()) + "cli_broken.json";
    FILE *f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    // A1 level 1 rules with N(x + x) doubled
    std::fputs(R"j({"labels":["(0)","(1)"],"involution":[0,1],"max_degree":4,
                  "values":[[[],1],[[1,1],2],[[0],1],[[0,0],1],[[0,0,0],1],[[0,0,0,0],1],
                            [[0,1,1],1],[[0,0,1,1],1],[[1,1,1,1],1]]})j",
               f);
    std::fclose(f);
    EXPECT_EQ(run("check --input " + path).status, 5);
}
