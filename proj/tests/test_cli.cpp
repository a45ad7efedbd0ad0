#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bezspline/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "bezspline");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = bezspline::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bezspline_cli_" + name);
}

}  // namespace

TEST(Cli, HelpListsEveryFlag) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    for (const char* flag : {"--input", "--output", "--alpha", "--no-strict", "--samples", "--format", "--svg",
                             "--include-nodes", "--parametric", "--parameterization", "--input-format", "--check"}) {
        EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
    }
}

TEST(Cli, UnknownFlagIsInvalid) {
    EXPECT_EQ(run({"example", "1", "--bogus"}).code, bezspline::cli::kInvalid);
    EXPECT_EQ(run({}).code, bezspline::cli::kInvalid);
}

TEST(Cli, ExampleIdMustBeOneOrTwo) { EXPECT_EQ(run({"example", "3"}).code, bezspline::cli::kInvalid); }

TEST(Cli, StrictAlphaRangeMessage) {
    const auto r = run({"build", "-i", "-", "--alpha", "0.9"}, R"({"tau":[0,1,2],"F":[0,1,0]})");
    EXPECT_EQ(r.code, bezspline::cli::kInvalid);
    EXPECT_NE(r.err.find("alpha[0]=0.9 outside [1/3, 2/3]"), std::string::npos) << r.err;
}

TEST(Cli, NoStrictAllowsWideAlphaWithWarning) {
    const auto r = run({"build", "-i", "-", "--alpha", "0.9", "--no-strict"}, R"({"tau":[0,1,2],"F":[0,1,0]})");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, BuildTentFromStdin) {
    const auto r = run({"build", "-i", "-"}, R"({"tau":[0,1,2],"F":[0,1,0]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"phi\""), std::string::npos);
    EXPECT_NE(r.out.find("0.8"), std::string::npos);
}

TEST(Cli, SampleCsvFromStdin) {
    const auto r = run({"sample", "-i", "-", "--input-format", "csv", "--samples", "3"}, "0,0\n1,1\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x,y\n0,0\n0.5,0.5\n1,1\n");
}

TEST(Cli, FractionAlphaHitsTheBound) {
    const auto r = run({"sample", "-i", "-", "--alpha", "1/3", "--samples", "2"}, R"({"tau":[0,3],"F":[0,6]})");
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, PerIntervalAlphaArity) {
    const auto r = run({"build", "-i", "-", "--alpha", "0.5,0.5,0.5"}, R"({"tau":[0,1,2],"F":[0,1,0]})");
    EXPECT_EQ(r.code, bezspline::cli::kInvalid);
}

TEST(Cli, CheckOnSpikyNet) {
    const auto r = run({"example", "1", "--check", "-o", temp_path("e1.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("min_dominance_margin: 8"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("status: ok"), std::string::npos);
}

TEST(Cli, CheckSubcommandReportsFields) {
    const auto r = run({"check", "-i", "-"}, R"({"tau":[1,2,3,4,5,6,7,8,9,10,11],"F":[1,3,3,1,2,7,1.5,1,10,2,1.5]})");
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* key : {"dominance_margins:", "c1_residuals:", "max_c1_residual:", "hull_margin:"}) {
        EXPECT_NE(r.out.find(key), std::string::npos) << key;
    }
}

TEST(Cli, ParametricInput) {
    const auto r = run({"sample", "-i", "-", "--samples", "5"}, R"({"points":[[0,0],[1,0],[1,1]]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 6), "t,x,y\n");
}

TEST(Cli, MalformedInputIsInvalidNotFatal) {
    EXPECT_EQ(run({"build", "-i", "-"}, "{not json").code, bezspline::cli::kInvalid);
    EXPECT_EQ(run({"build", "-i", "-"}, R"({"tau":[1,1],"F":[0,1]})").code, bezspline::cli::kInvalid);
}

TEST(Cli, MissingFileIsIoError) {
    EXPECT_EQ(run({"build", "-i", "/nonexistent/input.json"}).code, bezspline::cli::kIoError);
    EXPECT_EQ(run({"example", "1", "-o", "/nonexistent/dir/out.csv"}).code, bezspline::cli::kIoError);
}

TEST(Cli, OutputIsDeterministic) {
    const auto a = run({"example", "2", "--svg", temp_path("a.svg").string()});
    const auto b = run({"example", "2", "--svg", temp_path("b.svg").string()});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(slurp(temp_path("a.svg")), slurp(temp_path("b.svg")));
    EXPECT_EQ(run({"example", "1", "--format", "json"}).out, run({"example", "1", "--format", "json"}).out);
}

TEST(Cli, SvgSubcommandFromFile) {
    const auto in = temp_path("in.csv");
    std::ofstream(in) << "tau,F\n0,0\n1,2\n2,1\n";
    const auto out = temp_path("out.svg");
    ASSERT_EQ(run({"svg", "-i", in.string(), "-o", out.string()}).code, 0);
    EXPECT_NE(slurp(out).find("<svg"), std::string::npos);
}
