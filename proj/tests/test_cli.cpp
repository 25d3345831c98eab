#include "cyclic/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cyclic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

void expect_single_line_error(const Result& r, int code, const std::string& kind) {
    EXPECT_EQ(r.code, code);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err.rfind("error[" + kind + "]", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

}  // namespace

TEST(Cli, AnalyzeTwoNodeTwistFour) {
    const auto doc = json({"analyze", "cyclic t=4 nodes=(0,-1)"});
    EXPECT_EQ(doc["eta"], 56);
    EXPECT_EQ(doc["nilcone_dims"], nlohmann::json::array({3}));
    EXPECT_EQ(doc["bundle_rank"], 6);
    EXPECT_EQ(doc["reindexed"], false);
}

TEST(Cli, AnalyzeReindexes) {
    const auto doc = json({"analyze", "cyclic t=4 nodes=(-1,0)"});
    EXPECT_EQ(doc["quiver"], "cyclic t=4 nodes=(0,-1)");
    EXPECT_EQ(doc["reindexed"], true);
}

TEST(Cli, FibreSmall) {
    const auto doc = json({"fibre", "cyclic t=1 nodes=(0,0)", "--gamma", "1*(0:1)(1:1)"});
    EXPECT_EQ(doc["count"], 2);
    ASSERT_EQ(doc["points"].size(), 2u);
    EXPECT_EQ(doc["points"][0]["maps"]["phi1"], "1*(0:1)");
    EXPECT_EQ(doc["points"][1]["maps"]["phi1"], "1*(1:1)");
}

TEST(Cli, FibreOutputIsStableUnderReserialization) {
    const auto r = run({"--json", "fibre", "cyclic t=4 nodes=(0,-1)", "--gamma",
                        "1*(0:1)(1:1)(2:1)(3:1)(4:1)(5:1)(6:1)(7:1)"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
    EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 56);
}

TEST(Cli, CountPlainIsAnInteger) {
    const auto r = run({"count", "cyclic t=4 nodes=(0,-1)", "--profile", "2,1,1,1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    // double point in phi1: C(6,1), in phi2: C(6,3), shared: C(6,2)
    EXPECT_EQ(r.out, "41\n");
}

TEST(Cli, NilconeAndFlow) {
    const auto nil = json({"nilcone", "cyclic t=4 nodes=(0,-1)"});
    EXPECT_EQ(nil["nilcone"], true);
    EXPECT_EQ(nil["nilcone_dims"], nlohmann::json::array({3}));
    EXPECT_EQ(nil["count"], 0);
    const auto flow = json({"flow", "cyclic t=4 nodes=(0,-1)", "--rep",
                            "phi1=1*(0:1)(1:1)(2:1); phi2=5*(3:1)(4:1)(5:1)(6:1)(7:1)"});
    EXPECT_EQ(flow["limit"]["phi2"], "0");
    EXPECT_EQ(flow["limit"]["phi1"], "1*(0:1) (1:1) (2:1)");
    EXPECT_EQ(flow["limit_stable"], true);
    EXPECT_EQ(flow["hitchin_image"], "0");
}

TEST(Cli, StableWitness) {
    const auto doc = json({"stable", "cyclic t=1 nodes=(0,0)", "--rep", "phi1=0; phi2=1*(0:1)"});
    EXPECT_EQ(doc["stable"], false);
    EXPECT_EQ(doc["witness"], nlohmann::json::array({1}));
    const auto ok = json({"stable", "cyclic t=4 nodes=(0,-1)", "--rep", "phi1=1*(0:1)^3; phi2=0"});
    EXPECT_EQ(ok["stable"], true);
}

TEST(Cli, DecomposeAndReduceSplit10) {
    const auto d = json({"decompose", "k1 t=5 split=(1,0) tail=-2"});
    EXPECT_EQ(d["cover_count"], 8);
    EXPECT_EQ(d["special_locus_dim"], 1);
    EXPECT_EQ(d["reduction_amounts"], nlohmann::json::array({0, 2}));
    const auto r = json({"reduce", "k1 t=5 split=(1,0) tail=-2", "--rep",
                         "phi1=[1,2,1]; phi2=[1,0,0,2,0,0,0,0,1]; phi3=[1,-1,3,2]; phi4=[2,1,0,0,0,0,0,1]"});
    EXPECT_EQ(r["hitchin_preserved"], true);
    EXPECT_EQ(r["lambda_exponent"], 1);
    EXPECT_EQ(r["chart_shift"], 0);
    ASSERT_EQ(r["multipliers"].size(), 1u);
    EXPECT_EQ(r["multipliers"][0]["target"], "phi3");
}

TEST(Cli, K1Counts) {
    const auto c = json({"count", "k1 t=5 split=(1,0) tail=-2", "--profile", "1,1,1,1,1,1,1,1"});
    EXPECT_EQ(c["count"], 8);
    const auto s = json({"count", "k1 t=5 split=(1,0) tail=-2", "--zero-residual"});
    EXPECT_EQ(s["special_locus"], true);
    EXPECT_EQ(s["special_locus_dim"], 1);
}

TEST(Cli, SpecFromFile) {
    const std::string path = ::testing::TempDir() + "cyclic_spec.txt";
    {
        std::ofstream f(path);
        f << "cyclic t=4\nnodes=(0,-1)\n";
    }
    const auto doc = json({"analyze", "@" + path});
    EXPECT_EQ(doc["eta"], 56);
    std::remove(path.c_str());
}

TEST(Cli, TextOutput) {
    const auto r = run({"analyze", "cyclic t=4 nodes=(0,-1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("eta: 56\n"), std::string::npos);
}

TEST(Cli, ErrorsAreSingleLinesWithExitCodes) {
    expect_single_line_error(run({"analyze", "cyclic t=4 nodes=(0,-1"}), 2, "SyntaxError");
    expect_single_line_error(run({"analyze", "k1 t=5 split=(0,1) tail=-2"}), 2, "SemanticError");
    expect_single_line_error(run({"analyze", "cyclic t=1 nodes=(0,3,1)"}), 1, "NoStableIndexing");
    expect_single_line_error(run({"fibre", "cyclic t=4 nodes=(0,-1)", "--gamma", "0"}), 1, "ZeroGamma");
    expect_single_line_error(run({"fibre", "cyclic t=4 nodes=(0,-1)", "--gamma", "1*(0:1)"}), 1, "DegreeMismatch");
    expect_single_line_error(run({"count", "cyclic t=4 nodes=(0,-1)", "--profile", "1,1"}), 1, "ProfileMismatch");
    expect_single_line_error(run({"decompose", "cyclic t=4 nodes=(0,-1)"}), 2, "SemanticError");
    expect_single_line_error(run({"frobnicate", "cyclic t=4 nodes=(0,-1)"}), 2, "UsageError");
    expect_single_line_error(run({"fibre", "cyclic t=4 nodes=(0,-1)"}), 2, "UsageError");
    expect_single_line_error(run({}), 2, "UsageError");
    expect_single_line_error(run({"analyze", "@/nonexistent/spec"}), 2, "UsageError");
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("fibre"), std::string::npos);
}
