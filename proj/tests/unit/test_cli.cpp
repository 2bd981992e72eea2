#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

#include "test_support.hpp"

namespace fs = std::filesystem;
using setcirc::cli::run;
using testsupport::circuit_path;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("setcirc_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text)
{
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden_dir() { return SETCIRC_GOLDEN_DIR; }

// compares with tests/golden/<name>.txt; SETCIRC_UPDATE_GOLDEN=1 rewrites the file instead
void expect_golden(const std::string& name, const std::string& actual)
{
    fs::path file = fs::path(golden_dir()) / (name + ".txt");
    if (std::getenv("SETCIRC_UPDATE_GOLDEN")) {
        std::ofstream(file, std::ios::binary) << actual;
        return;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(actual, slurp(file.string())) << "golden " << name;
}

void golden_ok(const std::string& name, std::vector<std::string> args)
{
    auto r = cli(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;
    expect_golden(name, r.out);
}

} // namespace

TEST(CliValidate, Golden)
{
    golden_ok("validate_primes", {"validate", circuit_path("primes.circ")});
    golden_ok("validate_vector", {"validate", circuit_path("vector_sub.circ")});
}

TEST(CliValidate, Errors)
{
    auto fwd = write_temp("forward.circ", "circuit v1\ngate 1 add 2 2\ngate 2 input 1\noutput 1\n");
    auto r = cli({"validate", fwd});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("forward.circ:2:"), std::string::npos) << r.err;
    r = cli({"validate", (scratch() / "missing.circ").string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("cannot read"), std::string::npos);
    EXPECT_EQ(cli({"validate"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
}

TEST(CliMember, Golden)
{
    golden_ok("member_primes_97", {"member", circuit_path("primes.circ"), "97"});
    golden_ok("member_primes_91", {"member", circuit_path("primes.circ"), "91"});
    golden_ok("member_c1", {"member", circuit_path("c1.circ"), "0"});
    golden_ok("member_c1_witness", {"member", circuit_path("c1.circ"), "0", "--engine", "certificate", "--witness"});
    golden_ok("member_evens_search", {"member", circuit_path("evens.circ"), "12", "--engine", "search"});
    auto nonzero = write_temp("nonzero.circ", "circuit v1\ngate 1 input 0\ngate 2 comp 1\noutput 2\n");
    golden_ok("member_nonzero_certified", {"member", nonzero, "9", "--cutoff-mode", "certified"});
    golden_ok("member_vector", {"member", circuit_path("vector_sub.circ"), "2,1"});
    golden_ok("member_vector_inf", {"member", circuit_path("vector_sub.circ"), "inf"});
}

TEST(CliMember, Stats)
{
    auto r = cli({"member", circuit_path("primes.circ"), "7", "--stats"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::regex_search(r.out, std::regex("^member=true engine=clamped-vector cutoff=structural\n"
                                                    "gates=7 memo_entries=[0-9]+ micros=[0-9]+\n$")))
        << r.out;
}

TEST(CliMember, ExitCodes)
{
    auto open = cli({"member", circuit_path("open_fragment.circ"), "3"});
    EXPECT_EQ(open.code, 4);
    EXPECT_TRUE(open.out.empty());
    EXPECT_NE(open.err.find("decidability open"), std::string::npos) << open.err;

    auto wrong = cli({"member", circuit_path("primes.circ"), "3", "--engine", "clamped-scalar"});
    EXPECT_EQ(wrong.code, 4);
    EXPECT_TRUE(wrong.out.empty());

    auto budget = cli({"member", circuit_path("above_one.circ"), "3", "--cutoff-mode", "certified",
                       "--max-grid-cells", "10"});
    EXPECT_EQ(budget.code, 5) << budget.err;
    EXPECT_NE(budget.err.find("budget exceeded"), std::string::npos);
    EXPECT_TRUE(budget.out.empty());

    EXPECT_EQ(cli({"member", circuit_path("primes.circ"), "-3"}).code, 2);
    EXPECT_EQ(cli({"member", circuit_path("primes.circ"), "x"}).code, 2);
    EXPECT_EQ(cli({"member", circuit_path("primes.circ"), "3", "--engine", "magic"}).code, 2);
    EXPECT_EQ(cli({"member", circuit_path("primes.circ"), "3", "--cutoff-mode", "none"}).code, 2);
    EXPECT_EQ(cli({"member", circuit_path("vector_sub.circ"), "1"}).code, 2);
    EXPECT_EQ(cli({"member", circuit_path("primes.circ"), "3", "--max-steps", "0"}).code, 2);
}

TEST(CliEval, Golden)
{
    golden_ok("eval_above_one", {"eval", circuit_path("above_one.circ"), "--up-to", "5"});
    golden_ok("eval_c2", {"eval", circuit_path("c2.circ")});
    golden_ok("eval_primes", {"eval", circuit_path("primes.circ"), "--up-to", "40"});
    golden_ok("eval_vector", {"eval", circuit_path("vector_sub.circ"), "--up-to", "3"});
    auto xc = (scratch() / "xc.circ").string();
    ASSERT_EQ(cli({"gen", "exact-cover", circuit_path("demo.xc.json"), "-o", xc}).code, 0);
    auto r = cli({"eval", xc, "--up-to", "30"});
    EXPECT_EQ(r.code, 0);
    expect_golden("eval_exact_cover", r.out);
    EXPECT_EQ(r.out.rfind("1 ", 0), 0u);
    EXPECT_NE(r.out.find(" 30\n"), std::string::npos);
    EXPECT_EQ(cli({"eval", circuit_path("open_fragment.circ")}).code, 4);
}

TEST(CliTransform, Golden)
{
    golden_ok("transform_sigma_prime", {"transform", "sigma-prime", circuit_path("primes.circ"), "7"});
    golden_ok("transform_sigma_gcdfree", {"transform", "sigma-gcdfree", circuit_path("c1.circ"), "4"});
    golden_ok("transform_eliminate_cap", {"transform", "eliminate-cap", circuit_path("cap_mixed.circ")});
    golden_ok("transform_demorgan", {"transform", "demorgan", circuit_path("primes.circ")});
    golden_ok("transform_expand", {"transform", "expand", circuit_path("cap_mixed.circ")});
}

TEST(CliTransform, OutputsAreCircuits)
{
    auto out = (scratch() / "nocap.circ").string();
    ASSERT_EQ(cli({"transform", "eliminate-cap", circuit_path("cap_mixed.circ"), "-o", out}).code, 0);
    auto v = cli({"validate", out});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("fragment={add,mul,div}"), std::string::npos) << v.out;
    EXPECT_EQ(cli({"member", out, "3"}).out, cli({"member", circuit_path("cap_mixed.circ"), "3"}).out);

    auto vec = (scratch() / "sigma.circ").string();
    ASSERT_EQ(cli({"transform", "sigma-prime", circuit_path("primes.circ"), "7", "-o", vec}).code, 0);
    EXPECT_EQ(cli({"member", vec, "1,0"}).out, "member=true engine=clamped-vector cutoff=structural\n");

    EXPECT_EQ(cli({"transform", "sigma-prime", circuit_path("primes.circ")}).code, 2);
    EXPECT_EQ(cli({"transform", "rotate", circuit_path("primes.circ")}).code, 2);
    EXPECT_EQ(cli({"transform", "eliminate-cap", circuit_path("primes.circ")}).code, 4);
    EXPECT_EQ(cli({"transform", "expand", circuit_path("primes.circ"), "--max-gates", "3"}).code, 5);
    EXPECT_EQ(cli({"transform", "expand", circuit_path("primes.circ"), "-o", "/nonexistent/dir/x.circ"}).code, 3);
}

TEST(CliGen, Golden)
{
    golden_ok("gen_exact_cover", {"gen", "exact-cover", circuit_path("demo.xc.json")});
    golden_ok("gen_gap", {"gen", "gap", circuit_path("demo.gap.json")});
    golden_ok("gen_cvp", {"gen", "cvp", circuit_path("demo.cvp.json")});
    golden_ok("gen_majority", {"gen", "majority", circuit_path("demo.majority.json")});
    golden_ok("gen_primes", {"gen", "primes"});
}

// the sidecar's expected verdict is what member prints
TEST(CliGen, SidecarMatchesMember)
{
    for (std::string kind : {"exact-cover", "gap", "cvp", "majority"}) {
        std::string name = kind == "exact-cover" ? "xc" : kind;
        auto out = (scratch() / (name + ".circ")).string();
        ASSERT_EQ(cli({"gen", kind, circuit_path("demo." + name + ".json"), "-o", out}).code, 0) << kind;
        std::string text = slurp(out);
        std::smatch m;
        ASSERT_TRUE(std::regex_search(text, m, std::regex("expected_member=(true|false)"))) << text;
        EXPECT_EQ(cli({"member", out, "1"}).out.rfind("member=" + m[1].str() + " ", 0), 0u) << kind;
    }
    auto bad = write_temp("bad.json", "{\"universe\": [\"a\"], \"sets\": [[\"q\"]]}");
    EXPECT_EQ(cli({"gen", "exact-cover", bad}).code, 2);
    auto junk = write_temp("junk.json", "{ not json");
    EXPECT_EQ(cli({"gen", "gap", junk}).code, 2);
    EXPECT_EQ(cli({"gen", "cvp"}).code, 2);
    EXPECT_EQ(cli({"gen", "sudoku", bad}).code, 2);
}

TEST(CliBounds, Golden)
{
    golden_ok("bounds_above_one", {"bounds", circuit_path("above_one.circ")});
    golden_ok("bounds_c1", {"bounds", circuit_path("c1.circ")});
    golden_ok("bounds_vector", {"bounds", circuit_path("vector_sub.circ")});
}

TEST(CliXcheck, Golden)
{
    golden_ok("xcheck_files", {"xcheck", circuit_path("primes.circ"), circuit_path("evens.circ"),
                               circuit_path("above_one.circ"), circuit_path("c1.circ"), "--max-b", "20"});
    golden_ok("xcheck_random", {"xcheck", "--random", "30", "--seed", "7", "--max-b", "16"});
}

TEST(CliXcheck, Reproducible)
{
    auto a = cli({"xcheck", "--random", "20", "--seed", "11", "-v"});
    auto b = cli({"xcheck", "--random", "20", "--seed", "11", "-v"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto c = cli({"xcheck", "--random", "20", "--seed", "12", "-v"});
    EXPECT_NE(a.out, c.out);
}

TEST(CliBench, CsvShape)
{
    auto out = (scratch() / "bench.csv").string();
    auto r = cli({"bench", testsupport::circuits_dir(), "--max-b", "3", "-o", out});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string csv = slurp(out);
    // micros is the only column allowed to vary between runs
    std::string masked = std::regex_replace(csv, std::regex(",[0-9]+,([0-9]+)\n"), ",#,$1\n");
    expect_golden("bench_circuits", masked);
    auto again = cli({"bench", testsupport::circuits_dir(), "--max-b", "3"});
    EXPECT_EQ(std::regex_replace(again.out, std::regex(",[0-9]+,([0-9]+)\n"), ",#,$1\n"), masked);
    EXPECT_EQ(cli({"bench", (scratch() / "nowhere").string()}).code, 3);
}

TEST(CliHelp, ListsSubcommands)
{
    auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    for (const char* sub : {"validate", "member", "eval", "transform", "gen", "bounds", "xcheck", "bench"})
        EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}
