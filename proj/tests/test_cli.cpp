#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ldi/cli.hpp"
#include "ldi/transform.hpp"
#include "test_support.hpp"

using namespace ldi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ldi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

const std::string kEa = fixtures::data_path("ea_4_1_3_1.code");
const std::string kDual = fixtures::data_path("dual_5_3.code");

}  // namespace

TEST_F(CliTest, format_parse_round_trip_is_bit_exact) {
    for (const char *name : {"ea_4_1_3_1.code", "dual_5_3.code", "claimed_invariant.code"}) {
        const CodeSpec c = fixtures::load(name);
        const std::string text = format_code_file(c, {"round trip"});
        EXPECT_EQ(parse_code_file(text), c) << name;
        EXPECT_EQ(format_code_file(parse_code_file(text), {"round trip"}), text) << name;
    }
}

TEST_F(CliTest, json_is_deterministic) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"info", kEa, "--json"}, {"transform", kEa, "--to-p", "7", "--json"},
          {"distance", kDual, "--json"}, {"scan", kEa, "--primes", "3,5,7", "--json"},
          {"bounds", kEa, "--json"}, {"canonical", kDual, "--json"}}) {
        const Outcome a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code);
        ASSERT_FALSE(a.out.empty());
        EXPECT_EQ(a.out, b.out);
        EXPECT_TRUE(nlohmann::json::parse(a.out).is_object()) << args[0];
    }
}

TEST_F(CliTest, json_fields) {
    const Outcome r = run({"transform", kEa, "--to-p", "5", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["source_q"], 2);
    EXPECT_EQ(j["target_p"], 5);
    EXPECT_EQ(j["nu_inverse"], 3);
    EXPECT_EQ(j["label"], "effectively-ldi");
    EXPECT_EQ(j["verification"]["passed"], true);

    const auto b = nlohmann::json::parse(run({"bounds", kEa, "--json"}).out);
    EXPECT_EQ(b["B"], "2");
    EXPECT_EQ(b["p_star"], "256");
}

TEST_F(CliTest, canonical_transform_parse_round_trip) {
    const std::string canon_path = path("canon.code"), lifted_path = path("lifted.code");
    ASSERT_EQ(run({"canonical", kEa, "-o", canon_path}).code, kExitOk);
    const CodeSpec source = fixtures::load("ea_4_1_3_1.code");
    const CanonicalForm cf = canonicalize(source);
    const CodeSpec canon_file = parse_code_file(slurp(canon_path));
    EXPECT_EQ(canon_file.generators(), cf.code.generators());
    EXPECT_EQ(canon_file.q(), cf.code.q());

    ASSERT_EQ(run({"transform", canon_path, "--to-p", "7", "-o", lifted_path}).code, kExitOk);
    const TransformResult direct = transform(source, PrimeModulus(7));
    const CodeSpec lifted = parse_code_file(slurp(lifted_path));
    EXPECT_EQ(lifted.generators(), direct.output);
    EXPECT_EQ(lifted.q(), PrimeModulus(7));
    EXPECT_TRUE(lifted.unbounded_entries());
    EXPECT_EQ(lifted.declared().c, 0);
    EXPECT_EQ(format_code_file(parse_code_file(slurp(lifted_path))),
              format_code_file(direct.output_code()));

    EXPECT_EQ(run({"verify", lifted_path, "--source", kEa}).code, kExitOk);
    EXPECT_EQ(run({"verify", lifted_path}).code, kExitOk);
}

TEST_F(CliTest, rates_before_and_after_transform) {
    const Outcome before = run({"rates", kEa, "--json"});
    ASSERT_EQ(before.code, kExitOk);
    const auto b = nlohmann::json::parse(before.out);
    EXPECT_EQ(b["entanglement_assisted"], "1/4");
    EXPECT_EQ(b["tradeoff"][0], "1/4");
    EXPECT_EQ(b["tradeoff"][1], "1/4");
    EXPECT_EQ(b["catalytic"], "0");

    const std::string lifted = path("lifted.code");
    ASSERT_EQ(run({"transform", kEa, "--to-p", "5", "-o", lifted}).code, kExitOk);
    const auto a = nlohmann::json::parse(run({"rates", lifted, "--json"}).out);
    EXPECT_EQ(a["c"], 0);
    EXPECT_EQ(a["entanglement_assisted"], "0");
    EXPECT_EQ(a["tradeoff"][0], "0");
    EXPECT_EQ(a["catalytic"], "0");
}

TEST_F(CliTest, distance_command) {
    const auto j = nlohmann::json::parse(run({"distance", kDual, "--p", "3", "--json"}).out);
    EXPECT_EQ(j["distance"], 3);
    EXPECT_EQ(j["d_pure"], 3);
    const Outcome text = run({"distance", kDual});
    EXPECT_EQ(text.code, kExitOk);
    EXPECT_NE(text.out.find("distance at p = 5: 2"), std::string::npos) << text.out;
    const auto oracle = nlohmann::json::parse(run({"distance", kDual, "--p", "3", "--oracle", "--json"}).out);
    EXPECT_EQ(oracle["distance"], 3);
}

TEST_F(CliTest, corrupted_files_exit_with_parse_error) {
    const std::string good = fixtures::read_data("ea_4_1_3_1.code");
    const std::vector<std::pair<std::string, std::string>> faults{
        {"short_row", "q 2\nn 2\nk 1\n1 0 0\n"},
        {"token", "q 2\nn 2\nk 1\n1 0 x 0\n"},
        {"composite_q", "q 4\nn 2\nk 1\n1 0 0 0\n"},
        {"missing_row", "q 2\nn 2\nk 2\n1 0 0 0\n"},
        {"extra_row", "q 2\nn 1\nk 1\n1 0\n0 1\n"},
        {"missing_header", "n 2\nk 1\n1 0 0 0\n"},
        {"late_header", "q 2\nn 1\nk 1\n1 0\nd 1\n"},
        {"truncated", good.substr(0, good.size() / 2)},
        {"empty", ""},
    };
    for (const auto &[name, text] : faults) {
        const std::string p = write(name + ".code", text);
        for (const char *cmd : {"info", "canonical", "rates"}) {
            const Outcome r = run({cmd, p});
            EXPECT_EQ(r.code, kExitParseError) << name << " " << cmd;
            EXPECT_FALSE(r.err.empty());
        }
    }
    EXPECT_EQ(run({"info", path("does_not_exist.code")}).code, kExitParseError);
}

TEST_F(CliTest, bad_command_lines_exit_with_parse_error) {
    EXPECT_EQ(run({}).code, kExitParseError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParseError);
    EXPECT_EQ(run({"transform", kEa}).code, kExitParseError);
    EXPECT_EQ(run({"transform", kEa, "--to-p", "4"}).code, kExitParseError);
    EXPECT_EQ(run({"distance", kEa, "--p", "9"}).code, kExitParseError);
    EXPECT_EQ(run({"scan", kEa, "--primes", "3,x"}).code, kExitParseError);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, same_modulus_request_fails) {
    const Outcome r = run({"transform", kEa, "--to-p", "2"});
    EXPECT_EQ(r.code, kExitFailed);
    EXPECT_NE(r.err.find("SameModulus"), std::string::npos);
    EXPECT_EQ(run({"scan", kEa, "--primes", "2,3"}).code, kExitFailed);
    EXPECT_EQ(run({"scan", kEa, "--primes", "3,5"}).code, kExitOk);
}

TEST_F(CliTest, dependent_generators_fail_validation) {
    const std::string p = write("dep.code", "q 3\nn 2\nk 2\n1 2 0 1\n2 1 0 2\n");
    EXPECT_EQ(run({"info", p}).code, kExitFailed);
    EXPECT_EQ(run({"canonical", p}).code, kExitFailed);
    const Outcome r = run({"transform", p, "--to-p", "5"});
    EXPECT_EQ(r.code, kExitFailed);
    EXPECT_NE(r.err.find("DependentGenerators"), std::string::npos);
}

TEST_F(CliTest, tampered_lift_fails_verification) {
    const std::string lifted = path("lifted.code");
    ASSERT_EQ(run({"transform", kEa, "--to-p", "5", "-o", lifted}).code, kExitOk);
    CodeSpec c = parse_code_file(slurp(lifted));
    IntMatrix g = c.generators();
    g(1, 4) += 2;  // still the same mod 2, no longer commuting mod 5
    const std::string bad = write("bad.code", format_code_file(CodeSpec(c.q(), c.n(), g, true, c.declared())));
    EXPECT_EQ(run({"verify", bad}).code, kExitFailed);
    EXPECT_EQ(run({"verify", bad, "--source", kEa}).code, kExitFailed);

    g(1, 4) += 1;  // now also differs mod 2
    const std::string worse = write("worse.code", format_code_file(CodeSpec(c.q(), c.n(), g, true, c.declared())));
    EXPECT_EQ(run({"verify", worse, "--source", kEa}).code, kExitFailed);
    EXPECT_EQ(run({"verify", kEa}).code, kExitFailed);
}
