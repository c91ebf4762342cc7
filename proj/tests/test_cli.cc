// Copyright 2026 The nicebases Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "nb/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nb/io.h"
#include "test_util.h"

using namespace nb;
using nb_test::data_path;

namespace {

struct CliRun {
    int rc;
    std::string out;
    std::string err;

    Json json() const {
        return Json::parse(out);
    }
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("nb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    std::string build_cache(const std::string &gen) const {
        std::string cache = path(gen + ".json");
        CliRun r = run({"code", "build", "--c", data_path(gen), "--out", cache, "--no-timing"});
        EXPECT_EQ(r.rc, 0) << r.err;
        return cache;
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST(Parse, reads_header_rows_and_comments) {
    std::istringstream in("# comment\n\n2 3 2\n1 0 1\n0 1 1\n");
    GeneratorFile f = parse_generators(in);
    EXPECT_EQ(f.n, 2u);
    EXPECT_EQ(f.length, 3u);
    EXPECT_EQ(f.rows, (std::vector<Word>{{1, 0, 1}, {0, 1, 1}}));
}

TEST(Parse, entry_out_of_range_cites_line) {
    std::istringstream in("3 3 2\n# rows follow\n0 1 2\n1 3 0\n");
    try {
        parse_generators(in, "bad.gen");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 4u);
        EXPECT_NE(std::string(e.what()).find("bad.gen:4"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
}

TEST(Parse, malformed_inputs) {
    for (const char *text : {"", "2 3\n", "1 3 0\n", "2 3 1\n1 0\n", "2 3 2\n1 0 1\n", "2 3 1\n1 0 x\n",
                             "2 3 1\n1 0 1\n0 0 0\n", "2 3 1\n-1 0 1\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(parse_generators(in), ParseError) << "input: " << text;
    }
}

TEST(Parse, shipped_data_files) {
    EXPECT_EQ(nb_test::load_code("hamming8.gen").size(), 16u);
    EXPECT_EQ(nb_test::load_code("tetracode.gen").size(), 9u);
    EXPECT_EQ(nb_test::load_code("golay12.gen").size(), 729u);
}

TEST(Json, cycint_round_trip) {
    std::mt19937 rng(91);
    for (std::uint32_t m = 1; m <= 12; m++) {
        CycInt a = nb_test::random_cycint(rng, m);
        Json j = to_json(a);
        EXPECT_EQ(j["order"], m);
        EXPECT_EQ(cycint_from_json(j), a);
    }
    CycInt big = (CycInt(3) + CycInt::zeta(5)).pow(90);
    EXPECT_EQ(cycint_from_json(Json::parse(to_json(big).dump())), big);
}

TEST(Json, code_cache_round_trip) {
    const PuncturedQuantumCode &c = nb_test::steane();
    Json j = code_cache_json(c);
    PuncturedQuantumCode back = load_code_cache(Json::parse(j.dump()));
    EXPECT_EQ(back.generators, c.generators);
    EXPECT_EQ(back.c0, c.c0);
    Json tampered = j;
    tampered["generators"][0]["x"][0] = 1 - tampered["generators"][0]["x"][0].get<int>();
    EXPECT_THROW(load_code_cache(tampered), std::runtime_error);
    Json summary = code_summary_json(c);
    EXPECT_EQ(summary["n"], 2);
    EXPECT_EQ(summary["l"], 7);
    EXPECT_EQ(summary["k_logical"], 1);
    EXPECT_EQ(summary["generators"].size(), 6u);
}

TEST_F(CliTest, basis_verify_shift_clock) {
    CliRun r = run({"basis", "verify", "--shift-clock", "3", "--no-timing"});
    EXPECT_EQ(r.rc, 0) << r.err;
    Json j = r.json();
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["tool"], "nicebases");
    EXPECT_FALSE(j.contains("timing"));
    EXPECT_GE(j["checks"].size(), 5u);
}

TEST_F(CliTest, basis_egner) {
    CliRun r = run({"basis", "egner", "--no-timing"});
    EXPECT_EQ(r.rc, 0) << r.err;
    bool found = false;
    Json j = r.json();
    for (const auto &c : j["checks"]) {
        EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
        found |= c["name"] == "explicit_isomorphism_Z2_x_D4";
    }
    EXPECT_TRUE(found);
}

TEST_F(CliTest, usage_errors_exit_two) {
    EXPECT_EQ(run({"basis", "verify", "--shift-clock", "1"}).rc, 2);
    EXPECT_EQ(run({"frobnicate"}).rc, 2);
    EXPECT_EQ(run({}).rc, 2);
    EXPECT_EQ(run({"basis", "verify", "--format", "xml", "--shift-clock", "3"}).rc, 2);
}

TEST_F(CliTest, input_errors_exit_three) {
    CliRun missing = run({"code", "build", "--c", path("absent.gen"), "--out", path("x.json")});
    EXPECT_EQ(missing.rc, 3);
    std::string bad = write("bad.gen", "2 4 1\n1 1 2 1\n");
    CliRun parse = run({"code", "build", "--c", bad, "--out", path("x.json")});
    EXPECT_EQ(parse.rc, 3);
    EXPECT_NE(parse.err.find(":2:"), std::string::npos) << parse.err;
}

TEST_F(CliTest, steane_build_check_and_table) {
    std::string cache = build_cache("hamming8.gen");
    CliRun r = run({"code", "check", "--code", cache, "--e", "1", "--exhaustive", "--no-timing"});
    EXPECT_EQ(r.rc, 0) << r.err;
    Json j = r.json();
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_TRUE(j["result"].contains("lambda_table"));
    EXPECT_EQ(j["result"]["code"]["l"], 7);
}

TEST_F(CliTest, tetracode_check_fails_with_exit_one) {
    std::string cache = build_cache("tetracode.gen");
    CliRun r = run({"code", "check", "--code", cache, "--e", "1", "--exhaustive", "--no-timing"});
    EXPECT_EQ(r.rc, 1);
    bool agree = false;
    Json j = r.json();
    for (const auto &c : j["checks"]) {
        if (c["name"] == "kl_fast_matches_exhaustive") {
            agree = c["pass"].get<bool>();
        }
    }
    EXPECT_TRUE(agree);
}

TEST_F(CliTest, steane_simulate_residual_histogram) {
    std::string cache = build_cache("hamming8.gen");
    CliRun r = run({"simulate", "--code", cache, "--e", "1", "--sweep", "all<=2", "--no-timing"});
    EXPECT_EQ(r.rc, 0) << r.err;
    Json sweep = r.json()["result"]["sweep"];
    EXPECT_EQ(sweep["invalid_residuals"], 0);
    EXPECT_EQ(sweep["recovered"], 44);
    EXPECT_GT(sweep["residuals"].size(), 1u);
}

TEST_F(CliTest, decode_table_and_transversal) {
    std::string cache = build_cache("hamming8.gen");
    EXPECT_EQ(run({"code", "decode-table", "--code", cache, "--e", "1"}).rc, 0);
    EXPECT_EQ(run({"transversal", "verify", "--code", cache, "--gate", "all"}).rc, 0);
    EXPECT_EQ(run({"transversal", "verify", "--code", cache, "--gate", "bogus"}).rc, 2);
}

TEST_F(CliTest, deterministic_payload) {
    std::string cache = build_cache("hamming8.gen");
    std::vector<std::string> args{"code", "check", "--code", cache, "--e", "1", "--exhaustive", "--no-timing"};
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    CliRun timed = run({"code", "check", "--code", cache, "--e", "1"});
    Json t = timed.json();
    EXPECT_TRUE(t.contains("timing"));
    t.erase("timing");
    Json untimed = run({"code", "check", "--code", cache, "--e", "1", "--no-timing"}).json();
    EXPECT_EQ(t["checks"], untimed["checks"]);
}

TEST_F(CliTest, env_guard_override) {
    std::string cache = build_cache("hamming8.gen");
    setenv("NICE_MAX_AMBIENT", "10", 1);
    CliRun r = run({"code", "check", "--code", cache, "--e", "1"});
    unsetenv("NICE_MAX_AMBIENT");
    EXPECT_EQ(r.rc, 3);
    EXPECT_NE(r.err.find("max_ambient"), std::string::npos) << r.err;
    EXPECT_EQ(run({"code", "check", "--code", cache, "--e", "1", "--no-timing"}).rc, 0);
}

TEST_F(CliTest, text_format_and_output_file) {
    std::string out = path("report.json");
    CliRun r = run({"--format", "text", "--output", out, "basis", "verify", "--qubit-det-one"});
    EXPECT_EQ(r.rc, 0) << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    std::ifstream in(out);
    Json j = Json::parse(in);
    EXPECT_TRUE(j["all_passed"].get<bool>());
}
