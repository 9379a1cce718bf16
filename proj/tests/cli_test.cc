// Copyright 2026 The polarspread Authors
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

#include "polarspread/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace polarspread;

namespace {

struct Ran {
    int code;
    std::string out;
    std::string err;
};

Ran run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "polarspread");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    auto *old_out = std::cout.rdbuf(out.rdbuf());
    auto *old_err = std::cerr.rdbuf(err.rdbuf());
    int code = cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

Ran run_config(const RunConfig &config) {
    std::ostringstream out, err;
    int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, construct_classical_json) {
    auto r = run_args({"construct", "--d", "3", "--n", "2", "--method", "classical"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["version"], kToolVersion);
    EXPECT_TRUE(j["timing"].is_null());
    EXPECT_EQ(j["config"]["d"], 3);
    EXPECT_EQ(j["result"]["size"], 10);
    EXPECT_EQ(j["result"]["spread"]["generators"].size(), 10u);
}

TEST(cli, deterministic_output) {
    for (std::vector<std::string> args : {std::vector<std::string>{"construct", "--d", "5", "--method", "tu", "--seed", "3"},
                                          std::vector<std::string>{"construct", "--d", "3", "--method", "uset"},
                                          std::vector<std::string>{"conjecture", "--d", "2", "--n", "3", "--brute-force"},
                                          std::vector<std::string>{"mub", "--d", "2", "--n", "2"}}) {
        auto a = run_args(args);
        auto b = run_args(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(cli, timing_is_opt_in) {
    auto r = run_args({"construct", "--d", "2", "--method", "classical", "--timing"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["timing"].is_object());
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run_args({}).code, 1);
    EXPECT_EQ(run_args({"bogus"}).code, 1);
    EXPECT_EQ(run_args({"construct", "--d", "4", "--method", "classical"}).code, 1);
    EXPECT_EQ(run_args({"construct", "--d", "3", "--method", "nope"}).code, 1);
    EXPECT_EQ(run_args({"construct", "--d", "3", "--method", "sr", "--k", "9"}).code, 1);
    EXPECT_EQ(run_args({"search", "--d", "5", "--n", "2"}).code, 1);
    EXPECT_EQ(run_args({"classify", "--d", "3"}).code, 1);
    EXPECT_EQ(run_args({"verify", "--method", "complete", "--from-file", "/nonexistent/x"}).code, 1);
}

TEST(cli, failed_certificate_exit_code) {
    auto r = run_args({"search", "--d", "2", "--n", "2", "--method", "first-of-size", "--size", "4"});
    EXPECT_EQ(r.code, 2);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["found"], false);
}

TEST(cli, text_format_and_file_round_trip) {
    auto dir = std::filesystem::temp_directory_path() / "polarspread_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "sr.txt").string();

    auto made = run_args({"construct", "--d", "5", "--method", "sr", "--k", "1", "--format", "text", "--out", path});
    ASSERT_EQ(made.code, 0) << made.err;
    EXPECT_TRUE(made.out.empty());

    auto verify = run_args({"verify", "--method", "complete", "--d", "5", "--from-file", path, "--format", "text"});
    EXPECT_EQ(verify.code, 0) << verify.err;
    EXPECT_NE(verify.out.find("result.complete.complete=true"), std::string::npos);

    auto mub = run_args({"mub", "--d", "5", "--from-file", path});
    EXPECT_EQ(mub.code, 0) << mub.err;
    EXPECT_EQ(nlohmann::json::parse(mub.out)["result"]["valid"], true);

    {
        std::ofstream bad(path);
        bad << "# d=5 n=2\n1,0,0,0|0,1,0,0\n";
    }
    EXPECT_EQ(run_args({"verify", "--method", "complete", "--d", "5", "--from-file", path}).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(cli, config_echo) {
    RunConfig c;
    c.command = "conjecture";
    c.d = 3;
    auto j = config_to_json(c);
    EXPECT_EQ(j["command"], "conjecture");
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["format"], "json");
    auto r = run_config(c);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["config"], j);
}
