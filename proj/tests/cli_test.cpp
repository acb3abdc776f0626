// Copyright 2026 The mubking Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using mubking::run_cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("mubking_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
    auto ok = run({"verify", "--suite", "all", "--dim", "4"});
    EXPECT_EQ(ok.code, mubking::kExitOk) << ok.err;
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run({"verify", "--dim", "6"}).code, mubking::kExitUsage);
    EXPECT_EQ(run({"verify", "--dim", "8", "--mode", "modular"}).code, mubking::kExitUsage);
    EXPECT_EQ(run({"verify", "--dim", "4", "--bogus"}).code, mubking::kExitUsage);
    EXPECT_EQ(run({"verify", "--dim", "4", "--suite", "nope"}).code, mubking::kExitUsage);
    EXPECT_EQ(run({}).code, mubking::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, mubking::kExitOk);
    EXPECT_EQ(run({"--version"}).code, mubking::kExitOk);
}

TEST(Cli, VerifyJson) {
    auto r = run({"verify", "--dim", "3", "--suite", "king", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["version"], "0.1.0");
    EXPECT_EQ(j["dim"], 3);
}

TEST(Cli, AdmissibleDimensions) {
    using mubking::admissible_dim;
    for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        EXPECT_TRUE(admissible_dim("galois", n)) << n;
    }
    EXPECT_FALSE(admissible_dim("galois", 6));
    EXPECT_FALSE(admissible_dim("galois", 25));
    EXPECT_TRUE(admissible_dim("modular", 15));
    EXPECT_TRUE(admissible_dim("modular", 21));
    EXPECT_FALSE(admissible_dim("modular", 4));
    EXPECT_FALSE(admissible_dim("modular", 23));
}

TEST(Cli, KingExhaustive) {
    auto r = run({"king", "run", "--dim", "2", "--exhaustive", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["success_rate"], 1.0);
    EXPECT_EQ(j["trials"], 12);
    EXPECT_EQ(j["successes"], 12);
    EXPECT_EQ(j["histogram"].size(), 12u);
    auto text = run({"king", "run", "--dim", "9", "--mode", "modular", "--trials", "500"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("successes 500/500"), std::string::npos) << text.out;
}

TEST(Cli, FieldInfo) {
    auto r = run({"field", "info", "--p", "2", "--m", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("add\n0,1\n1,0\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("mul\n0,0\n0,1\n"), std::string::npos);
    auto j = json::parse(run({"field", "info", "--p", "2", "--m", "2", "--json"}).out);
    EXPECT_EQ(j["polynomial"], "x^2 + x + 1");
    EXPECT_EQ(j["mul"][2][2], 3);
    EXPECT_EQ(j["mul"][2][3], 1);
    EXPECT_EQ(run({"field", "info", "--p", "6", "--m", "1"}).code, 2);
}

TEST(Cli, JsonIsDeterministic) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"field", "info", "--p", "3", "--m", "2", "--json"},
             {"pauli", "dump", "--dim", "3", "--json"},
             {"mub", "--dim", "15", "--mode", "modular", "--json"},
             {"bell", "map", "--dim", "4", "--k", "2", "--json"},
             {"king", "run", "--dim", "4", "--trials", "1000", "--json"},
             {"verify", "--dim", "8", "--json"},
         }) {
        auto a = run(args);
        auto b = run(args);
        ASSERT_EQ(a.code, 0) << args[0] << " " << a.err;
        EXPECT_EQ(a.out, b.out) << args[0];
        json j = json::parse(a.out);
        EXPECT_EQ(j["tool"], "mubking");
        EXPECT_EQ(j["version"], "0.1.0");
        EXPECT_TRUE(j.contains("polynomial"));
    }
}

TEST(Cli, MubModularReport) {
    auto j = json::parse(run({"mub", "--dim", "15", "--mode", "modular", "--json"}).out);
    EXPECT_TRUE(j["polynomial"].is_null());
    EXPECT_EQ(j["characteristic"], 3);
    auto csv = run({"mub", "--dim", "3", "--csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_FALSE(csv.out.empty());
}

TEST(Cli, WignerStateFile) {
    std::string good = write_temp("plus.json", "[[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]");
    auto r = run({"wigner", "--dim", "2", "--state", good, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    double total = 0;
    for (const auto &row : j["wigner"]) {
        for (const auto &v : row) {
            total += v.get<double>();
        }
    }
    EXPECT_NEAR(total, 2.0, 1e-9);
    EXPECT_EQ(run({"wigner", "--dim", "2", "--state", good, "--weyl"}).code, 0);

    std::string bad = write_temp("nonherm.json", "[[[0.5,0],[1,0]],[[0,0],[0.5,0]]]");
    EXPECT_EQ(run({"wigner", "--dim", "2", "--state", bad}).code, 1);
    EXPECT_EQ(run({"wigner", "--dim", "3", "--state", good}).code, 2);
    EXPECT_EQ(run({"wigner", "--dim", "2", "--state", "/nonexistent/state.json"}).code, 2);
    EXPECT_EQ(run({"wigner", "--dim", "9", "--mode", "modular", "--state", good}).code, 2);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST(Cli, PauliAndBell) {
    auto p = run({"pauli", "dump", "--dim", "2", "--class", "2"});
    EXPECT_EQ(p.code, 0) << p.err;
    auto b = json::parse(run({"bell", "map", "--dim", "2", "--k", "1", "--json"}).out);
    EXPECT_EQ(b["dim"], 2);
    EXPECT_EQ(run({"bell", "map", "--dim", "2", "--k", "0"}).code, 2);
}
