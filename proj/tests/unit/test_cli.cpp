// Copyright 2026 The xstate-geometry Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xstate/cli.hpp"

namespace fs = std::filesystem;
using xstate::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("xstate_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST(Cli, CatalogTable) {
    const Result r = call({"catalog", "--format", "table"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("31 hyperplanes: 15/10/6"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, CatalogJson) {
    const Result r = call({"catalog", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["hyperplanes"].size(), 31u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"catalog", "--format", "xml"}).code, 64);
    EXPECT_EQ(call({"catalog", "--bogus"}).code, 64);
    EXPECT_EQ(call({}).code, 64);
    EXPECT_EQ(call({"frobnicate"}).code, 64);
    EXPECT_EQ(call({"verify", "region", "--draws", "0"}).code, 64);
    EXPECT_EQ(call({"verify", "everything"}).code, 64);
    EXPECT_EQ(call({"region", "--c", "0.1"}).code, 64);
    EXPECT_EQ(call({"region", "--c", "a,b"}).code, 64);
    EXPECT_EQ(call({"region", "--resolution", "1"}).code, 64);
    EXPECT_EQ(call({"heatmap", "--type", "3"}).code, 64);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, AnalyzeEpr) {
    const fs::path f = temp_file(
        "epr.json", R"({"hyperplane": {"kind": "perp", "id": "ZZ"}, "coefficients": {"XX": 1, "YY": -1, "ZZ": 1}})");
    const Result r = call({"analyze", f.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["entangled"], true);
    EXPECT_EQ(j["m_value"], 2.0);
    EXPECT_EQ(j["region_classification"], "entangled");
}

TEST(Cli, AnalyzeZero) {
    const fs::path f = temp_file("zero.json", R"({"hyperplane": {"kind": "perp", "id": "XY"}, "coefficients": {}})");
    const Result r = call({"analyze", f.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["separable"], true);
    EXPECT_EQ(j["m_value"], 0.0);
}

TEST(Cli, AnalyzeErrors) {
    const fs::path off = temp_file("off.json", R"({"hyperplane": {"kind": "perp", "id": "ZZ"}, "coefficients": {"XZ": 0.2}})");
    EXPECT_EQ(call({"analyze", off.string()}).code, 65);
    const fs::path broken = temp_file("broken.json", "{");
    EXPECT_EQ(call({"analyze", broken.string()}).code, 65);
    EXPECT_EQ(call({"analyze", "/nonexistent/state.json"}).code, 2);
}

TEST(Cli, OutRedirects) {
    const fs::path target = fs::temp_directory_path() / "xstate_cli_region.csv";
    fs::remove(target);
    const Result r = call({"region", "--beta0", "0.45", "--c", "0.4,-0.3", "--resolution", "4", "--out", target.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(target);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "beta1,beta2,class");
    EXPECT_EQ(call({"catalog", "--out", "/nonexistent/dir/out.txt"}).code, 2);
}

TEST(Cli, HeatmapAndCurve) {
    const Result h = call({"heatmap", "--beta0", "0.45", "--c", "0.4,-0.3", "--resolution", "3"});
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(h.out.substr(0, h.out.find('\n')), "beta1,beta2,m");
    EXPECT_EQ(std::count(h.out.begin(), h.out.end(), '\n'), 10);
    const Result c = call({"curve", "--k", "1", "--beta0", "0.45", "--c", "0.6,0"});
    ASSERT_EQ(c.code, 0);
    EXPECT_DOUBLE_EQ(nlohmann::json::parse(c.out)["circle"]["r"].get<double>(), 0.8);
}

TEST(Cli, VerifyPrintsSeedAndIsDeterministic) {
    const Result a = call({"verify", "region", "--draws", "200"});
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_NE(a.out.find("seed: 42"), std::string::npos);
    EXPECT_EQ(call({"verify", "region", "--draws", "200"}).out, a.out);
    const Result g = call({"verify", "geometry", "--seed", "7"});
    EXPECT_EQ(g.code, 0);
    EXPECT_NE(g.out.find("31 hyperplanes: 15/10/6"), std::string::npos);
    EXPECT_NE(g.out.find("seed: 7"), std::string::npos);
}
