// Copyright 2026 The hms Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "hms/error.h"
#include "hms/version.h"
#include "json.hpp"
#include "table.h"

using namespace hms;
using namespace hms::cli;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Parses a one-row CSV into column -> field.
std::map<std::string, std::string> single_row(const std::string &csv) {
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    std::map<std::string, std::string> fields;
    std::istringstream hs(header), rs(row);
    std::string h, f;
    while (std::getline(hs, h, ',') && std::getline(rs, f, ',')) {
        fields[h] = f;
    }
    return fields;
}

double field(const std::map<std::string, std::string> &row, const std::string &name) {
    return std::stod(row.at(name));
}

}  // namespace

TEST(Cli, single) {
    auto r = invoke({"single", "--epsilon", "1", "--state-r", "1", "--state-theta", "0", "--dir-theta", "0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(field(single_row(r.out), "p_yes"), 1.0);

    r = invoke({"single", "--epsilon", "1", "--state-r", "0", "--dir-theta", "1.0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(field(single_row(r.out), "p_yes"), 0.5);

    // cos(1.3181) ~ 0.25.
    r = invoke({"single", "--epsilon", "0.5", "--state-r", "1", "--state-theta", "0", "--dir-theta", "1.3181"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NEAR(field(single_row(r.out), "p_yes"), 0.75, 1e-4);
}

TEST(Cli, joint_and_classify) {
    auto r = invoke({"joint", "--epsilon", "1", "--theta", "0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto row = single_row(r.out);
    EXPECT_EQ(field(row, "p1"), 0.0);
    EXPECT_EQ(field(row, "p2"), 0.5);
    EXPECT_EQ(field(row, "E"), -1.0);

    r = invoke({"classify", "--epsilon", "1", "--theta", "1.5707963"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    // cos(1.5707963) ~ 2.7e-8; the default 1e-9 tolerance is too tight.
    EXPECT_EQ(single_row(r.out).at("separated"), "false");
    r = invoke({"classify", "--epsilon", "1", "--theta", "1.5707963", "--tolerance", "1e-7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(single_row(r.out).at("separated"), "true");
    EXPECT_EQ(single_row(r.out).at("compatible"), "true");

    r = invoke({"classify", "--epsilon", "1", "--theta1", "1.5707963267948966", "--theta2", "0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(single_row(r.out).at("separated"), "true");
}

TEST(Cli, chsh) {
    auto r = invoke({"chsh", "--epsilon", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NEAR(field(single_row(r.out), "S"), 2 * std::sqrt(2.0), 1e-12);
    r = invoke({"chsh", "--epsilon", "0"});
    EXPECT_EQ(field(single_row(r.out), "S"), 4.0);
}

TEST(Cli, vessels) {
    auto r = invoke({"vessels", "--kind", "alpha-beta"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto row = single_row(r.out);
    EXPECT_EQ(row.at("compatible"), "false");
    EXPECT_EQ(row.at("classical_joint"), "false");
    EXPECT_EQ(row.at("p1"), "0.5");
    EXPECT_EQ(row.at("p3"), "0.5");

    r = invoke({"vessels", "--kind", "alpha-alpha"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(single_row(r.out).at("p1"), "0");
    EXPECT_EQ(single_row(r.out).at("compatible"), "false");
}

TEST(Cli, simulate_requires_seed_and_is_reproducible) {
    auto missing = invoke({"simulate", "--epsilon", "1", "--theta", "1", "--trials", "1000"});
    EXPECT_NE(missing.code, kExitOk);
    EXPECT_FALSE(missing.err.empty());

    std::vector<std::string> args{"simulate", "--epsilon", "0.7", "--theta", "1", "--trials", "200000", "--seed", "3"};
    auto a = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    auto b = invoke(args);
    EXPECT_EQ(a.out, b.out);
    auto args_workers = args;
    args_workers.insert(args_workers.end(), {"--workers", "3"});
    EXPECT_EQ(invoke(args_workers).out, a.out);

    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    auto j1 = invoke(json_args);
    ASSERT_EQ(j1.code, kExitOk) << j1.err;
    EXPECT_EQ(j1.out, invoke(json_args).out);
    auto doc = nlohmann::json::parse(j1.out);
    EXPECT_EQ(doc["meta"]["seed"], 3);
    EXPECT_EQ(doc["meta"]["version"], kVersion);
    EXPECT_EQ(doc["meta"]["command"], "simulate");
    EXPECT_EQ(doc["meta"]["flags"]["trials"], "200000");
    ASSERT_EQ(doc["rows"].size(), 4u);
    uint64_t total = 0;
    for (const auto &row : doc["rows"]) {
        total += row["count"].get<uint64_t>();
    }
    EXPECT_EQ(total, 200000u);
}

TEST(Cli, scan_csv_round_trips) {
    auto r = invoke({"scan", "--epsilon", "0,0.3,0.5,1", "--theta-points", "37"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    auto parsed = read_scan_csv(in);

    std::vector<double> eps{0, 0.3, 0.5, 1};
    auto expected = scan(eps, theta_grid(37));
    ASSERT_EQ(parsed.size(), expected.size());
    for (size_t k = 0; k < parsed.size(); ++k) {
        EXPECT_EQ(parsed[k], expected[k]) << "row " << k;
    }
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "epsilon,theta,p1,p2,p3,p4,E,compatible,separated,classical_joint");
    EXPECT_EQ(to_csv(scan_table(parsed)), r.out);
}

TEST(Cli, scan_json_mirrors_csv) {
    auto csv = invoke({"scan", "--epsilon", "0.5", "--theta", "0,1,2"});
    auto json = invoke({"scan", "--epsilon", "0.5", "--theta", "0,1,2", "--format", "json"});
    ASSERT_EQ(json.code, kExitOk) << json.err;
    std::istringstream in(csv.out);
    auto rows = read_scan_csv(in);
    auto doc = nlohmann::json::parse(json.out);
    ASSERT_EQ(doc["rows"].size(), rows.size());
    for (size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(doc["rows"][k]["p1"].get<double>(), rows[k].p1);
        EXPECT_EQ(doc["rows"][k]["E"].get<double>(), rows[k].correlation);
        EXPECT_EQ(doc["rows"][k]["separated"].get<bool>(), rows[k].separated);
    }
    EXPECT_TRUE(doc["meta"]["seed"].is_null());
}

TEST(Cli, writes_output_file) {
    auto path = std::filesystem::temp_directory_path() / "hms_cli_test_chsh.csv";
    std::filesystem::remove(path);
    auto r = invoke({"chsh", "--epsilon", "1", "--output", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    EXPECT_EQ(contents.str(), invoke({"chsh", "--epsilon", "1"}).out);
    std::filesystem::remove(path);

    auto bad = invoke({"chsh", "--epsilon", "1", "--output", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(bad.code, kExitIo);
}

TEST(Cli, validation_failures_exit_nonzero) {
    EXPECT_EQ(invoke({"chsh", "--epsilon", "1.5"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"joint", "--epsilon", "0.5", "--theta", "4"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"single", "--epsilon", "0.5", "--state-r", "2"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"simulate", "--epsilon", "1", "--seed", "1", "--trials", "0"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"scan", "--epsilon", "0.5", "--tolerance", "-1"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"vessels", "--kind", "beta-beta"}).code, kExitUsage);
    EXPECT_EQ(invoke({"joint", "--epsilon", "1", "--theta", "1", "--theta1", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"chsh", "--epsilon", "abc"}).code, kExitUsage);
    EXPECT_EQ(invoke({}).code, kExitUsage);
    auto err = invoke({"chsh", "--epsilon", "1.5"}).err;
    EXPECT_NE(err.find("epsilon"), std::string::npos);
}

TEST(Cli, version_and_help) {
    auto v = invoke({"--version"});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_NE(v.out.find(kVersion), std::string::npos);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}
