// Copyright 2026 The ftpost Authors
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


// End-to-end checks of the ftpost command-line tool.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <gtest/gtest.h>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args) {
    std::string cmd = std::string(FTPOST_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    Result r;
    if (!pipe) {
        return r;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.push_back("");
    }
    return parts;
}

struct Csv {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string &text) {
    Csv c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            c.comments.push_back(line);
        } else if (c.header.empty()) {
            c.header = split(line, ',');
        } else {
            c.rows.push_back(split(line, ','));
        }
    }
    return c;
}

// Every CSV cell must equal the JSON value at the same row and column.
void expect_same_values(const Csv &csv, const nlohmann::json &rows) {
    ASSERT_EQ(rows.size(), csv.rows.size());
    for (size_t r = 0; r < csv.rows.size(); r++) {
        ASSERT_EQ(csv.rows[r].size(), csv.header.size());
        for (size_t k = 0; k < csv.header.size(); k++) {
            const auto &cell = csv.rows[r][k];
            const auto &v = rows[r].at(csv.header[k]);
            if (v.is_number()) {
                EXPECT_EQ(v.get<double>(), std::stod(cell)) << csv.header[k];
            } else if (v.is_null()) {
                EXPECT_TRUE(cell.empty() || cell == "NaN");
            } else {
                EXPECT_EQ(v.get<std::string>(), cell);
            }
        }
    }
}

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("ftpost_cli_test_" + std::to_string(getpid())) / name;
    fs::create_directories(p.parent_path());
    return p;
}

}  // namespace

TEST(cli, hashing_values) {
    const std::pair<const char *, const char *> cases[] = {
        {"depolarizing", "8.27515"}, {"knill", "6.9024"}, {"forward", "4.81816"}};
    for (auto [model, want] : cases) {
        auto r = run(std::string("hashing --model ") + model);
        ASSERT_EQ(r.code, 0) << model;
        auto csv = parse_csv(r.out);
        ASSERT_EQ(csv.rows.size(), 1u);
        EXPECT_EQ(csv.header[1], "p_threshold_percent");
        EXPECT_EQ(csv.rows[0][0], model);
        EXPECT_EQ(csv.rows[0][1], want);
        EXPECT_EQ(csv.rows[0][2], csv.rows[0][4]);
    }
    auto raw = run("hashing --model forward --raw");
    ASSERT_EQ(raw.code, 0);
    EXPECT_NEAR(std::stod(parse_csv(raw.out).rows[0][1]), 0.0481816, 5e-8);
}

TEST(cli, hashing_json_matches_csv) {
    auto csv = run("hashing --model depolarizing --model knill --model forward");
    auto json = run("hashing --model depolarizing --model knill --model forward --format json");
    ASSERT_EQ(csv.code, 0);
    ASSERT_EQ(json.code, 0);
    auto j = nlohmann::json::parse(json.out);
    expect_same_values(parse_csv(csv.out), j.at("hashing"));
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("bogus").code, 64);
    EXPECT_EQ(run("hashing").code, 64);
    EXPECT_EQ(run("hashing --model quantum").code, 64);
    EXPECT_EQ(run("hashing --model knill:r=2").code, 64);
    EXPECT_EQ(run("concat --noise one-type").code, 64);
    EXPECT_EQ(run("concat --noise one-type --model knill --seed 1").code, 64);
    EXPECT_EQ(run("concat --code 2317 --noise one-type --seed 1").code, 64);
    EXPECT_EQ(run("hashing --model knill --format xml").code, 64);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(cli, sweep) {
    auto path = scratch("sweep.csv");
    auto r = run("sweep --rmin 0 --rmax 1 --steps 5 --assert-monotone --out " + path.string());
    ASSERT_EQ(r.code, 0);
    std::string first = slurp(path);
    auto csv = parse_csv(first);
    ASSERT_EQ(csv.header, (std::vector<std::string>{"r", "threshold_percent"}));
    ASSERT_EQ(csv.rows.size(), 5u);
    EXPECT_EQ(csv.rows[0][0], "0");
    EXPECT_EQ(csv.rows[4][0], "1");
    EXPECT_NEAR(std::stod(csv.rows[0][1]), 8.27515, 5e-6);
    EXPECT_NEAR(std::stod(csv.rows[4][1]), 6.90240, 5e-6);
    // 9 significant digits.
    EXPECT_EQ(csv.rows[0][1].size(), 10u);

    ASSERT_EQ(run("sweep --rmin 0 --rmax 1 --steps 5 --assert-monotone --out " + path.string()).code, 0);
    EXPECT_EQ(slurp(path), first);

    auto json = run("sweep --rmin 0 --rmax 1 --steps 5 --format json");
    ASSERT_EQ(json.code, 0);
    expect_same_values(csv, nlohmann::json::parse(json.out).at("sweep"));
}

TEST(cli, concat) {
    const std::string args = "concat --code 713 --noise one-type --seed 1 --population 2000 --seeds 2";
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto csv = parse_csv(a.out);
    ASSERT_EQ(csv.rows.size(), 1u);
    EXPECT_EQ(csv.header[2], "threshold_percent");
    double p = std::stod(csv.rows[0][2]);
    EXPECT_GT(p, 10.5);
    EXPECT_LT(p, 11.4);
    EXPECT_EQ(csv.rows[0][4], "1");
    EXPECT_EQ(csv.rows[0][5], "2000");

    auto json = run(args + " --format json");
    ASSERT_EQ(json.code, 0);
    expect_same_values(csv, nlohmann::json::parse(json.out).at("concat"));

    EXPECT_EQ(run(args + " --threads 2").out, a.out);
    EXPECT_EQ(run(args + " --lo 0.01 --hi 0.02").code, 2);
    EXPECT_EQ(run(args + " --max-levels 1").code, 3);
}

TEST(cli, tables) {
    auto dir = scratch("tables");
    auto r = run("tables --out-dir " + dir.string());
    ASSERT_EQ(r.code, 0);

    auto hashing = parse_csv(slurp(dir / "hashing.csv"));
    EXPECT_EQ(hashing.rows.size(), 3u);
    ASSERT_EQ(hashing.comments.size(), 3u);
    EXPECT_EQ(hashing.comments[1].rfind("# git ", 0), 0u);
    EXPECT_EQ(hashing.comments[2], "# seed none");

    auto capacity = parse_csv(slurp(dir / "capacity.csv"));
    ASSERT_GE(capacity.rows.size(), 1u);
    EXPECT_EQ(capacity.rows[0][0], "hashing");
    EXPECT_EQ(capacity.rows[0][1], "11.0028");
    EXPECT_NEAR(std::stod(capacity.rows[0][2]), 6.3097, 5e-4);

    auto fixed = parse_csv(slurp(dir / "fixedpoints.csv"));
    ASSERT_EQ(fixed.rows.size(), 4u);
    EXPECT_EQ(fixed.rows[0][0], "713");
    EXPECT_EQ(fixed.rows[0][1], "knill");
    EXPECT_EQ(fixed.rows[3][0], "2317");
    EXPECT_NEAR(std::stod(fixed.rows[3][2]), 3.5471, 5e-3);
    EXPECT_NEAR(std::stod(fixed.rows[3][3]), 0.85108, 5e-4);

    auto golay = parse_csv(slurp(dir / "thresholds_2317.csv"));
    ASSERT_EQ(golay.rows.size(), 3u);
    EXPECT_EQ(golay.rows[2][0], "forward");
    EXPECT_NEAR(std::stod(golay.rows[2][4]), 4.801, 2e-3);

    std::string before = slurp(dir / "fixedpoints.csv");
    ASSERT_EQ(run("tables --out-dir " + dir.string()).code, 0);
    EXPECT_EQ(slurp(dir / "fixedpoints.csv"), before);

    ASSERT_EQ(run("tables --format json --out-dir " + dir.string()).code, 0);
    auto j = nlohmann::json::parse(slurp(dir / "tables.json")).at("tables");
    expect_same_values(hashing, j.at("hashing"));
    expect_same_values(capacity, j.at("capacity"));
    expect_same_values(fixed, j.at("fixedpoints"));
    expect_same_values(golay, j.at("thresholds_2317"));
    fs::remove_all(dir.parent_path());
}
