// Copyright 2026 The tfdcs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::initializer_list<std::string> args) {
    std::vector<std::string> owned{"tfdcs"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : owned) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tfdcs::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path p = fs::temp_directory_path() / "tfdcs_cli_tests";
    fs::create_directories(p);
    return p;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> comments;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cells.push_back(c);
    return cells;
}

Table read_csv(const std::string& p) {
    Table t;
    std::ifstream f(p);
    std::string line;
    REQUIRE(std::getline(f, line));
    t.header = split(line);
    while (std::getline(f, line)) {
        auto cells = split(line);
        if (line.rfind("# ", 0) == 0) {
            t.comments.emplace_back(cells[0].substr(2), std::stod(cells[1]));
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) row.push_back(std::stod(c));
        t.rows.push_back(row);
    }
    return t;
}

double gauss(double x, double mean, double sigma) {
    return std::exp(-(x - mean) * (x - mean) / (2 * sigma * sigma)) /
           (2 * std::numbers::pi * sigma * sigma);
}

}  // namespace

TEST_CASE("cli: fig1") {
    const std::string p = path("fig1.csv");
    REQUIRE(cli({"--out", p, "fig1"}).code == 0);
    const std::string raw = slurp(p);
    CHECK(raw.find('\r') == std::string::npos);
    const Table t = read_csv(p);
    CHECK(t.header == std::vector<std::string>{"theta", "round", "trotter", "double"});
    REQUIRE(t.rows.size() == 200);
    CHECK(t.rows.front() == std::vector<double>{0, 1, 1, 1});
    CHECK(t.rows.back()[0] == 2.0);
    for (std::size_t i : {17u, 101u, 199u}) {
        const double th = t.rows[i][0];
        CHECK(std::abs(th - 2.0 * i / 199.0) < 1e-15);
        CHECK(t.rows[i][1] == doctest::Approx(std::exp(th)).epsilon(1e-15));
        CHECK(t.rows[i][2] == doctest::Approx(std::expm1(th) / th).epsilon(1e-15));
        CHECK(t.rows[i][3] == 1.0);
    }
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i][1] > t.rows[i][2]);
        CHECK(t.rows[i][2] > t.rows[i][3]);
    }
    CHECK(cli({"--out", p, "fig1", "--theta-min", "1", "--theta-max", "0.5"}).code == 2);
    CHECK(cli({"--out", p, "fig1", "--steps", "1"}).code == 2);
    CHECK(cli({"fig1", "--bogus"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("cli: fig2 and fig3 curves") {
    const std::string p2 = path("fig2.csv");
    REQUIRE(cli({"--out", p2, "fig2"}).code == 0);
    const Table t2 = read_csv(p2);
    REQUIRE(t2.header.size() == 4);
    CHECK(t2.header[1] == "p_trotter_theta_0.4");
    CHECK(t2.rows.size() == 801);
    const double thetas[] = {0.4, 0.6, 0.8};
    for (const auto& row : t2.rows)
        for (int k = 0; k < 3; ++k) {
            const double th = thetas[k];
            const double ref = gauss(row[0], 2.0 * std::expm1(th) / th, std::sinh(th) / std::sqrt(2.0));
            CHECK(std::abs(row[k + 1] - ref) <= 1e-13 * std::max(1.0, ref));
        }

    // the real-axis slice integrates to 1 / (sqrt(2 pi) sigma)
    for (double th : thetas) {
        const double sigma = std::sinh(th) / std::sqrt(2.0), mean = 2.0 * std::expm1(th) / th;
        std::ostringstream ts, lo, hi;
        ts.precision(17);
        lo.precision(17);
        hi.precision(17);
        ts << th;
        lo << mean - 10 * sigma;
        hi << mean + 10 * sigma;
        const std::string p = path("fig2_fine.csv");
        REQUIRE(cli({"--out", p, "fig2", "--thetas", ts.str(), "--points", "20001", "--mu-min",
                     lo.str(), "--mu-max", hi.str()})
                    .code == 0);
        const Table t = read_csv(p);
        const double h = t.rows[1][0] - t.rows[0][0];
        double sum = 0.0;
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            sum += t.rows[i][1] * ((i == 0 || i + 1 == t.rows.size()) ? 0.5 : 1.0);
        CHECK(std::abs(sum * h * std::sqrt(2 * std::numbers::pi) * sigma - 1.0) < 1e-6);
        const auto& mid = t.rows[10000];
        CHECK(std::abs(mid[0] - mean) < 1e-12);
        CHECK(mid[1] == doctest::Approx(1 / (std::numbers::pi * std::sinh(th) * std::sinh(th))).epsilon(1e-12));
    }

    const std::string p3 = path("fig3.csv");
    REQUIRE(cli({"--out", p3, "fig3", "--points", "2001", "--mu-min", "0", "--mu-max", "12"}).code == 0);
    const Table t3 = read_csv(p3);
    CHECK(t3.header == std::vector<std::string>{"mu", "p_round", "p_trotter", "p_double"});
    const double th = 0.4, sigma = std::sinh(th) / std::sqrt(2.0);
    const double means[] = {4 * std::exp(th), 4 * std::expm1(th) / th, 4.0};
    for (int k = 0; k < 3; ++k) {
        std::size_t arg = 0;
        for (std::size_t i = 0; i < t3.rows.size(); ++i)
            if (t3.rows[i][k + 1] > t3.rows[arg][k + 1]) arg = i;
        CHECK(std::abs(t3.rows[arg][0] - means[k]) <= 12.0 / 2000);
        for (const auto& row : t3.rows)
            CHECK(std::abs(row[k + 1] - gauss(row[0], means[k], sigma)) <= 1e-13);
    }
    CHECK(cli({"--out", p3, "fig3", "--theta", "0"}).code == 2);
    CHECK(cli({"--out", p3, "fig3", "--mu-min", "3", "--mu-max", "1"}).code == 2);
}

TEST_CASE("cli: converge") {
    const std::string p = path("converge.csv");
    REQUIRE(cli({"--out", p, "converge"}).code == 0);
    const Table t = read_csv(p);
    REQUIRE(t.rows.size() == 6);
    REQUIRE(t.comments.size() == 1);
    CHECK(t.comments[0].first == "slope");
    CHECK(std::abs(t.comments[0].second + 1.0) < 0.05);
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][1] < t.rows[i - 1][1]);

    CHECK(cli({"--out", p, "converge", "--n-list", "8,4"}).code == 2);
    CHECK(cli({"--out", p, "converge", "--n-list", "0,4"}).code == 2);
    CHECK(cli({"--out", p, "--cutoff", "4", "--tail-tol", "1e-12", "converge", "--alpha", "3",
               "--n-list", "1,2"})
              .code == 4);
}

TEST_CASE("cli: verify") {
    const std::string p = path("verify.json");
    const Run ok = cli({"--out", p, "verify", "--grid-points", "2"});
    REQUIRE(ok.code == 0);
    const auto j = nlohmann::json::parse(slurp(p));
    CHECK(j["schema"] == "tfdcs.verify/1");
    for (const char* key : {"seed", "sabotage", "tail_tol", "grid_points", "passed", "total", "failed", "properties"})
        CHECK(j.contains(key));
    CHECK(j["passed"] == true);
    CHECK(j["failed"] == 0);
    CHECK(j["total"] == j["properties"].size());
    CHECK(j["tail_tol"] == 1e-20);

    const Run bad = cli({"--out", p, "verify", "--grid-points", "2", "--sabotage"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("equivalence.") != std::string::npos);
    const auto js = nlohmann::json::parse(slurp(p));
    CHECK(js["passed"] == false);
    CHECK(js["sabotage"] == true);
}

TEST_CASE("cli: opo") {
    const std::string p = path("opo.csv");
    REQUIRE(cli({"--out", p, "opo", "--n", "8", "--grid", "5"}).code == 0);
    auto j = nlohmann::json::parse(slurp(path("opo.json")));
    CHECK(j["schema"] == "tfdcs.opo/1");
    const double th = 0.4;
    CHECK(j["theta"].get<double>() == doctest::Approx(th).epsilon(1e-15));
    CHECK(std::abs(j["purity"].get<double>() - 1 / std::cosh(2 * th)) < 1e-10);
    CHECK(std::abs(j["mean_photon_number"].get<double>() - j["mean_photon_expected"].get<double>()) < 1e-9);
    CHECK(j["sliced_vs_closed_distance"].get<double>() > 0.0);
    const Table q = read_csv(p);
    CHECK(q.rows.size() == 25);
    for (const auto& row : q.rows) CHECK(row[2] >= 0.0);

    REQUIRE(cli({"--out", p, "opo", "--t1", "0", "--n", "2", "--grid", "3"}).code == 0);
    j = nlohmann::json::parse(slurp(path("opo.json")));
    CHECK(std::abs(j["purity"].get<double>() - 1.0) < 1e-12);

    REQUIRE(cli({"--out", p, "opo", "--gs", "0", "--gi", "0", "--n", "2", "--grid", "3"}).code == 0);
    j = nlohmann::json::parse(slurp(path("opo.json")));
    CHECK(std::abs(j["mean_photon_number"].get<double>() - std::pow(std::sinh(th), 2)) < 1e-10);
    CHECK(cli({"--out", p, "opo", "--n", "0"}).code == 2);
}

TEST_CASE("cli: config, io errors and determinism") {
    const std::string cfg = path("cfg.json");
    {
        std::ofstream f(cfg);
        f << R"({"out": ")" << path("from_config.csv") << R"(", "hbar": 2.0})";
    }
    REQUIRE(cli({"--config", cfg, "fig1", "--steps", "3"}).code == 0);
    CHECK(fs::exists(path("from_config.csv")));
    const std::string over = path("override.csv");
    REQUIRE(cli({"--config", cfg, "--out", over, "fig1", "--steps", "3"}).code == 0);
    CHECK(fs::exists(over));
    {
        std::ofstream f(cfg);
        f << R"({"colour": 1})";
    }
    CHECK(cli({"--config", cfg, "fig1"}).code == 2);
    CHECK(cli({"--config", path("missing.json"), "fig1"}).code == 3);
    CHECK(cli({"--out", "/nonexistent_dir/x.csv", "fig1"}).code == 3);
    CHECK(cli({"--hbar", "-1", "fig1"}).code == 2);
    CHECK(cli({"--tail-tol", "0.5", "fig1"}).code == 2);

    const std::string a = path("det_a.csv"), b = path("det_b.csv");
    REQUIRE(cli({"--out", a, "converge", "--n-list", "16,32"}).code == 0);
    REQUIRE(cli({"--out", b, "converge", "--n-list", "16,32"}).code == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(cli({"--out", a, "fig2", "--points", "51"}).code == 0);
    REQUIRE(cli({"--out", b, "fig2", "--points", "51"}).code == 0);
    CHECK(slurp(a) == slurp(b));
}
