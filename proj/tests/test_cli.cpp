// Copyright 2026 The incelab Authors
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

#include "cli.hpp"

using namespace incelab;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

double field(const std::string &report, const std::string &key) {
    const std::size_t at = report.find(key);
    EXPECT_NE(at, std::string::npos) << key;
    return std::stod(report.substr(at + key.size()));
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("incelab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, render_writes_three_files) {
    const CliResult r = run({"render", "--p", "5", "--m", "3", "--eps", "2", "--kind", "plus", "--grid-n", "64", "--out", path("ig")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string pgm = slurp(path("ig_intensity.pgm"));
    EXPECT_EQ(pgm.substr(0, 13), "P5\n64 64\n255\n");
    EXPECT_EQ(pgm.size(), 13u + 64 * 64);
    EXPECT_EQ(slurp(path("ig_phase.pgm")).size(), 13u + 64 * 64);
    const auto csv = lines(slurp(path("ig_field.csv")));
    EXPECT_EQ(csv.front(), "x,y,re,im");
    EXPECT_EQ(csv.size(), 1u + 64 * 64);
}

TEST_F(CliTest, render_degenerate_ellipticity_and_bloch) {
    EXPECT_EQ(run({"render", "--eps", "0", "--grid-n", "32", "--out", path("lg")}).code, 0);
    EXPECT_TRUE(fs::exists(path("lg_field.csv")));
    EXPECT_EQ(run({"render", "--kind", "bloch", "--a", "0.3", "--phi", "45", "--grid-n", "32", "--out", path("b")}).code, 0);
}

TEST_F(CliTest, render_errors) {
    CliResult r = run({"render", "--p", "2", "--m", "1", "--out", path("x")});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"render", "--kind", "diagonal", "--out", path("x")}).code, 2);
    EXPECT_EQ(run({"render", "--eps", "-1", "--out", path("x")}).code, 2);
    EXPECT_EQ(run({"render", "--grid-n", "1", "--out", path("x")}).code, 2);
    EXPECT_EQ(run({"render", "--bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"render", "--grid-n", "16", "--out", path("missing_dir/x")}).code, 3);
}

TEST_F(CliTest, help_exits_cleanly) {
    const CliResult r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("singularities"), std::string::npos);
}

TEST_F(CliTest, singularities) {
    CliResult r = run({"singularities", "--p", "5", "--m", "3", "--eps", "2", "--grid-l", "4", "--out", path("s.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "net charge within waist: "), 3);
    const auto csv = lines(slurp(path("s.csv")));
    EXPECT_EQ(csv.front(), "x,y,charge");
    int central = 0;
    for (std::size_t i = 1; i < csv.size(); ++i) {
        std::istringstream is(csv[i]);
        double x, y;
        char c;
        int q;
        is >> x >> c >> y >> c >> q;
        central += std::hypot(x, y) < 1.0 ? q : 0;
    }
    EXPECT_EQ(central, 3);

    r = run({"singularities", "--kind", "minus", "--grid-l", "4", "--out", path("m.csv")});
    EXPECT_EQ(field(r.out, "net charge within waist: "), -3);

    r = run({"singularities", "--p", "0", "--m", "0", "--kind", "even", "--grid-n", "128", "--out", path("g.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(slurp(path("g.csv"))).size(), 1u);
}

TEST_F(CliTest, overlap_curve_and_exit_codes) {
    CliResult r = run({"overlap", "--p", "4", "--m", "2", "--eps-ref", "1", "--eps-min", "1", "--eps-max", "1", "--steps", "1",
                 "--grid-n", "128", "--out", path("o.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = lines(slurp(path("o.csv")));
    ASSERT_EQ(csv.size(), 2u);
    EXPECT_EQ(csv[0], "epsilon,overlap");
    EXPECT_NEAR(std::stod(csv[1].substr(csv[1].find(',') + 1)), 1.0, 1e-12);

    r = run({"overlap", "--p", "8", "--m", "4", "--eps-ref", "3", "--eps-min", "2", "--eps-max", "4", "--steps", "5",
             "--grid-n", "192", "--out", path("o8.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "at epsilon "), 3.0, 1e-12);

    EXPECT_EQ(run({"overlap", "--p", "14", "--m", "6", "--eps-ref", "1", "--eps-min", "3", "--eps-max", "3", "--steps", "1",
                   "--grid-n", "4", "--out", path("c.csv")})
                  .code,
              4);
    EXPECT_EQ(run({"overlap", "--eps-min", "-1", "--out", path("c.csv")}).code, 2);
    EXPECT_EQ(run({"overlap", "--p", "3", "--m", "2", "--out", path("c.csv")}).code, 2);
}

TEST_F(CliTest, fringes) {
    CliResult r = run({"fringes", "--p", "2", "--m", "2", "--eps", "2", "--grid-n", "128", "--settings", "22.5,67.5,112.5,157.5",
                 "--step", "15", "--pairs", "100000", "--seed", "4", "--out", path("f.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = lines(slurp(path("f.csv")));
    ASSERT_EQ(csv.size(), 14u);
    EXPECT_EQ(csv[0], "phi2_deg,p_22.5,p_67.5,p_112.5,p_157.5,counts_22.5,counts_67.5,counts_112.5,counts_157.5");
    const double settings[4] = {22.5, 67.5, 112.5, 157.5};
    for (int s = 0; s < 4; ++s) {
        double best = -1, at = -1;
        for (std::size_t row = 1; row < csv.size(); ++row) {
            std::vector<double> vals;
            std::istringstream is(csv[row]);
            for (std::string tok; std::getline(is, tok, ',');) vals.push_back(std::stod(tok));
            ASSERT_EQ(vals.size(), 9u);
            EXPECT_NEAR(vals[1 + s], std::pow(std::cos((settings[s] - vals[0]) * std::numbers::pi / 180), 2) / 2, 1e-3);
            if (vals[1 + s] > best + 1e-9) best = vals[1 + s], at = vals[0];
        }
        EXPECT_NEAR(std::abs(at - settings[s]), 7.5, 1e-9);
    }
    EXPECT_NE(r.out.find("visibility 1"), std::string::npos) << r.out;

    const std::string first = slurp(path("f.csv"));
    ASSERT_EQ(run({"fringes", "--p", "2", "--m", "2", "--eps", "2", "--grid-n", "128", "--pairs", "100000", "--seed", "4",
                   "--out", path("f.csv")})
                  .code,
              0);
    EXPECT_EQ(slurp(path("f.csv")), first);

    r = run({"fringes", "--grid-n", "64", "--pairs", "0", "--out", path("z.csv")});
    ASSERT_EQ(r.code, 0);
    const auto zl = lines(slurp(path("z.csv")));
    EXPECT_EQ(zl[3].substr(zl[3].size() - 8), ",0,0,0,0");

    EXPECT_EQ(run({"fringes", "--step", "0", "--out", path("z.csv")}).code, 2);
    EXPECT_EQ(run({"fringes", "--pairs", "-3", "--out", path("z.csv")}).code, 2);
    EXPECT_EQ(run({"fringes", "--m", "0", "--p", "2", "--out", path("z.csv")}).code, 2);
}

TEST_F(CliTest, witness) {
    CliResult r = run({"witness", "--ideal"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(field(r.out, "W = "), -0.5, 1e-9);
    EXPECT_NEAR(field(r.out, "S = "), 3.0, 1e-9);
    r = run({"witness", "--werner", "0.9796"});
    EXPECT_NEAR(field(r.out, "W = "), -0.4847, 1e-4);
    EXPECT_NEAR(field(r.out, "S = "), 2.879, 1e-3);
    r = run({"witness", "--werner", "0.2"});
    EXPECT_NE(r.out.find("entanglement (W < 0): not detected"), std::string::npos);
    EXPECT_EQ(run({"witness", "--werner", "1.5"}).code, 2);
}

TEST_F(CliTest, witness_state_files) {
    {
        std::ofstream f(path("mixed.csv"));
        write_state_csv(f, maximally_mixed(2, 2));
    }
    CliResult r = run({"witness", "--state-file", path("mixed.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "W = "), 0.25, 1e-12);
    {
        std::ofstream f(path("bad.csv"));
        f << "2,2\n1,0,0,0\n";
    }
    EXPECT_EQ(run({"witness", "--state-file", path("bad.csv")}).code, 5);
    EXPECT_EQ(run({"witness", "--state-file", path("nope.csv")}).code, 3);
    EXPECT_EQ(run({"witness", "--ideal", "--state-file", path("mixed.csv")}).code, 2);
}

TEST_F(CliTest, dimwitness) {
    CliResult r = run({"dimwitness", "--ideal"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(field(r.out, "f = "), 9.0, 1e-9);
    EXPECT_NE(r.out.find("class: at-least-3d-entangled"), std::string::npos);
    EXPECT_NEAR(field(r.out, "N01 = "), 2.0 / 3, 1e-9);

    {
        std::ofstream f(path("rs.csv"));
        write_state_csv(f, correlated_separable_qutrit());
        std::ofstream g(path("r2.csv"));
        write_state_csv(g, pairwise_bell_mixture());
    }
    r = run({"dimwitness", "--state-file", path("rs.csv")});
    EXPECT_NEAR(field(r.out, "f = "), 3.0, 1e-9);
    EXPECT_NE(r.out.find("class: separable-compatible"), std::string::npos);
    r = run({"dimwitness", "--state-file", path("r2.csv")});
    EXPECT_NEAR(field(r.out, "f = "), 6.0, 1e-9);
    r = run({"dimwitness", "--werner", "0.5"});
    EXPECT_NEAR(field(r.out, "f = "), 27 * 0.5 / 2.5, 1e-9);
    {
        std::ofstream f(path("bad.csv"));
        f << "3,3\nnot numbers\n";
    }
    EXPECT_EQ(run({"dimwitness", "--state-file", path("bad.csv")}).code, 5);
}

TEST_F(CliTest, boundscheck) {
    CliResult r = run({"boundscheck", "--samples", "300", "--seed", "9"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("violations of f <= 3: 0"), std::string::npos);
    EXPECT_NE(r.out.find("violations of f <= 6: 0"), std::string::npos);
    const CliResult a = run({"boundscheck", "--samples", "1", "--seed", "3"}), b = run({"boundscheck", "--samples", "1", "--seed", "3"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"boundscheck", "--samples", "0"}).code, 2);
}
