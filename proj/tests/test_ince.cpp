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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "incelab/ince.hpp"
#include "oracles.hpp"

using namespace incelab;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<InceIndices> admissible(int p) {
    std::vector<InceIndices> out;
    for (int m = p % 2; m <= p; m += 2) {
        out.push_back({p, m, Parity::even});
        if (m > 0) out.push_back({p, m, Parity::odd});
    }
    return out;
}

}  // namespace

TEST(InceIndices, validation) {
    EXPECT_NO_THROW(validate(InceIndices{5, 3, Parity::even}));
    EXPECT_NO_THROW(validate(InceIndices{0, 0, Parity::even}));
    EXPECT_THROW(validate(InceIndices{2, 1, Parity::even}), InvalidIndices);
    EXPECT_THROW(validate(InceIndices{2, 4, Parity::even}), InvalidIndices);
    EXPECT_THROW(validate(InceIndices{2, 0, Parity::odd}), InvalidIndices);
    EXPECT_THROW(validate(InceIndices{-1, 1, Parity::even}), InvalidIndices);
    EXPECT_FALSE(is_admissible({3, 0, Parity::even}));
    EXPECT_TRUE(is_admissible({3, 1, Parity::odd}));
}

TEST(InceIndices, class_dimensions_partition_the_harmonics) {
    for (int p = 0; p <= 14; ++p) {
        int dims = class_dimension(trig_class_of({p, p % 2, Parity::even}), p);
        if (p >= 1) dims += class_dimension(trig_class_of({p, 2 - p % 2, Parity::odd}), p);
        EXPECT_EQ(dims, p + 1) << "p=" << p;
    }
}

TEST(SolveInce, exact_harmonic_at_zero_ellipticity) {
    const IncePolynomial poly = solve_ince({3, 3, Parity::even}, 0.0);
    EXPECT_EQ(poly.eigenvalue, 9.0);
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        EXPECT_EQ(poly.coefficients[j], poly.harmonic(j) == 3 ? 1.0 : 0.0);
    }
    for (int p = 0; p <= 14; ++p) {
        for (const InceIndices &idx : admissible(p)) {
            const IncePolynomial q = solve_ince(idx, 0.0);
            EXPECT_EQ(q.eigenvalue, static_cast<double>(idx.m * idx.m));
            for (std::size_t j = 0; j < q.coefficients.size(); ++j) {
                EXPECT_EQ(q.coefficients[j], q.harmonic(j) == idx.m ? 1.0 : 0.0) << describe(idx);
            }
        }
    }
}

TEST(SolveInce, errors) {
    EXPECT_THROW(solve_ince({2, 1, Parity::even}, 2.0), InvalidIndices);
    EXPECT_THROW(solve_ince({4, 0, Parity::odd}, 2.0), InvalidIndices);
    EXPECT_THROW(solve_ince({4, 2, Parity::even}, -0.1), NegativeEllipticity);
}

TEST(SolveInce, eigenvalues_match_unfolded_exponential_basis) {
    for (double e : {0.5, 1.0, 2.0, 3.0, 5.0, 12.0}) {
        for (int p = 0; p <= 14; ++p) {
            std::vector<double> ours;
            for (const InceIndices &idx : admissible(p)) ours.push_back(solve_ince(idx, e).eigenvalue);
            std::sort(ours.begin(), ours.end());
            const std::vector<double> ref = oracle::ince_spectrum(p, e);
            ASSERT_EQ(ours.size(), ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                EXPECT_NEAR(ours[i], ref[i], 1e-9 * std::max(1.0, std::abs(ref[i]))) << "p=" << p << " e=" << e;
            }
        }
    }
}

TEST(SolveInce, residual_by_direct_substitution) {
    const IncePolynomial poly = solve_ince({5, 3, Parity::even}, 2.0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, oracle::ince_residual(poly, 2 * kPi * i / 100));
    EXPECT_LT(worst, 1e-10);
    EXPECT_LT(ode_residual(poly, 100), 1e-10);
}

TEST(SolveInce, residual_all_orders) {
    for (double e : {0.5, 1.0, 2.0, 3.0, 5.0}) {
        for (int p = 0; p <= 14; ++p) {
            for (const InceIndices &idx : admissible(p)) {
                const IncePolynomial poly = solve_ince(idx, e);
                EXPECT_LT(ode_residual(poly, 257), 1e-9) << describe(idx) << " e=" << e;
                EXPECT_LT(oracle::ince_residual(poly, 0.377), 1e-9) << describe(idx) << " e=" << e;
            }
        }
    }
    EXPECT_LT(ode_residual(solve_ince({8, 4, Parity::even}, 3.0), 200), 1e-9);
}

TEST(SolveInce, residual_detects_perturbed_eigenvalue) {
    IncePolynomial poly = solve_ince({8, 4, Parity::even}, 3.0);
    poly.eigenvalue += 0.1;
    EXPECT_GT(ode_residual(poly, 200), 1e-3);
}

TEST(SolveInce, zero_ellipticity_residual) {
    for (const InceIndices &idx : admissible(7)) EXPECT_LT(ode_residual(solve_ince(idx, 0.0), 64), 1e-12);
}

TEST(SolveInce, sign_convention_and_unit_norm) {
    for (double e : {0.3, 2.0, 7.0}) {
        for (int p = 1; p <= 12; ++p) {
            for (const InceIndices &idx : admissible(p)) {
                const IncePolynomial poly = solve_ince(idx, e);
                double n2 = 0;
                for (double c : poly.coefficients) n2 += c * c;
                EXPECT_NEAR(n2, 1.0, 1e-12);
                if (idx.parity == Parity::even) {
                    EXPECT_GT(eval_angular(poly, 0.0), 0.0) << describe(idx);
                } else {
                    EXPECT_GT(eval_angular_jet(poly, 0.0).d1, 0.0) << describe(idx);
                }
            }
        }
    }
}

TEST(SolveInce, distinct_eigenvalues_within_class) {
    for (double e : {0.5, 2.0, 5.0}) {
        for (int p = 2; p <= 14; ++p) {
            for (Parity par : {Parity::even, Parity::odd}) {
                std::vector<double> eig;
                for (int m = p % 2; m <= p; m += 2) {
                    if (par == Parity::odd && m == 0) continue;
                    eig.push_back(solve_ince({p, m, par}, e).eigenvalue);
                }
                for (std::size_t i = 1; i < eig.size(); ++i) EXPECT_GT(eig[i], eig[i - 1] + 1e-9);
            }
        }
    }
}

TEST(SolveInce, continuity_in_ellipticity) {
    for (const InceIndices &idx : admissible(10)) {
        const IncePolynomial a = solve_ince(idx, 2.0), b = solve_ince(idx, 2.0 + 1e-6);
        for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
            EXPECT_LT(std::abs(a.coefficients[j] - b.coefficients[j]), 1e-5) << describe(idx);
        }
    }
}

TEST(EvalAngular, examples) {
    const IncePolynomial c33 = solve_ince({3, 3, Parity::even}, 0.0);
    EXPECT_NEAR(eval_angular(c33, kPi / 6), 0.0, 1e-15);
    const IncePolynomial s = solve_ince({6, 4, Parity::odd}, 2.5);
    EXPECT_EQ(eval_angular(s, 0.0), 0.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int i = 0; i < 20; ++i) {
        const double v = dist(rng);
        EXPECT_NEAR(eval_angular(s, v + 2 * kPi), eval_angular(s, v), 1e-12);
    }
}

TEST(EvalAngular, matches_direct_series) {
    const IncePolynomial poly = solve_ince({9, 5, Parity::odd}, 3.0);
    for (double v : {0.1, 1.3, 2.9, 4.4, 6.0}) {
        double s = 0;
        for (std::size_t j = 0; j < poly.coefficients.size(); ++j) s += poly.coefficients[j] * std::sin(poly.harmonic(j) * v);
        EXPECT_NEAR(eval_angular(poly, v), s, 1e-13);
    }
}

TEST(EvalRadial, examples) {
    const IncePolynomial c = solve_ince({6, 2, Parity::even}, 2.0);
    EXPECT_NEAR(eval_radial(c, 0.0), eval_angular(c, 0.0), 1e-14);
    const IncePolynomial s = solve_ince({6, 2, Parity::odd}, 2.0);
    EXPECT_EQ(eval_radial(s, 0.0), 0.0);
    const IncePolynomial c33 = solve_ince({3, 3, Parity::even}, 0.0);
    EXPECT_NEAR(eval_radial(c33, 1.0), std::cosh(3.0), 1e-12);
}

TEST(EvalRadial, matches_direct_series_and_overflows) {
    const IncePolynomial poly = solve_ince({8, 4, Parity::odd}, 3.0);
    for (double u : {0.2, 0.9, 2.0}) {
        double s = 0;
        for (std::size_t j = 0; j < poly.coefficients.size(); ++j) s += poly.coefficients[j] * std::sinh(poly.harmonic(j) * u);
        EXPECT_NEAR(eval_radial(poly, u), s, 1e-12 * std::abs(s));
    }
    EXPECT_THROW(eval_radial(poly, 200.0), Overflow);
}

TEST(Coefficients, csv_dump) {
    std::ostringstream os;
    write_coefficients_csv(os, solve_ince({4, 2, Parity::even}, 0.0));
    std::string line;
    std::istringstream is(os.str());
    std::getline(is, line);
    EXPECT_EQ(line, "harmonic,coefficient");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 3);
}
