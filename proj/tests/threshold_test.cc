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

#include "ftpost/threshold.h"

#include <cmath>
#include <gtest/gtest.h>

using namespace ftpost;

TEST(threshold, shannon_entropy) {
    EXPECT_EQ(shannon_entropy(PauliDist{}), 0);
    EXPECT_DOUBLE_EQ(shannon_entropy(PauliDist::from(0.25, 0.25, 0.25, 0.25)), 2);
    EXPECT_NEAR(shannon_entropy(PauliDist::from(0.8095142, 0.0713361, 0.0478136, 0.0713361)), 1, 1e-4);
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1);
    EXPECT_EQ(binary_entropy(0), 0);
    EXPECT_THROW(binary_entropy(1.5), std::invalid_argument);
}

TEST(threshold, solve_root) {
    EXPECT_NEAR(solve_root([](double x) { return x * x - 2; }, 0, 2, 1e-13), std::sqrt(2.0), 1e-12);
    EXPECT_THROW(solve_root([](double x) { return x * x + 1; }, 0, 2), BracketFailure);
}

TEST(threshold, hashing_thresholds) {
    struct Row {
        NoiseFamily family;
        double p, px, py;
    };
    const Row rows[] = {
        {NoiseFamily::depolarizing(), 8.27515, 7.13361, 4.78136},
        {NoiseFamily::knill(), 6.90240, 7.52699, 4.12990},
        {NoiseFamily::forward(), 4.81816, 9.79217, 1.21061},
    };
    for (const auto &row : rows) {
        auto r = hashing_threshold(row.family);
        EXPECT_NEAR(100 * r.p_threshold, row.p, 5e-4) << row.family.name();
        EXPECT_NEAR(100 * r.dist.p[1], row.px, 1e-3);
        EXPECT_NEAR(100 * r.dist.p[3], row.px, 1e-3);
        EXPECT_NEAR(100 * r.dist.p[2], row.py, 1e-3);
        EXPECT_NEAR(r.entropy, 1, 1e-6);
        EXPECT_NEAR(shannon_entropy(run_pipeline(row.family.at(r.p_threshold)).output), 1, 1e-6);
    }
}

TEST(threshold, capacity) {
    double p = capacity_hashing_one_type(OneTypeKind::PhaseOnly);
    EXPECT_NEAR(100 * p, 11.0028, 5e-4);
    EXPECT_NEAR(binary_entropy(p), 0.5, 1e-9);
    EXPECT_NEAR(shannon_entropy(PauliDist::from(1 - p, 0, 0, p)) * 2, 1, 1e-9);
    double s = capacity_hashing_one_type(OneTypeKind::Symmetric);
    EXPECT_NEAR(100 * s, 6.3097, 5e-4);
    EXPECT_NEAR(shannon_entropy(PauliDist::from(1 - 3 * s, s, s, s)), 1, 1e-9);
}

TEST(threshold, sweep_r) {
    std::vector<double> grid{0, 0.25, 0.5, 0.75, 1};
    auto pts = sweep_r(grid);
    ASSERT_EQ(pts.size(), grid.size());
    EXPECT_NEAR(100 * pts.front().threshold, 8.27515, 5e-4);
    EXPECT_NEAR(100 * pts.back().threshold, 6.90240, 5e-4);
    for (size_t i = 1; i < pts.size(); i++) {
        EXPECT_LT(pts[i].threshold, pts[i - 1].threshold);
    }
    std::vector<double> bad{-1};
    auto failed = sweep_r(bad);
    EXPECT_TRUE(std::isnan(failed[0].threshold));
    EXPECT_FALSE(failed[0].error.empty());
}

TEST(threshold, sector_noise_and_crash_difference) {
    EXPECT_NEAR(sector_noise(NoiseFamily::forward(), 0.046700), 0.787945, 1e-6);
    EXPECT_NEAR(sector_noise(NoiseFamily::forward(), 0.048036), 0.780736, 1e-6);
    EXPECT_NEAR(100 * crash_difference(CrashCode::Steane7, 0.787945, 0.780736), 0.72, 5e-3);
    EXPECT_EQ(crash_difference_threshold(CrashCode::Golay23, NoiseFamily::forward(), 0.04805, 0), 0.04805);
    double pr = crash_difference_threshold(CrashCode::Golay23, NoiseFamily::forward(), 0.04805, 0.00035);
    EXPECT_NEAR(100 * pr, 4.801, 2e-3);
}

TEST(threshold, fixed_fidelity_2317_forward) {
    auto r = fixed_fidelity_point(CrashCode::Golay23, NoiseFamily::forward());
    EXPECT_NEAR(100 * r.p, 3.5471, 5e-3);
    EXPECT_NEAR(r.fidelity, 0.85108, 5e-4);
}

TEST(threshold, fixed_fidelity_713_is_a_crossing) {
    // The zeroth-level side reproduces the tabulated fidelities at the tabulated p.
    EXPECT_NEAR(run_pipeline(Knill{0.03472}).output.fidelity(), 0.90602, 5e-5);
    EXPECT_NEAR(run_pipeline(Depolarizing{0.04039, 0}).output.fidelity(), 0.91122, 5e-5);
    EXPECT_NEAR(run_pipeline(Forward{0.029595}).output.fidelity(), 0.87703, 5e-5);
    for (auto family : {NoiseFamily::knill(), NoiseFamily::depolarizing(), NoiseFamily::forward()}) {
        auto r = fixed_fidelity_point(CrashCode::Steane7, family);
        EXPECT_NEAR(first_level_fidelity_at(CrashCode::Steane7, family, r.p), r.fidelity, 1e-9);
        // Below the crossing the code helps, above it hurts.
        double lo = r.p * 0.8, hi = r.p * 1.2;
        EXPECT_GT(first_level_fidelity_at(CrashCode::Steane7, family, lo), run_pipeline(family.at(lo)).output.fidelity());
        EXPECT_LT(first_level_fidelity_at(CrashCode::Steane7, family, hi), run_pipeline(family.at(hi)).output.fidelity());
    }
}

TEST(threshold, entropy_matching_2317) {
    EXPECT_NEAR(2 * golay_sector_entropy(1 - 2 * 0.10968), 1.0016, 1e-4);
    double target = first_level_entropy_2317(NoiseFamily::forward(), 0.04805);
    EXPECT_NEAR(target, 1.0016, 2e-3);
    double knill = entropy_match_threshold(NoiseFamily::knill(), target, 0.06, 0.075, 1e-6);
    EXPECT_NEAR(100 * knill, 6.88, 0.02);
    double dep = entropy_match_threshold(NoiseFamily::depolarizing(), target, 0.075, 0.09, 1e-6);
    EXPECT_NEAR(100 * dep, 8.25, 0.03);
}

TEST(threshold, convergence_delta) {
    EXPECT_EQ(convergence_delta(0.4, 0.4, 3, 4), 0);
    EXPECT_NEAR(convergence_alpha(), 0.5288, 1e-4);
    double alpha = std::log2(std::log2(std::exp(1.0)));
    double expected = (0.49880 - 0.3492) * std::pow(3.0, 4 * alpha) / 0.49880;
    EXPECT_NEAR(convergence_delta(0.3492, 0.49880, 3, 4), expected, 1e-12);
    EXPECT_THROW(convergence_delta(0.6, 0.5, 3, 4), std::invalid_argument);
    EXPECT_THROW(convergence_delta(0.1, 0.5, 1, 4), std::invalid_argument);
}

TEST(threshold, overhead) {
    auto o = overhead_estimate(14, 0.153, 0.766, 1e-3);
    EXPECT_NEAR(100 * o.p_k, 9.79, 0.01);
    EXPECT_NEAR(o.exponent, -14 * std::log(1 - 0.153) / std::log(0.766), 1e-12);
    EXPECT_NEAR(o.order, 14 * std::pow(1e-3, o.exponent), 1e-9 * o.order);
    EXPECT_EQ(o.r, 0.766);
    auto zero = overhead_estimate(14, 0, 0.766, 1e-3);
    EXPECT_EQ(zero.p_k, 1);
    EXPECT_EQ(zero.exponent, 0);
    EXPECT_THROW(overhead_estimate(14, 0.1, 1.5, 1e-3), std::invalid_argument);
}
