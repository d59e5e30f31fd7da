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

#include "ftpost/channel.h"

#include <gtest/gtest.h>

#include "ftpost/errors.h"
#include "test_util.h"

using namespace ftpost;
using ftpost_test::shared_rng;

TEST(channel, dist_to_channel_examples) {
    EXPECT_EQ(dist_to_channel(PauliDist{}), DiagonalChannel::identity());
    auto c = dist_to_channel(PauliDist::from(0.25, 0.25, 0.25, 0.25));
    EXPECT_EQ(c, DiagonalChannel::completely_depolarizing());

    double p = 0.13;
    c = dist_to_channel(PauliDist::from(1 - p, p, 0, 0));
    EXPECT_DOUBLE_EQ(c.x, 1);
    EXPECT_DOUBLE_EQ(c.y, 1 - 2 * p);
    EXPECT_DOUBLE_EQ(c.z, 1 - 2 * p);
}

TEST(channel, channel_to_dist_examples) {
    EXPECT_EQ(channel_to_dist(DiagonalChannel::identity()), PauliDist{});
    auto d = channel_to_dist(DiagonalChannel::completely_depolarizing());
    for (double v : d.p) {
        EXPECT_DOUBLE_EQ(v, 0.25);
    }
    EXPECT_THROW(channel_to_dist({-1, -1, -1}), InvalidChannel);
    // Tiny negatives are clamped only after passing the tolerance check.
    auto clamped = channel_to_dist({1, 1 - 1e-13, 1 + 1e-13});
    for (double v : clamped.p) {
        EXPECT_GE(v, 0);
    }
}

TEST(channel, round_trip_random) {
    auto &rng = shared_rng();
    for (int k = 0; k < 1000; k++) {
        PauliDist d = ftpost_test::random_dist(rng);
        PauliDist back = channel_to_dist(dist_to_channel(d));
        for (size_t i = 0; i < 4; i++) {
            EXPECT_NEAR(back.p[i], d.p[i], 1e-12);
        }
        DiagonalChannel c = dist_to_channel(d);
        EXPECT_LT(dist_to_channel(channel_to_dist(c)).max_abs_diff(c), 1e-12);
    }
}

TEST(channel, validate) {
    EXPECT_NO_THROW(PauliDist::from(0.5, 0.5, 0, 0).validate());
    EXPECT_THROW(PauliDist::from(0.5, 0.6, 0, 0).validate(), InvalidChannel);
    EXPECT_THROW(PauliDist::from(1.1, -0.1, 0, 0).validate(), InvalidChannel);
}

TEST(channel, compose) {
    DiagonalChannel a{0.9, 0.8, 0.7};
    EXPECT_EQ(compose(a, DiagonalChannel::identity()), a);

    double p1 = 0.1, p2 = 0.03;
    auto c = compose({1, 1, 1 - 2 * p1}, {1, 1, 1 - 2 * p2});
    EXPECT_NEAR(c.z, 1 - 2 * (p1 + p2 - 2 * p1 * p2), 1e-15);

    auto &rng = shared_rng();
    for (int k = 0; k < 100; k++) {
        auto x = ftpost_test::random_channel(rng);
        auto y = ftpost_test::random_channel(rng);
        auto z = ftpost_test::random_channel(rng);
        EXPECT_LT(compose(x, y).max_abs_diff(compose(y, x)), 1e-15);
        EXPECT_LT(compose(compose(x, y), z).max_abs_diff(compose(x, compose(y, z))), 1e-15);
    }
}

TEST(channel, measurement_correct_prob) {
    EXPECT_DOUBLE_EQ(measurement_correct_prob(DiagonalChannel::identity(), Pauli::Z), 1);
    EXPECT_DOUBLE_EQ(measurement_correct_prob({1, 1, 0.8}, Pauli::Z), 0.9);
    EXPECT_THROW(measurement_correct_prob({1, 1, 1}, Pauli::I), std::invalid_argument);

    // Oracle: an error flips a sigma measurement exactly when it anticommutes with sigma.
    auto &rng = shared_rng();
    for (int k = 0; k < 100; k++) {
        PauliDist d = ftpost_test::random_dist(rng);
        DiagonalChannel c = dist_to_channel(d);
        for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
            double keep = 0;
            for (Pauli e : kPaulis) {
                if (!anticommutes(e, axis)) {
                    keep += d[e];
                }
            }
            EXPECT_NEAR(measurement_correct_prob(c, axis), keep, 1e-14);
        }
    }
}

TEST(channel, fidelity) {
    auto zero = DensityVector::eigenstate(Pauli::Z, +1);
    auto one = DensityVector::eigenstate(Pauli::Z, -1);
    EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1);
    EXPECT_DOUBLE_EQ(fidelity(DensityVector::maximally_mixed(), zero), 0.5);
    EXPECT_DOUBLE_EQ(fidelity(DensityVector::maximally_mixed(), DensityVector::eigenstate(Pauli::Y, 1)), 0.5);
    EXPECT_DOUBLE_EQ(fidelity(zero, one), 0);
    EXPECT_THROW(fidelity(zero, DensityVector::maximally_mixed()), std::invalid_argument);
    EXPECT_THROW(DensityVector::from_bloch(1, 1, 0), std::invalid_argument);
}

TEST(channel, apply_matches_dist) {
    // A Z-eigenstate survives exactly the errors that commute with Z.
    PauliDist d = PauliDist::from(0.7, 0.1, 0.05, 0.15);
    auto rho = apply(dist_to_channel(d), DensityVector::eigenstate(Pauli::Z, 1));
    EXPECT_NEAR(fidelity(rho, DensityVector::eigenstate(Pauli::Z, 1)), d.p[0] + d.p[3], 1e-15);
}
