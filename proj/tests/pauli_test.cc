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

#include "ftpost/pauli.h"

#include <complex>
#include <gtest/gtest.h>
#include <stdexcept>

using namespace ftpost;

namespace {

using Mat = std::array<std::complex<double>, 4>;

Mat matrix(Pauli p) {
    const std::complex<double> i(0, 1);
    switch (p) {
        case Pauli::I:
            return {1, 0, 0, 1};
        case Pauli::X:
            return {0, 1, 1, 0};
        case Pauli::Y:
            return {0, -i, i, 0};
        case Pauli::Z:
            return {1, 0, 0, -1};
    }
    return {};
}

Mat mul(const Mat &a, const Mat &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Whether a and b agree up to a global phase.
bool same_up_to_phase(const Mat &a, const Mat &b) {
    std::complex<double> ratio = 0;
    for (size_t k = 0; k < 4; k++) {
        if (std::abs(b[k]) > 1e-12) {
            ratio = a[k] / b[k];
            break;
        }
    }
    for (size_t k = 0; k < 4; k++) {
        if (std::abs(a[k] - ratio * b[k]) > 1e-12) {
            return false;
        }
    }
    return std::abs(std::abs(ratio) - 1) < 1e-12;
}

}  // namespace

TEST(pauli, order_and_bits) {
    EXPECT_EQ(index_of(Pauli::I), 0u);
    EXPECT_EQ(index_of(Pauli::X), 1u);
    EXPECT_EQ(index_of(Pauli::Y), 2u);
    EXPECT_EQ(index_of(Pauli::Z), 3u);
    for (Pauli p : kPaulis) {
        EXPECT_EQ(pauli_from_bits(x_bit(p), z_bit(p)), p);
    }
}

TEST(pauli, product_matches_matrices) {
    for (Pauli a : kPaulis) {
        for (Pauli b : kPaulis) {
            EXPECT_TRUE(same_up_to_phase(mul(matrix(a), matrix(b)), matrix(a * b)));
        }
    }
}

TEST(pauli, commutation_matches_matrices) {
    for (Pauli a : kPaulis) {
        for (Pauli b : kPaulis) {
            Mat ab = mul(matrix(a), matrix(b));
            Mat ba = mul(matrix(b), matrix(a));
            bool commute = true;
            for (size_t k = 0; k < 4; k++) {
                commute &= std::abs(ab[k] - ba[k]) < 1e-12;
            }
            EXPECT_EQ(anticommutes(a, b), !commute);
            EXPECT_EQ(commutation_sign(a, b), commute ? 1 : -1);
        }
    }
}

TEST(pauli, pair_labels) {
    EXPECT_EQ(pair_index(Pauli::X, Pauli::Z), 7u);
    EXPECT_EQ(pair_label(7), "XZ");
    for (size_t k = 0; k < 16; k++) {
        EXPECT_EQ(pair_index(pair_label(k)), k);
        EXPECT_EQ(pair_index(pair_source(k), pair_destination(k)), k);
    }
    EXPECT_THROW(pair_index("X"), std::invalid_argument);
    EXPECT_THROW(pair_index("XQ"), std::invalid_argument);
    EXPECT_THROW(pauli_from_char('q'), std::invalid_argument);
}

TEST(pauli, pair_commutation_is_symplectic) {
    for (size_t a = 0; a < 16; a++) {
        for (size_t b = 0; b < 16; b++) {
            int s = commutation_sign(pair_source(a), pair_source(b)) *
                    commutation_sign(pair_destination(a), pair_destination(b));
            EXPECT_EQ(commutation_sign_pair(a, b), s);
            EXPECT_EQ(anticommutes_pair(a, b), anticommutes_pair(b, a));
        }
    }
}
