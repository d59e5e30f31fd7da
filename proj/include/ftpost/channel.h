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

#ifndef _FTPOST_CHANNEL_H
#define _FTPOST_CHANNEL_H

#include <array>
#include <string>

#include "ftpost/pauli.h"

namespace ftpost {

/// Bloch coordinates (1, c_X, c_Y, c_Z) of a one-qubit density matrix
/// rho = (I + c_X X + c_Y Y + c_Z Z) / 2.
struct DensityVector {
    std::array<double, 4> c{1, 0, 0, 0};

    static DensityVector from_bloch(double cx, double cy, double cz);
    /// +1 eigenstate of `axis` when `sign` > 0, else the -1 eigenstate.
    static DensityVector eigenstate(Pauli axis, int sign);
    static DensityVector maximally_mixed();

    double bloch_norm() const;
    bool operator==(const DensityVector &other) const = default;
};

/// One-qubit diagonal Pauli channel [1, x, y, z] (the leading 1 implicit).
struct DiagonalChannel {
    double x = 1;
    double y = 1;
    double z = 1;

    static DiagonalChannel identity() {
        return {};
    }
    static DiagonalChannel completely_depolarizing() {
        return {0, 0, 0};
    }

    /// Entry N_{sigma sigma}; the identity entry is 1.
    double operator[](Pauli p) const;
    double max_abs_diff(const DiagonalChannel &other) const;
    std::string str() const;
    bool operator==(const DiagonalChannel &other) const = default;
};

/// Probability vector (p_I, p_X, p_Y, p_Z) of one-qubit Pauli errors.
struct PauliDist {
    std::array<double, 4> p{1, 0, 0, 0};

    static PauliDist from(double pi, double px, double py, double pz) {
        return PauliDist{{pi, px, py, pz}};
    }

    double operator[](Pauli q) const {
        return p[index_of(q)];
    }
    double &operator[](Pauli q) {
        return p[index_of(q)];
    }
    double fidelity() const {
        return p[0];
    }
    /// p_X + p_Y + p_Z, computed without cancellation against p_I.
    double infidelity() const {
        return p[1] + p[2] + p[3];
    }
    /// Throws InvalidChannel unless every entry is in [0,1] and the sum is 1 (1e-12).
    void validate() const;
    std::string str() const;
    bool operator==(const PauliDist &other) const = default;
};

DiagonalChannel dist_to_channel(const PauliDist &d);

/// Inverse of dist_to_channel. Entries in [-1e-12, 0) are clamped to 0 after
/// the check; anything lower throws InvalidChannel.
PauliDist channel_to_dist(const DiagonalChannel &c);

/// Unclamped (1/4) * Hadamard-pattern matrix applied to [1, x, y, z].
std::array<double, 4> hadamard_pattern(double v0, double v1, double v2, double v3);

/// Sequential application of two diagonal channels (componentwise product).
DiagonalChannel compose(const DiagonalChannel &a, const DiagonalChannel &b);

/// Probability that a Pauli-`axis` measurement after the channel returns the
/// correct eigenvalue: (1 + N_{axis axis}) / 2.
double measurement_correct_prob(const DiagonalChannel &c, Pauli axis);

/// Fidelity of rho against the pure state nu: half the inner product of the
/// density vectors. Throws std::invalid_argument if nu is not pure.
double fidelity(const DensityVector &rho, const DensityVector &nu);

/// Applies a diagonal channel to a density vector.
DensityVector apply(const DiagonalChannel &c, const DensityVector &rho);

}  // namespace ftpost

#endif
