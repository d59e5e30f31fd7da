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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ftpost/errors.h"

namespace ftpost {

DensityVector DensityVector::from_bloch(double cx, double cy, double cz) {
    DensityVector v{{1, cx, cy, cz}};
    if (v.bloch_norm() > 1 + kValidityTol) {
        throw std::invalid_argument("Bloch vector longer than 1");
    }
    return v;
}

DensityVector DensityVector::eigenstate(Pauli axis, int sign) {
    if (axis == Pauli::I) {
        throw std::invalid_argument("eigenstate axis must be X, Y or Z");
    }
    DensityVector v;
    v.c[index_of(axis)] = sign > 0 ? 1 : -1;
    return v;
}

DensityVector DensityVector::maximally_mixed() {
    return {};
}

double DensityVector::bloch_norm() const {
    return std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

double DiagonalChannel::operator[](Pauli p) const {
    switch (p) {
        case Pauli::I:
            return 1;
        case Pauli::X:
            return x;
        case Pauli::Y:
            return y;
        case Pauli::Z:
            return z;
    }
    return 1;
}

double DiagonalChannel::max_abs_diff(const DiagonalChannel &other) const {
    return std::max({std::abs(x - other.x), std::abs(y - other.y), std::abs(z - other.z)});
}

std::string DiagonalChannel::str() const {
    std::ostringstream out;
    out.precision(12);
    out << "[1, " << x << ", " << y << ", " << z << "]";
    return out.str();
}

void PauliDist::validate() const {
    double total = 0;
    for (double v : p) {
        if (!(v >= -kValidityTol && v <= 1 + kValidityTol)) {
            throw InvalidChannel("Pauli probability out of [0,1] in " + str());
        }
        total += v;
    }
    if (std::abs(total - 1) > kValidityTol) {
        throw InvalidChannel("Pauli probabilities do not sum to 1 in " + str());
    }
}

std::string PauliDist::str() const {
    std::ostringstream out;
    out.precision(12);
    out << "(" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ")";
    return out.str();
}

DiagonalChannel dist_to_channel(const PauliDist &d) {
    return {
        1 - 2 * (d.p[2] + d.p[3]),
        1 - 2 * (d.p[1] + d.p[3]),
        1 - 2 * (d.p[1] + d.p[2]),
    };
}

std::array<double, 4> hadamard_pattern(double v0, double v1, double v2, double v3) {
    return {
        (v0 + v1 + v2 + v3) / 4,
        (v0 + v1 - v2 - v3) / 4,
        (v0 - v1 + v2 - v3) / 4,
        (v0 - v1 - v2 + v3) / 4,
    };
}

PauliDist channel_to_dist(const DiagonalChannel &c) {
    PauliDist d{hadamard_pattern(1, c.x, c.y, c.z)};
    for (double &v : d.p) {
        if (v < -kValidityTol) {
            throw InvalidChannel("channel " + c.str() + " has a negative Pauli probability");
        }
        v = std::max(v, 0.0);
    }
    return d;
}

DiagonalChannel compose(const DiagonalChannel &a, const DiagonalChannel &b) {
    return {a.x * b.x, a.y * b.y, a.z * b.z};
}

double measurement_correct_prob(const DiagonalChannel &c, Pauli axis) {
    if (axis == Pauli::I) {
        throw std::invalid_argument("measurement axis must be X, Y or Z");
    }
    return (1 + c[axis]) / 2;
}

double fidelity(const DensityVector &rho, const DensityVector &nu) {
    if (std::abs(nu.bloch_norm() - 1) > 1e-9) {
        throw std::invalid_argument("fidelity reference state must be pure");
    }
    double dot = 0;
    for (size_t k = 0; k < 4; k++) {
        dot += rho.c[k] * nu.c[k];
    }
    return dot / 2;
}

DensityVector apply(const DiagonalChannel &c, const DensityVector &rho) {
    return {{rho.c[0], c.x * rho.c[1], c.y * rho.c[2], c.z * rho.c[3]}};
}

}  // namespace ftpost
