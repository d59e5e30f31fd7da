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

#ifndef _FTPOST_NOISE_MODEL_H
#define _FTPOST_NOISE_MODEL_H

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "ftpost/cnot.h"

namespace ftpost {

/// CNOT with probability p/15 of each non-identity two-qubit Pauli, and a
/// measurement error probability (4/15) r p.
struct Depolarizing {
    double p = 0;
    double r = 0;
};

/// Depolarizing with the full (4/15) p measurement error, i.e. r = 1.
struct Knill {
    double p = 0;
};

/// Only forward-propagating errors: X on the destination and Z on the source,
/// each with probability pf.
struct Forward {
    double pf = 0;
};

/// Forward errors pf, backward errors pb (X on source, Z on destination),
/// measurement errors pm, all independent.
struct Independent {
    double pf = 0;
    double pb = 0;
    double pm = 0;
};

using NoiseModel = std::variant<Depolarizing, Knill, Forward, Independent>;

using TwoQubitPauliDist = std::array<double, 16>;

/// Throws std::invalid_argument if any parameter lies outside [0,1].
void validate(const NoiseModel &m);

TwoQubitPauliDist two_qubit_dist(const NoiseModel &m);

/// Q_{ss'} = sum_t p_t * (+1 if t commutes with ss', else -1).
TwoQubitDiagonalNoise diagonal_q(const NoiseModel &m);

/// m = 1 - 2 p_m.
double measurement_m(const NoiseModel &m);

/// Parses `depolarizing:p=0.08,r=1`, `knill:p=0.069`, `forward:pf=0.048`,
/// `independent:pf=..,pb=..,pm=..`. Unknown keys are rejected.
NoiseModel parse_noise_model(std::string_view spec);
std::string format_noise_model(const NoiseModel &m);

/// A one-parameter family of models, used by the threshold solvers.
struct NoiseFamily {
    enum class Kind { Depolarizing, Knill, Forward };
    Kind kind = Kind::Depolarizing;
    /// Measurement-error fraction; only meaningful for Depolarizing.
    double r = 0;

    static NoiseFamily depolarizing(double r = 0) {
        return {Kind::Depolarizing, r};
    }
    static NoiseFamily knill() {
        return {Kind::Knill, 1};
    }
    static NoiseFamily forward() {
        return {Kind::Forward, 0};
    }

    NoiseModel at(double p) const;
    std::string name() const;
};

/// Accepts `depolarizing`, `depolarizing:r=0.5`, `knill`, `forward`.
NoiseFamily parse_noise_family(std::string_view spec);

}  // namespace ftpost

#endif
