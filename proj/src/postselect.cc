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

#include "ftpost/postselect.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ftpost/errors.h"

namespace ftpost {

namespace {

// Below this every entry of the equilibrium channel is treated as collapsed.
constexpr double kCollapsed = 1e-6;

}  // namespace

double scalar_post(double x1, double x2) {
    double den = 1 + x1 * x2;
    if (den == 0) {
        throw DegenerateAcceptance("scalar post-selection with x1 * x2 = -1");
    }
    return (x1 + x2) / den;
}

DiagonalChannel post_step(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m) {
    TraceOut t = measure_traceout(total_cnot_noise(q, c, c), m);
    if (!(t.accept.weight() > 0)) {
        throw DegenerateAcceptance("post-selection acceptance weight is not positive for " + c.str());
    }
    DiagonalChannel kept = t.accept.channel();
    return {kept.z, kept.y, kept.x};
}

FixedPointResult fixed_point(const TwoQubitDiagonalNoise &q, double m, double tol, size_t max_iter) {
    if (!(tol > 0)) {
        throw std::invalid_argument("fixed point tolerance must be positive");
    }
    FixedPointResult r;
    r.channel = DiagonalChannel::identity();
    r.residual = INFINITY;
    while (r.iterations < max_iter) {
        DiagonalChannel next = post_step(r.channel, q, m);
        r.residual = next.max_abs_diff(r.channel);
        r.channel = next;
        r.iterations++;
        if (r.residual < tol) {
            break;
        }
    }
    double largest = std::max({std::abs(r.channel.x), std::abs(r.channel.y), std::abs(r.channel.z)});
    if (largest < kCollapsed) {
        throw NoConvergence("post-selection collapsed onto the completely depolarizing channel");
    }
    if (!(r.residual < tol)) {
        throw NoConvergence(
            "post-selection did not converge after " + std::to_string(r.iterations) +
            " iterations (residual " + std::to_string(r.residual) + ")");
    }
    return r;
}

double fixed_point_equation_residual(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m) {
    const double x = c.x, y = c.y, z = c.z;
    double den = 1 + m * z * z * q(Pauli::I, Pauli::Z);
    double ysum = q(Pauli::Y, Pauli::I) + m * q(Pauli::Y, Pauli::Z);
    double zsum = q(Pauli::Z, Pauli::I) + m * q(Pauli::Z, Pauli::Z);
    double e1 = den * den - z * ysum * zsum;
    double e2 = x - den / ysum;
    double e3 = m * y * y * q(Pauli::X, Pauli::Z) - (z * den - x * x * q(Pauli::X, Pauli::I));
    return std::max({std::abs(e1), std::abs(e2), std::abs(e3)});
}

IndepFixedPoint indep_fixed_point(double f, double b, double m, double tol, size_t max_iter) {
    for (double v : {f, b, m}) {
        if (!(v > 0 && v <= 1)) {
            throw std::invalid_argument("indep_fixed_point parameters must lie in (0,1]");
        }
    }
    IndepFixedPoint r;
    while (r.iterations < max_iter) {
        double good = b * scalar_post(r.x_before, r.x_before * f * m);
        double before = good * good * f;
        double change = std::max(std::abs(good - r.x_good), std::abs(before - r.x_before));
        r.x_good = good;
        r.x_before = before;
        r.iterations++;
        if (change < tol) {
            if (r.x_good < kCollapsed) {
                throw NoConvergence("scalar post-selection collapsed to zero");
            }
            return r;
        }
    }
    throw NoConvergence("scalar post-selection recursion did not converge");
}

PauliDist teleport_output(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m) {
    const double xz = c.x * c.z;
    auto p = hadamard_pattern(
        1, m * xz * q(Pauli::X, Pauli::I), m * m * c.y * c.y * q(Pauli::X, Pauli::Z), m * xz * q(Pauli::I, Pauli::Z));
    PauliDist d{p};
    for (double &v : d.p) {
        if (v < -kValidityTol) {
            throw InvalidChannel("teleportation output has a negative probability: " + d.str());
        }
        v = std::max(v, 0.0);
    }
    return d;
}

double combined_noise(double x_good, double f, double m) {
    return x_good * x_good * x_good * f * f * m;
}

PostSelectionErrors post_selection_errors(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m) {
    PostSelectionErrors e;
    e.p_source = (1 - c.z) / 2;
    e.p_destination = (1 - m * c.z * q(Pauli::I, Pauli::Z)) / 2;
    double both = e.p_source * e.p_destination;
    double accept = both + (1 - e.p_source) * (1 - e.p_destination);
    if (!(accept > 0)) {
        throw DegenerateAcceptance("post-selection never accepts at " + c.str());
    }
    e.p_undetected = both / accept;
    return e;
}

PipelineResult run_pipeline(const NoiseModel &model, double tol) {
    PipelineResult r;
    r.q = diagonal_q(model);
    r.m = measurement_m(model);
    r.equilibrium = fixed_point(r.q, r.m, tol);
    r.output = teleport_output(r.equilibrium.channel, r.q, r.m);
    return r;
}

}  // namespace ftpost
