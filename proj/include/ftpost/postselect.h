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

#ifndef _FTPOST_POSTSELECT_H
#define _FTPOST_POSTSELECT_H

#include <cstddef>

#include "ftpost/channel.h"
#include "ftpost/cnot.h"
#include "ftpost/noise_model.h"

namespace ftpost {

inline constexpr double kFixedPointTol = 1e-14;
inline constexpr size_t kFixedPointMaxIter = 1000000;

/// Noise after CNOT-ing a qubit with noise x1 onto one with noise x2 and
/// keeping only the no-error outcome: (x1 + x2) / (1 + x1 x2).
double scalar_post(double x1, double x2);

/// One round of post-selection: CNOT between two copies of `c`, keep the
/// accepted branch of the destination measurement, then swap the bit and
/// phase sectors (Hadamard) for the next round.
///
/// m = 1 - 2 p_m scales the destination column exactly as in measure_traceout.
DiagonalChannel post_step(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m = 1);

struct FixedPointResult {
    DiagonalChannel channel;
    size_t iterations = 0;
    /// Max-norm change produced by the last applied step.
    double residual = 0;
};

/// Iterates post_step from the noiseless channel until successive iterates
/// differ by less than tol. Throws NoConvergence when max_iter is exhausted
/// or the iteration collapses onto the completely depolarizing channel.
FixedPointResult fixed_point(
    const TwoQubitDiagonalNoise &q,
    double m = 1,
    double tol = kFixedPointTol,
    size_t max_iter = kFixedPointMaxIter);

/// Residuals of the closed-form equilibrium conditions, e.g.
/// (1 + m z^2 Q_IZ)^2 = z (Q_YI + m Q_YZ)(Q_ZI + m Q_ZZ). Returns the max.
double fixed_point_equation_residual(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m = 1);

struct IndepFixedPoint {
    /// Noise right after post-selection for a sector.
    double x_good = 1;
    /// Noise just before the next post-selection of that sector.
    double x_before = 1;
    size_t iterations = 0;
};

/// Scalar recursion for independent bit/phase noise:
/// x_good = b * post(x_before, x_before f m), x_before = x_good^2 f.
IndepFixedPoint indep_fixed_point(
    double f, double b, double m, double tol = kFixedPointTol, size_t max_iter = kFixedPointMaxIter);

/// Pauli distribution left on a teleported qubit. The source uses the
/// equilibrium channel (x,y,z) and the destination its Hadamard image (z,y,x).
PauliDist teleport_output(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m);

/// Total teleportation noise x_g^3 f^2 m for independent bit/phase noise.
double combined_noise(double x_good, double f, double m);

/// Bit-flip bookkeeping of one post-selection round at a given channel.
struct PostSelectionErrors {
    /// Source error just before post-selection.
    double p_source = 0;
    /// Destination error just before post-selection, including fresh gate
    /// and measurement flips.
    double p_destination = 0;
    /// Source and destination both flipped, so the error goes unnoticed;
    /// conditioned on acceptance.
    double p_undetected = 0;
};

PostSelectionErrors post_selection_errors(const DiagonalChannel &c, const TwoQubitDiagonalNoise &q, double m);

/// Full pipeline for a noise model: Q, m, equilibrium, teleportation output.
struct PipelineResult {
    TwoQubitDiagonalNoise q;
    double m = 1;
    FixedPointResult equilibrium;
    PauliDist output;
};

PipelineResult run_pipeline(const NoiseModel &model, double tol = kFixedPointTol);

}  // namespace ftpost

#endif
