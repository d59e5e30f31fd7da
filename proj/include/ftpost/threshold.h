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

#ifndef _FTPOST_THRESHOLD_H
#define _FTPOST_THRESHOLD_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftpost/channel.h"
#include "ftpost/codes.h"
#include "ftpost/noise_model.h"
#include "ftpost/postselect.h"

namespace ftpost {

/// -sum p log2 p over the four Pauli outcomes.
double shannon_entropy(const PauliDist &d);

/// h(p) = -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

/// Absolute tolerance in p used by the deterministic root solvers.
inline constexpr double kSolverTol = 1e-11;

/// Root of f on [lo, hi] to absolute tolerance tol. Throws BracketFailure
/// when f(lo) and f(hi) have the same sign.
double solve_root(const std::function<double(double)> &f, double lo, double hi, double tol = kSolverTol);

struct HashingResult {
    double p_threshold = 0;
    PauliDist dist;
    double entropy = 0;
    PipelineResult pipeline;
};

/// Teleportation-output entropy at parameter p; +inf when the post-selection
/// iteration breaks down.
double output_entropy(const NoiseFamily &family, double p);

/// Solves output_entropy(family, p) = 1. Checks that the entropy increases
/// across the bracket before solving.
HashingResult hashing_threshold(const NoiseFamily &family, double tol = kSolverTol);

enum class OneTypeKind {
    /// (p_X, p_Y, p_Z) = (0, 0, p): solves h(p) = 1/2.
    PhaseOnly,
    /// (p, p, p): solves H(1 - 3p, p, p, p) = 1.
    Symmetric,
};

double capacity_hashing_one_type(OneTypeKind kind, double tol = kSolverTol);

struct SweepPoint {
    double r = 0;
    /// NaN when the solve failed.
    double threshold = 0;
    std::string error;
};

/// hashing_threshold of depolarizing noise with measurement fraction r.
std::vector<SweepPoint> sweep_r(std::span<const double> grid, double tol = kSolverTol);

/// Level-0 noise for the Monte Carlo estimator: either raw one-type noise or
/// the teleportation output of a CNOT noise family.
struct ConcatNoise {
    bool one_type = false;
    NoiseFamily family;

    static ConcatNoise phase_only() {
        return {true, {}};
    }
    static ConcatNoise of(const NoiseFamily &f) {
        return {false, f};
    }

    /// Throws NoConvergence when the family has no post-selection equilibrium at p.
    PauliDist level0(double p) const;
    std::string name() const;
    /// Starting bracket used when the config leaves it unset.
    std::array<double, 2> default_bracket() const;
};

struct McConfig {
    size_t population = 10000;
    size_t max_levels = 200;
    /// Independent bisections, one per derived seed.
    size_t seeds = 10;
    std::optional<uint64_t> seed;
    /// Zero means ConcatNoise::default_bracket().
    double lo = 0;
    double hi = 0;
    double tol = 2e-4;
    /// Below-threshold mark on the population-mean infidelity.
    double below = 1e-6;
    /// Above-threshold mark: the worst population-mean sector flip rate
    /// (p_X + p_Y, p_Z + p_Y or p_X + p_Z) reaches above_fraction / 2.
    double above_fraction = 0.9;
    size_t threads = 1;
    size_t bootstrap_resamples = 1000;

    /// Throws std::invalid_argument on inconsistent settings or a missing seed.
    void validate() const;
};

enum class McVerdict { Below, Above, Inconclusive };

struct McRun {
    McVerdict verdict = McVerdict::Inconclusive;
    /// Population-mean infidelity per level, starting at level 0.
    std::vector<double> infidelity;
    /// Largest population-mean sector flip rate per level.
    std::vector<double> worst_sector;
};

/// Population dynamics for the [[7,1,3]] code starting from `level0`. The
/// stream key selects independent random streams.
McRun run_population(const PauliDist &level0, const McConfig &cfg, uint64_t stream_key);

struct McThreshold {
    double threshold = 0;
    /// Bootstrap standard error of the mean over seeds.
    double error_bar = 0;
    std::vector<double> per_seed;
};

/// Throws Inconclusive when a run decides neither way and BracketFailure when
/// the bracket endpoints do not straddle the threshold.
McThreshold concat_threshold_mc(const ConcatNoise &noise, const McConfig &cfg);

/// [[23,1,7]] logical entropy of the teleportation output at p.
double first_level_entropy_2317(const NoiseFamily &family, double p);

/// Solves first_level_entropy_2317(family, p) = target_e1 on [lo, hi].
double entropy_match_threshold(const NoiseFamily &family, double target_e1, double lo, double hi, double tol = 1e-7);

/// Bit-sector noise 1 - 2(p_X + p_Y) of the teleportation output.
double sector_noise(const NoiseFamily &family, double p);

/// [f(x1) - f(x2)] / 2.
double crash_difference(CrashCode code, double x1, double x2);

/// Solves crash_difference(code, x(baseline), x(p)) = delta for p <= baseline.
double crash_difference_threshold(
    CrashCode code, const NoiseFamily &family, double baseline, double delta, double tol = kSolverTol);

struct FixedFidelity {
    double p = 0;
    double fidelity = 0;
};

/// First-level fidelity from the teleportation output at p: the exact
/// [[7,1,3]] block decomposition, or independent crash-polynomial sectors
/// for [[23,1,7]].
double first_level_fidelity_at(CrashCode code, const NoiseFamily &family, double p);

/// p where the teleportation-output fidelity equals the first-level fidelity.
FixedFidelity fixed_fidelity_point(
    CrashCode code, const NoiseFamily &family, double lo = 0.005, double hi = 0.06, double tol = kSolverTol);

/// log2 log2 e.
double convergence_alpha();

/// (t_c - t) d^(l alpha) / t_c.
double convergence_delta(double t, double t_c, int d, int l);

struct OverheadEstimate {
    double p_k = 1;
    double r = 0;
    /// Power of eps in the overhead N eps^exponent, i.e. -N log_r(1 - p).
    double exponent = 0;
    double n = 0;
    double eps = 0;
    double order = 0;
};

OverheadEstimate overhead_estimate(double n, double p, double r, double eps);

}  // namespace ftpost

#endif
