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

#ifndef _FTPOST_CNOT_H
#define _FTPOST_CNOT_H

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "ftpost/channel.h"
#include "ftpost/pauli.h"

namespace ftpost {

/// Sixteen diagonal superoperator entries indexed by pair_index (source-major).
using Diag16 = std::array<double, 16>;

/// Diagonal entries Q_{sigma sigma'} of the noise a CNOT gate adds.
struct TwoQubitDiagonalNoise {
    Diag16 q;

    static TwoQubitDiagonalNoise noiseless();

    double operator()(Pauli source, Pauli destination) const {
        return q[pair_index(source, destination)];
    }
    /// Q_II = 1, |Q| <= 1, and the induced 16-outcome distribution is >= -1e-12.
    void validate() const;
    /// Inverts the commutation-sign transform back to outcome probabilities.
    std::array<double, 16> outcome_probabilities() const;
};

/// CNOT conjugation pairing on two-qubit Pauli labels (an involution).
size_t cnot_partner(size_t k);

/// Diagonal of O(CNOT) (S (x) D) O(CNOT).
Diag16 cnot_conjugate(const DiagonalChannel &source, const DiagonalChannel &destination);

/// Diagonal of Q o O(CNOT) o (S (x) D) o O(CNOT).
Diag16 total_cnot_noise(
    const TwoQubitDiagonalNoise &q, const DiagonalChannel &source, const DiagonalChannel &destination);

/// One measurement branch after tracing out the destination qubit.
struct TraceBranch {
    /// Unnormalized entries G_sigma; component 0 is the branch probability.
    std::array<double, 4> g;

    double weight() const {
        return g[0];
    }
    /// Normalized branch channel. Throws DegenerateAcceptance if weight <= 0.
    DiagonalChannel channel() const;
};

struct TraceOut {
    TraceBranch accept;
    TraceBranch reject;
};

/// Destination Z-measurement trace-out with measurement noise m = 1 - 2 p_m:
/// accept = (A + m B) / 2, reject = (A - m B) / 2 where A and B are the
/// sigma-I and sigma-Z columns of n.
TraceOut measure_traceout(const Diag16 &n, double m);

/// Dense real superoperator on one or two qubits in the Pauli basis.
struct Superoperator {
    size_t num_qubits = 1;
    std::vector<double> m;

    static Superoperator identity(size_t num_qubits);
    static Superoperator diagonal(std::span<const double> entries);
    /// O(U)_{ab} = tr(P_a U P_b U^dagger) / 2^n.
    static Superoperator from_unitary(size_t num_qubits, std::span<const std::complex<double>> u);

    size_t side() const {
        return size_t{1} << (2 * num_qubits);
    }
    double &operator()(size_t r, size_t c) {
        return m[r * side() + c];
    }
    double operator()(size_t r, size_t c) const {
        return m[r * side() + c];
    }
    Superoperator operator*(const Superoperator &rhs) const;
    double max_abs_diff(const Superoperator &other) const;
};

Superoperator tensor(const Superoperator &a, const Superoperator &b);

/// Signed permutation superoperator of CNOT (source = first qubit).
Superoperator build_cnot_superoperator();

/// Dense 16x16 diagonal superoperator of a two-qubit Pauli channel.
Superoperator diagonal_superoperator(const TwoQubitDiagonalNoise &q);
Superoperator diagonal_superoperator(const DiagonalChannel &c);

/// Code-channel map 2^-(n-k) E^t O(R) N E for a 1-logical-qubit, 2-physical-qubit
/// code. `encoder` holds the four logical columns E_I..E_Z as 16-vectors.
std::array<std::array<double, 4>, 4> code_channel_map(
    const std::array<Diag16, 4> &encoder, size_t recovery, const Superoperator &noise);

/// Encoders of the two-qubit codes C1 = {00, 11} and C2 = {00, 10}.
std::array<Diag16, 4> encoder_c1();
std::array<Diag16, 4> encoder_c2();

/// Maximum absolute deviation between the code-channel maps G^{II}, G^{IX}
/// (C2 frame) and measure_traceout's branches, including off-diagonals.
double appendix_a_crosscheck(
    const DiagonalChannel &source, const DiagonalChannel &destination, const TwoQubitDiagonalNoise &q, double m = 1);

/// Maximum absolute deviation between the C1-frame and C2-frame code-channel maps.
double code_frame_crosscheck(
    const DiagonalChannel &source, const DiagonalChannel &destination, const TwoQubitDiagonalNoise &q);

}  // namespace ftpost

#endif
