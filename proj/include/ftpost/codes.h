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

#ifndef _FTPOST_CODES_H
#define _FTPOST_CODES_H

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftpost/channel.h"
#include "ftpost/errors.h"

namespace ftpost {

/// Probabilities (a0, a1, a2, a3) that a one-type [[7,1,3]] error lies in a
/// coset of minimum weight 0..3. Templated so that the class algebra can be
/// checked in exact arithmetic.
template <typename T>
struct ClassDist {
    std::array<T, 4> a{T(1), T(0), T(0), T(0)};

    const T &operator[](size_t k) const {
        return a[k];
    }
    T &operator[](size_t k) {
        return a[k];
    }
    bool operator==(const ClassDist &other) const = default;
};

using DistanceClassDist = ClassDist<double>;

/// Throws InvalidChannel unless entries are >= 0 and sum to 1 (1e-12).
void validate(const DistanceClassDist &a);

/// (1/16) M7 [1, x^3, x^4, x^7] for independent one-type noise x = 1 - 2p.
DistanceClassDist distance_classes_from_x(double x);

/// Number of weight-w one-type errors (row w) whose coset has minimum weight d
/// (column d), obtained by enumerating all 2^7 errors.
std::array<std::array<int, 4>, 8> distance_table_713();

/// Minimum-weight class (0..3) of a 7-bit one-type error pattern.
int distance_class_713(uint8_t bits);

/// Class distribution of the product of independent errors drawn from a and b.
template <typename T>
ClassDist<T> combine_classes(const ClassDist<T> &a, const ClassDist<T> &b) {
    const T s(7);
    const T b0 = b[0], b1 = b[1], b2 = b[2], b3 = b[3];
    ClassDist<T> out;
    out[0] = b0 * a[0] + b1 / s * a[1] + b2 / s * a[2] + b3 * a[3];
    out[1] = b1 * a[0] + (b0 + T(6) * b2 / s) * a[1] + (b3 + T(6) * b1 / s) * a[2] + b2 * a[3];
    out[2] = b2 * a[0] + (b3 + T(6) * b1 / s) * a[1] + (b0 + T(6) * b2 / s) * a[2] + b1 * a[3];
    out[3] = b3 * a[0] + b2 / s * a[1] + b1 / s * a[2] + b0 * a[3];
    return out;
}

template <typename T>
struct ClassPostSelection {
    T p_keep;
    ClassDist<T> out;
};

/// Keeps the source block only when the two errors cancel to a stabilizer
/// (combined class 0). Throws DegenerateAcceptance when that never happens.
template <typename T>
ClassPostSelection<T> postselect_classes(const ClassDist<T> &a, const ClassDist<T> &b) {
    const T s(7);
    ClassDist<T> kept;
    kept[0] = a[0] * b[0];
    kept[1] = a[1] * b[1] / s;
    kept[2] = a[2] * b[2] / s;
    kept[3] = a[3] * b[3];
    T pk = kept[0] + kept[1] + kept[2] + kept[3];
    if (!(pk > T(0))) {
        throw DegenerateAcceptance("class post-selection keeps nothing");
    }
    for (auto &v : kept.a) {
        v /= pk;
    }
    return {pk, kept};
}

/// H(classes) - H(syndrome) in bits: the entropy left once the syndrome
/// (classes {0,3} vs {1,2}) is known.
double syndrome_class_entropy(const DistanceClassDist &a);

using Rational = boost::rational<int64_t>;

struct CrashTerm {
    int weight;
    Rational coefficient;
};

/// Encoded noise f(x) of a one-type sector after decoding, as a sum of
/// coefficient * x^weight.
struct CrashPolynomial {
    std::vector<CrashTerm> terms;

    double operator()(double x) const;
    /// k-th derivative evaluated exactly at x = 1.
    Rational derivative_at_one(int k) const;
};

enum class CrashCode { Steane7, Golay23 };

CrashPolynomial crash_poly(CrashCode code);

/// Solves f(1) = 1 and f^(k)(1) = 0 for k < weights.size() in exact arithmetic.
CrashPolynomial derive_crash_poly(std::span<const int> weights);

enum class DegeneracyCase { Steane7Level1, Steane7Level2, Golay23 };

/// Estimated probability of undetected error coincidences caused by
/// low-weight stabilizers, as a function of the per-qubit error rate p_g.
double degeneracy_correction(DegeneracyCase c, double p_g);

/// One-qubit-per-bit Pauli error on the 7 qubits of the Steane code. Bit
/// (6 - j) of each mask refers to qubit j + 1.
struct Pauli7 {
    uint8_t x = 0;
    uint8_t z = 0;

    Pauli at(int qubit) const;
    bool operator==(const Pauli7 &other) const = default;
};

struct StabilizerCode7 {
    /// Hamming parity checks 0001111, 0110011, 1010101.
    static constexpr std::array<uint8_t, 3> kChecks{0b0001111, 0b0110011, 0b1010101};
    static constexpr uint8_t kAll = 0b1111111;

    /// Three X-type then three Z-type generators.
    static std::array<Pauli7, 6> generators();
    static Pauli7 logical_x() {
        return {kAll, 0};
    }
    static Pauli7 logical_z() {
        return {0, kAll};
    }

    /// Parity-check value of a 7-bit pattern; single-qubit errors give the
    /// qubit number 1..7.
    static int check(uint8_t bits);
    /// 6-bit syndrome: X-error checks in the high three bits.
    static int syndrome(const Pauli7 &e);
    /// Error on the qubit named by each half of the syndrome.
    static Pauli7 representative(int syndrome);
    /// Logical class of e relative to representative(syndrome(e)).
    static Pauli logical_class(const Pauli7 &e);
};

bool anticommutes(const Pauli7 &a, const Pauli7 &b);

struct SyndromeRecord {
    int syndrome = 0;
    /// Probability of observing this syndrome.
    double weight = 0;
    /// Unnormalized weight of each logical coset relative to the representative.
    std::array<double, 4> coset{};
    /// Logical applied on top of the representative (largest coset, ties to earliest).
    Pauli recovery = Pauli::I;

    /// Conditional logical error after recovery.
    PauliDist logical() const;
    DiagonalChannel channel() const {
        return dist_to_channel(logical());
    }
};

struct SyndromeDecomposition {
    std::array<SyndromeRecord, 64> records;

    /// Syndrome-averaged logical error after recovery.
    PauliDist average() const;
};

using Children7 = std::array<PauliDist, 7>;

/// Splits all 4^7 errors by syndrome and logical coset.
SyndromeDecomposition block_decompose_713(const Children7 &children);

/// Weights of the cosets e * L * S for the four logicals L, with e itself as
/// the frame. Children are passed as raw (p_I, p_X, p_Y, p_Z) arrays and need
/// not be normalized. Falls back to log space on underflow, in which case the
/// result is rescaled so that its maximum is 1.
std::array<double, 4> coset_weights_713(const std::array<const double *, 7> &children, const Pauli7 &e);

/// p_I of block_decompose_713(children).average().
double first_level_fidelity(const Children7 &children);

/// Generator rows of the [23,12,7] Golay code as 23-bit masks.
std::array<uint32_t, 12> golay_generator();

/// 11 independent parity checks of the Golay code.
std::array<uint32_t, 11> golay_parity_checks();

/// Number of weight-8 elements of the X (or Z) stabilizer group of [[23,1,7]].
int golay_weight8_stabilizers();

/// H(logical | syndrome) of one sector with independent flips, x = 1 - 2p.
double golay_sector_entropy(double x);

/// H(logical | syndrome) of [[23,1,7]] with i.i.d. Pauli noise d on every
/// qubit, bit and phase sectors decoded jointly.
double golay_logical_entropy(const PauliDist &d);

}  // namespace ftpost

#endif
