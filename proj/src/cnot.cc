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

#include "ftpost/cnot.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftpost/errors.h"

namespace ftpost {

namespace {

// (II), (IX), IY<->ZY, IZ<->ZZ, XI<->XX, XY<->YZ, XZ<->YY, YI<->YX, (ZI), (ZX).
constexpr std::array<size_t, 16> kCnotPartner{0, 1, 14, 15, 5, 4, 11, 10, 9, 8, 7, 6, 12, 13, 2, 3};

using Mat = std::vector<std::complex<double>>;

Mat pauli_matrix(Pauli p) {
    using C = std::complex<double>;
    switch (p) {
        case Pauli::I:
            return {1, 0, 0, 1};
        case Pauli::X:
            return {0, 1, 1, 0};
        case Pauli::Y:
            return {0, C(0, -1), C(0, 1), 0};
        case Pauli::Z:
            return {1, 0, 0, -1};
    }
    return {};
}

Mat kron(const Mat &a, size_t na, const Mat &b, size_t nb) {
    Mat out(na * nb * na * nb);
    size_t n = na * nb;
    for (size_t i = 0; i < na; i++) {
        for (size_t j = 0; j < na; j++) {
            for (size_t k = 0; k < nb; k++) {
                for (size_t l = 0; l < nb; l++) {
                    out[(i * nb + k) * n + (j * nb + l)] = a[i * na + j] * b[k * nb + l];
                }
            }
        }
    }
    return out;
}

Mat matmul(const Mat &a, const Mat &b, size_t n) {
    Mat out(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            auto aik = a[i * n + k];
            for (size_t j = 0; j < n; j++) {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return out;
}

Mat dagger(const Mat &a, size_t n) {
    Mat out(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out[j * n + i] = std::conj(a[i * n + j]);
        }
    }
    return out;
}

Mat pauli_basis_element(size_t num_qubits, size_t k) {
    if (num_qubits == 1) {
        return pauli_matrix(static_cast<Pauli>(k));
    }
    return kron(pauli_matrix(pair_source(k)), 2, pauli_matrix(pair_destination(k)), 2);
}

}  // namespace

TwoQubitDiagonalNoise TwoQubitDiagonalNoise::noiseless() {
    TwoQubitDiagonalNoise r;
    r.q.fill(1);
    return r;
}

std::array<double, 16> TwoQubitDiagonalNoise::outcome_probabilities() const {
    std::array<double, 16> p{};
    for (size_t t = 0; t < 16; t++) {
        double acc = 0;
        for (size_t s = 0; s < 16; s++) {
            acc += commutation_sign_pair(t, s) * q[s];
        }
        p[t] = acc / 16;
    }
    return p;
}

void TwoQubitDiagonalNoise::validate() const {
    if (std::abs(q[0] - 1) > kValidityTol) {
        throw InvalidChannel("two-qubit noise must have Q_II = 1");
    }
    for (double v : q) {
        if (!(std::abs(v) <= 1 + kValidityTol)) {
            throw InvalidChannel("two-qubit noise entry outside [-1,1]");
        }
    }
    for (double p : outcome_probabilities()) {
        if (p < -kValidityTol) {
            throw InvalidChannel("two-qubit noise induces a negative outcome probability");
        }
    }
}

size_t cnot_partner(size_t k) {
    return kCnotPartner.at(k);
}

Diag16 cnot_conjugate(const DiagonalChannel &source, const DiagonalChannel &destination) {
    Diag16 r{};
    for (size_t k = 0; k < 16; k++) {
        size_t c = kCnotPartner[k];
        r[k] = source[pair_source(c)] * destination[pair_destination(c)];
    }
    return r;
}

Diag16 total_cnot_noise(
    const TwoQubitDiagonalNoise &q, const DiagonalChannel &source, const DiagonalChannel &destination) {
    Diag16 n = cnot_conjugate(source, destination);
    for (size_t k = 0; k < 16; k++) {
        n[k] *= q.q[k];
    }
    return n;
}

DiagonalChannel TraceBranch::channel() const {
    if (!(g[0] > 0)) {
        throw DegenerateAcceptance("measurement branch has non-positive weight");
    }
    return {g[1] / g[0], g[2] / g[0], g[3] / g[0]};
}

TraceOut measure_traceout(const Diag16 &n, double m) {
    if (!(m >= -1 && m <= 1)) {
        throw std::invalid_argument("measurement noise m must lie in [-1,1]");
    }
    TraceOut out;
    for (Pauli s : kPaulis) {
        double a = n[pair_index(s, Pauli::I)];
        double b = n[pair_index(s, Pauli::Z)];
        out.accept.g[index_of(s)] = (a + m * b) / 2;
        out.reject.g[index_of(s)] = (a - m * b) / 2;
    }
    return out;
}

Superoperator Superoperator::identity(size_t num_qubits) {
    Superoperator s{num_qubits, {}};
    s.m.assign(s.side() * s.side(), 0);
    for (size_t k = 0; k < s.side(); k++) {
        s(k, k) = 1;
    }
    return s;
}

Superoperator Superoperator::diagonal(std::span<const double> entries) {
    Superoperator s;
    if (entries.size() == 4) {
        s.num_qubits = 1;
    } else if (entries.size() == 16) {
        s.num_qubits = 2;
    } else {
        throw std::invalid_argument("diagonal superoperator needs 4 or 16 entries");
    }
    s.m.assign(s.side() * s.side(), 0);
    for (size_t k = 0; k < entries.size(); k++) {
        s(k, k) = entries[k];
    }
    return s;
}

Superoperator Superoperator::from_unitary(size_t num_qubits, std::span<const std::complex<double>> u) {
    size_t dim = size_t{1} << num_qubits;
    if (u.size() != dim * dim) {
        throw std::invalid_argument("unitary has the wrong size");
    }
    Mat um(u.begin(), u.end());
    Mat ud = dagger(um, dim);
    Superoperator s{num_qubits, {}};
    s.m.assign(s.side() * s.side(), 0);
    for (size_t b = 0; b < s.side(); b++) {
        Mat conj = matmul(matmul(um, pauli_basis_element(num_qubits, b), dim), ud, dim);
        for (size_t a = 0; a < s.side(); a++) {
            Mat prod = matmul(pauli_basis_element(num_qubits, a), conj, dim);
            std::complex<double> tr = 0;
            for (size_t i = 0; i < dim; i++) {
                tr += prod[i * dim + i];
            }
            s(a, b) = tr.real() / static_cast<double>(dim);
        }
    }
    return s;
}

Superoperator Superoperator::operator*(const Superoperator &rhs) const {
    if (num_qubits != rhs.num_qubits) {
        throw std::invalid_argument("superoperator size mismatch");
    }
    size_t n = side();
    Superoperator out{num_qubits, std::vector<double>(n * n, 0)};
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            double a = m[i * n + k];
            if (a == 0) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                out.m[i * n + j] += a * rhs.m[k * n + j];
            }
        }
    }
    return out;
}

double Superoperator::max_abs_diff(const Superoperator &other) const {
    if (m.size() != other.m.size()) {
        throw std::invalid_argument("superoperator size mismatch");
    }
    double d = 0;
    for (size_t k = 0; k < m.size(); k++) {
        d = std::max(d, std::abs(m[k] - other.m[k]));
    }
    return d;
}

Superoperator tensor(const Superoperator &a, const Superoperator &b) {
    if (a.num_qubits != 1 || b.num_qubits != 1) {
        throw std::invalid_argument("tensor only supports one-qubit factors");
    }
    Superoperator out{2, std::vector<double>(256, 0)};
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            for (size_t k = 0; k < 4; k++) {
                for (size_t l = 0; l < 4; l++) {
                    out(4 * i + k, 4 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Superoperator build_cnot_superoperator() {
    const std::vector<std::complex<double>> cnot{
        1, 0, 0, 0,  //
        0, 1, 0, 0,  //
        0, 0, 0, 1,  //
        0, 0, 1, 0,  //
    };
    Superoperator s = Superoperator::from_unitary(2, cnot);
    for (double &v : s.m) {
        v = std::round(v);
    }
    return s;
}

Superoperator diagonal_superoperator(const TwoQubitDiagonalNoise &q) {
    return Superoperator::diagonal(q.q);
}

Superoperator diagonal_superoperator(const DiagonalChannel &c) {
    std::array<double, 4> d{1, c.x, c.y, c.z};
    return Superoperator::diagonal(d);
}

std::array<std::array<double, 4>, 4> code_channel_map(
    const std::array<Diag16, 4> &encoder, size_t recovery, const Superoperator &noise) {
    if (noise.num_qubits != 2) {
        throw std::invalid_argument("code channel map expects a two-qubit superoperator");
    }
    std::array<std::array<double, 4>, 4> g{};
    for (size_t a = 0; a < 4; a++) {
        for (size_t b = 0; b < 4; b++) {
            double acc = 0;
            for (size_t j = 0; j < 16; j++) {
                if (encoder[a][j] == 0) {
                    continue;
                }
                double row = 0;
                for (size_t k = 0; k < 16; k++) {
                    row += noise(j, k) * encoder[b][k];
                }
                acc += encoder[a][j] * commutation_sign_pair(recovery, j) * row;
            }
            g[a][b] = acc / 2;
        }
    }
    return g;
}

std::array<Diag16, 4> encoder_c1() {
    std::array<Diag16, 4> e{};
    e[0][pair_index("II")] = 1;
    e[0][pair_index("ZZ")] = 1;
    // XX (II + ZZ) = XX - YY.
    e[1][pair_index("XX")] = 1;
    e[1][pair_index("YY")] = -1;
    e[2][pair_index("XY")] = 1;
    e[2][pair_index("YX")] = 1;
    e[3][pair_index("ZI")] = 1;
    e[3][pair_index("IZ")] = 1;
    return e;
}

std::array<Diag16, 4> encoder_c2() {
    std::array<Diag16, 4> e{};
    for (Pauli s : kPaulis) {
        e[index_of(s)][pair_index(s, Pauli::I)] = 1;
        e[index_of(s)][pair_index(s, Pauli::Z)] = 1;
    }
    return e;
}

namespace {

Superoperator dense_total_noise_c2(
    const DiagonalChannel &source, const DiagonalChannel &destination, const TwoQubitDiagonalNoise &q) {
    Superoperator cnot = build_cnot_superoperator();
    Superoperator sd = tensor(diagonal_superoperator(source), diagonal_superoperator(destination));
    return diagonal_superoperator(q) * cnot * sd * cnot;
}

}  // namespace

double appendix_a_crosscheck(
    const DiagonalChannel &source, const DiagonalChannel &destination, const TwoQubitDiagonalNoise &q, double m) {
    Superoperator n = dense_total_noise_c2(source, destination, q);
    // A flip before the destination Z measurement scales its Z and Y components by m.
    Superoperator meas = tensor(Superoperator::identity(1), diagonal_superoperator(DiagonalChannel{1, m, m}));
    n = meas * n;

    TraceOut t = measure_traceout(total_cnot_noise(q, source, destination), m);
    auto enc = encoder_c2();
    double worst = 0;
    for (size_t r : {pair_index("II"), pair_index("IX")}) {
        auto g = code_channel_map(enc, r, n);
        const auto &branch = r == 0 ? t.accept.g : t.reject.g;
        for (size_t a = 0; a < 4; a++) {
            for (size_t b = 0; b < 4; b++) {
                double expected = a == b ? branch[a] : 0;
                worst = std::max(worst, std::abs(g[a][b] - expected));
            }
        }
    }
    return worst;
}

double code_frame_crosscheck(
    const DiagonalChannel &source, const DiagonalChannel &destination, const TwoQubitDiagonalNoise &q) {
    Superoperator cnot = build_cnot_superoperator();
    Superoperator sd = tensor(diagonal_superoperator(source), diagonal_superoperator(destination));
    Superoperator qd = diagonal_superoperator(q);
    Superoperator n_c1 = cnot * qd * cnot * sd;
    Superoperator n_c2 = qd * cnot * sd * cnot;
    auto e1 = encoder_c1();
    auto e2 = encoder_c2();
    double worst = 0;
    for (size_t r : {pair_index("II"), pair_index("IX")}) {
        auto g1 = code_channel_map(e1, r, n_c1);
        auto g2 = code_channel_map(e2, r, n_c2);
        for (size_t a = 0; a < 4; a++) {
            for (size_t b = 0; b < 4; b++) {
                worst = std::max(worst, std::abs(g1[a][b] - g2[a][b]));
            }
        }
    }
    return worst;
}

}  // namespace ftpost
