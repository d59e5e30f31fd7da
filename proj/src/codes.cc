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

#include "ftpost/codes.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ftpost {

namespace {

double plogp(double v) {
    return v > 0 ? -v * std::log2(v) : 0.0;
}

bool parity(uint32_t v) {
    return std::popcount(v) & 1;
}

int64_t falling_factorial(int64_t w, int k) {
    int64_t r = 1;
    for (int i = 0; i < k; i++) {
        r *= w - i;
    }
    return r;
}

// In-place unnormalized Walsh-Hadamard transform.
void walsh_hadamard(std::vector<double> &a) {
    const size_t n = a.size();
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t i = 0; i < n; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                double u = a[j];
                double v = a[j + h];
                a[j] = u + v;
                a[j + h] = u - v;
            }
        }
    }
}

constexpr uint32_t kGolayAll = (1u << 23) - 1;

// 11 parity checks followed by the all-ones logical functional.
std::array<uint32_t, 12> golay_functionals() {
    std::array<uint32_t, 12> f{};
    auto checks = golay_parity_checks();
    std::copy(checks.begin(), checks.end(), f.begin());
    f[11] = kGolayAll;
    return f;
}

// Masks A[u] = sum_j u_j F_j for every 12-bit u.
std::vector<uint32_t> golay_functional_span() {
    auto f = golay_functionals();
    std::vector<uint32_t> span(4096, 0);
    for (uint32_t u = 1; u < 4096; u++) {
        int low = std::countr_zero(u);
        span[u] = span[u & (u - 1)] ^ f[low];
    }
    return span;
}

// H(all classes) - H(classes with the logical bits summed out).
double conditional_entropy(const std::vector<double> &p, std::span<const int> logical_bits) {
    uint32_t mask = 0;
    for (int b : logical_bits) {
        mask |= 1u << b;
    }
    std::vector<double> marginal(p.size(), 0.0);
    double h_all = 0;
    for (size_t k = 0; k < p.size(); k++) {
        double v = std::max(p[k], 0.0);
        h_all += plogp(v);
        marginal[k & ~mask] += v;
    }
    double h_syn = 0;
    for (double v : marginal) {
        h_syn += plogp(v);
    }
    return h_all - h_syn;
}

}  // namespace

void validate(const DistanceClassDist &a) {
    double total = 0;
    for (double v : a.a) {
        if (!(v >= -kValidityTol && v <= 1 + kValidityTol)) {
            throw InvalidChannel("distance class probability out of range");
        }
        total += v;
    }
    if (std::abs(total - 1) > kValidityTol) {
        throw InvalidChannel("distance class probabilities do not sum to 1");
    }
}

DistanceClassDist distance_classes_from_x(double x) {
    if (!(std::abs(x) <= 1)) {
        throw std::invalid_argument("distance_classes_from_x needs |x| <= 1");
    }
    double x3 = x * x * x;
    double x4 = x3 * x;
    double x7 = x3 * x4;
    DistanceClassDist d;
    d[0] = (1 + 7 * x3 + 7 * x4 + x7) / 16;
    d[1] = (7 + 7 * x3 - 7 * x4 - 7 * x7) / 16;
    d[2] = (7 - 7 * x3 - 7 * x4 + 7 * x7) / 16;
    d[3] = (1 - 7 * x3 + 7 * x4 - x7) / 16;
    return d;
}

int distance_class_713(uint8_t bits) {
    int s = StabilizerCode7::check(bits);
    uint8_t rep = s ? uint8_t(1u << (7 - s)) : 0;
    bool logical = parity(bits ^ rep);
    if (s == 0) {
        return logical ? 3 : 0;
    }
    return logical ? 2 : 1;
}

std::array<std::array<int, 4>, 8> distance_table_713() {
    std::array<std::array<int, 4>, 8> t{};
    for (int v = 0; v < 128; v++) {
        t[std::popcount(unsigned(v))][distance_class_713(uint8_t(v))]++;
    }
    return t;
}

double syndrome_class_entropy(const DistanceClassDist &a) {
    double h = 0;
    for (double v : a.a) {
        h += plogp(v);
    }
    return h - plogp(a[0] + a[3]) - plogp(a[1] + a[2]);
}

double CrashPolynomial::operator()(double x) const {
    double total = 0;
    for (const auto &t : terms) {
        total += boost::rational_cast<double>(t.coefficient) * std::pow(x, t.weight);
    }
    return total;
}

Rational CrashPolynomial::derivative_at_one(int k) const {
    Rational total = 0;
    for (const auto &t : terms) {
        total += t.coefficient * falling_factorial(t.weight, k);
    }
    return total;
}

CrashPolynomial crash_poly(CrashCode code) {
    switch (code) {
        case CrashCode::Steane7:
            return {{{3, Rational(7, 4)}, {7, Rational(-3, 4)}}};
        case CrashCode::Golay23:
            return {{{7, Rational(3795, 512)}, {11, Rational(-805, 64)}, {15, Rational(1771, 256)}, {23, Rational(-385, 512)}}};
    }
    throw std::invalid_argument("unknown crash code");
}

CrashPolynomial derive_crash_poly(std::span<const int> weights) {
    const size_t n = weights.size();
    if (n == 0) {
        throw std::invalid_argument("derive_crash_poly needs at least one weight");
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (size_t k = 0; k < n; k++) {
        for (size_t j = 0; j < n; j++) {
            m[k][j] = falling_factorial(weights[j], int(k));
        }
        m[k][n] = k == 0 ? 1 : 0;
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && m[piv][col] == Rational(0)) {
            piv++;
        }
        if (piv == n) {
            throw std::invalid_argument("crash polynomial weights give a singular system");
        }
        std::swap(m[piv], m[col]);
        for (size_t r = 0; r < n; r++) {
            if (r == col || m[r][col] == Rational(0)) {
                continue;
            }
            Rational factor = m[r][col] / m[col][col];
            for (size_t c = col; c <= n; c++) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    CrashPolynomial f;
    for (size_t j = 0; j < n; j++) {
        f.terms.push_back({weights[j], m[j][n] / m[j][j]});
    }
    return f;
}

double degeneracy_correction(DegeneracyCase c, double p_g) {
    if (!(p_g >= 0 && p_g <= 1)) {
        throw std::invalid_argument("p_g must lie in [0,1]");
    }
    switch (c) {
        case DegeneracyCase::Steane7Level1:
            return 126 * p_g * p_g;
        case DegeneracyCase::Steane7Level2:
            // 7^5 weight-12 stabilizers at the second level, C(12,6) ways to split each.
            return 3.0 * 16807 * 924 * std::pow(p_g, 6);
        case DegeneracyCase::Golay23:
            return 3.0 * 70 * 506 * std::pow(p_g, 4);
    }
    throw std::invalid_argument("unknown degeneracy case");
}

Pauli Pauli7::at(int qubit) const {
    int bit = 6 - qubit;
    return pauli_from_bits((x >> bit) & 1, (z >> bit) & 1);
}

std::array<Pauli7, 6> StabilizerCode7::generators() {
    std::array<Pauli7, 6> g;
    for (size_t i = 0; i < 3; i++) {
        g[i] = {kChecks[i], 0};
        g[i + 3] = {0, kChecks[i]};
    }
    return g;
}

int StabilizerCode7::check(uint8_t bits) {
    int s = 0;
    for (uint8_t row : kChecks) {
        s = (s << 1) | int(parity(bits & row));
    }
    return s;
}

int StabilizerCode7::syndrome(const Pauli7 &e) {
    return (check(e.x) << 3) | check(e.z);
}

Pauli7 StabilizerCode7::representative(int syndrome) {
    if (syndrome < 0 || syndrome >= 64) {
        throw std::out_of_range("syndrome must lie in [0,64)");
    }
    int sx = syndrome >> 3;
    int sz = syndrome & 7;
    return {uint8_t(sx ? 1u << (7 - sx) : 0), uint8_t(sz ? 1u << (7 - sz) : 0)};
}

Pauli StabilizerCode7::logical_class(const Pauli7 &e) {
    bool lx = parity(e.x) ^ (check(e.x) != 0);
    bool lz = parity(e.z) ^ (check(e.z) != 0);
    return pauli_from_bits(lx, lz);
}

bool anticommutes(const Pauli7 &a, const Pauli7 &b) {
    return parity(uint32_t(a.x & b.z)) ^ parity(uint32_t(a.z & b.x));
}

PauliDist SyndromeRecord::logical() const {
    double total = coset[0] + coset[1] + coset[2] + coset[3];
    PauliDist d;
    if (!(total > 0)) {
        return d;
    }
    for (Pauli l : kPaulis) {
        d[l * recovery] = coset[index_of(l)] / total;
    }
    return d;
}

PauliDist SyndromeDecomposition::average() const {
    PauliDist d{{0, 0, 0, 0}};
    for (const auto &r : records) {
        for (Pauli l : kPaulis) {
            d[l * r.recovery] += r.coset[index_of(l)];
        }
    }
    return d;
}

SyndromeDecomposition block_decompose_713(const Children7 &children) {
    for (const auto &c : children) {
        c.validate();
    }
    // t[i][x][z]: probability that qubit i carries the Pauli with those bits.
    double t[7][2][2];
    for (int i = 0; i < 7; i++) {
        for (int xb = 0; xb < 2; xb++) {
            for (int zb = 0; zb < 2; zb++) {
                t[i][xb][zb] = children[i][pauli_from_bits(xb, zb)];
            }
        }
    }
    SyndromeDecomposition out;
    for (int s = 0; s < 64; s++) {
        out.records[s].syndrome = s;
    }
    for (int x = 0; x < 128; x++) {
        for (int z = 0; z < 128; z++) {
            double p = 1;
            for (int i = 0; i < 7; i++) {
                int bit = 6 - i;
                p *= t[i][(x >> bit) & 1][(z >> bit) & 1];
            }
            Pauli7 e{uint8_t(x), uint8_t(z)};
            auto &r = out.records[StabilizerCode7::syndrome(e)];
            r.coset[index_of(StabilizerCode7::logical_class(e))] += p;
        }
    }
    for (auto &r : out.records) {
        r.weight = r.coset[0] + r.coset[1] + r.coset[2] + r.coset[3];
        size_t best = 0;
        for (size_t k = 1; k < 4; k++) {
            if (r.coset[k] > r.coset[best]) {
                best = k;
            }
        }
        r.recovery = kPaulis[best];
    }
    return out;
}

namespace {

// 2-bit (x | z << 1) offset per qubit for e * L * S, coset-major (L in I,X,Y,Z).
struct CosetOffsets {
    std::array<std::array<uint8_t, 7>, 256> code;

    CosetOffsets() {
        std::array<uint8_t, 8> span{};
        for (int k = 1; k < 8; k++) {
            int low = std::countr_zero(unsigned(k));
            span[k] = span[k & (k - 1)] ^ StabilizerCode7::kChecks[low];
        }
        for (int l = 0; l < 4; l++) {
            Pauli lp = kPaulis[l];
            uint8_t lx = x_bit(lp) ? StabilizerCode7::kAll : 0;
            uint8_t lz = z_bit(lp) ? StabilizerCode7::kAll : 0;
            for (int a = 0; a < 8; a++) {
                for (int b = 0; b < 8; b++) {
                    uint8_t ox = span[a] ^ lx;
                    uint8_t oz = span[b] ^ lz;
                    auto &row = code[l * 64 + a * 8 + b];
                    for (int i = 0; i < 7; i++) {
                        int bit = 6 - i;
                        row[i] = uint8_t(((ox >> bit) & 1) | (((oz >> bit) & 1) << 1));
                    }
                }
            }
        }
    }
};

const CosetOffsets &coset_offsets() {
    static const CosetOffsets offsets;
    return offsets;
}

}  // namespace

std::array<double, 4> coset_weights_713(const std::array<const double *, 7> &children, const Pauli7 &e) {
    const auto &off = coset_offsets();
    double pr[7][4];
    for (int i = 0; i < 7; i++) {
        Pauli ei = e.at(i);
        for (int k = 0; k < 4; k++) {
            Pauli q = pauli_from_bits(x_bit(ei) ^ bool(k & 1), z_bit(ei) ^ bool(k & 2));
            pr[i][k] = children[i][index_of(q)];
        }
    }
    std::array<double, 4> w{};
    for (int l = 0; l < 4; l++) {
        double acc = 0;
        for (int j = 0; j < 64; j++) {
            const auto &row = off.code[l * 64 + j];
            acc += pr[0][row[0]] * pr[1][row[1]] * pr[2][row[2]] * pr[3][row[3]] * pr[4][row[4]] * pr[5][row[5]] *
                   pr[6][row[6]];
        }
        w[l] = acc;
    }
    double top = *std::max_element(w.begin(), w.end());
    if (top > 1e-280) {
        return w;
    }

    // Underflow: redo the sums in log space and rescale the largest coset to 1.
    double lp[7][4];
    for (int i = 0; i < 7; i++) {
        for (int k = 0; k < 4; k++) {
            lp[i][k] = pr[i][k] > 0 ? std::log(pr[i][k]) : -std::numeric_limits<double>::infinity();
        }
    }
    std::array<double, 4> lw;
    for (int l = 0; l < 4; l++) {
        std::array<double, 64> terms;
        double hi = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < 64; j++) {
            const auto &row = off.code[l * 64 + j];
            double s = 0;
            for (int i = 0; i < 7; i++) {
                s += lp[i][row[i]];
            }
            terms[j] = s;
            hi = std::max(hi, s);
        }
        if (hi == -std::numeric_limits<double>::infinity()) {
            lw[l] = hi;
            continue;
        }
        double acc = 0;
        for (double s : terms) {
            acc += std::exp(s - hi);
        }
        lw[l] = hi + std::log(acc);
    }
    double lmax = *std::max_element(lw.begin(), lw.end());
    if (lmax == -std::numeric_limits<double>::infinity()) {
        throw DegenerateAcceptance("every coset of the sampled error has zero probability");
    }
    for (int l = 0; l < 4; l++) {
        w[l] = std::exp(lw[l] - lmax);
    }
    return w;
}

double first_level_fidelity(const Children7 &children) {
    return block_decompose_713(children).average().fidelity();
}

std::array<uint32_t, 12> golay_generator() {
    // 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11
    constexpr uint32_t g = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 10) | (1u << 11);
    std::array<uint32_t, 12> rows;
    for (int i = 0; i < 12; i++) {
        rows[i] = g << i;
    }
    return rows;
}

std::array<uint32_t, 11> golay_parity_checks() {
    // Reduced row echelon form of the generator, then read off the nullspace.
    auto rows = golay_generator();
    std::array<int, 12> pivot{};
    size_t rank = 0;
    for (int col = 0; col < 23 && rank < rows.size(); col++) {
        size_t p = rank;
        while (p < rows.size() && !((rows[p] >> col) & 1)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && ((rows[r] >> col) & 1)) {
                rows[r] ^= rows[rank];
            }
        }
        pivot[rank++] = col;
    }
    if (rank != 12) {
        throw std::logic_error("Golay generator is not full rank");
    }
    uint32_t pivot_mask = 0;
    for (int c : pivot) {
        pivot_mask |= 1u << c;
    }
    std::array<uint32_t, 11> checks{};
    size_t n = 0;
    for (int f = 0; f < 23; f++) {
        if ((pivot_mask >> f) & 1) {
            continue;
        }
        uint32_t v = 1u << f;
        for (size_t r = 0; r < 12; r++) {
            if ((rows[r] >> f) & 1) {
                v |= 1u << pivot[r];
            }
        }
        checks[n++] = v;
    }
    return checks;
}

int golay_weight8_stabilizers() {
    auto checks = golay_parity_checks();
    int count = 0;
    for (uint32_t u = 0; u < (1u << 11); u++) {
        uint32_t v = 0;
        for (int j = 0; j < 11; j++) {
            if ((u >> j) & 1) {
                v ^= checks[j];
            }
        }
        count += std::popcount(v) == 8;
    }
    return count;
}

double golay_sector_entropy(double x) {
    if (!(std::abs(x) <= 1)) {
        throw std::invalid_argument("golay_sector_entropy needs |x| <= 1");
    }
    auto span = golay_functional_span();
    std::array<double, 24> pw;
    pw[0] = 1;
    for (int k = 1; k < 24; k++) {
        pw[k] = pw[k - 1] * x;
    }
    std::vector<double> p(4096);
    for (size_t u = 0; u < 4096; u++) {
        p[u] = pw[std::popcount(span[u])];
    }
    walsh_hadamard(p);
    for (double &v : p) {
        v /= 4096;
    }
    const int logical[] = {11};
    return conditional_entropy(p, logical);
}

double golay_logical_entropy(const PauliDist &d) {
    d.validate();
    const double cx = 1 - 2 * (d.p[1] + d.p[2]);
    const double cz = 1 - 2 * (d.p[3] + d.p[2]);
    const double cy = 1 - 2 * (d.p[1] + d.p[3]);
    std::array<double, 24> px, pz, py;
    px[0] = pz[0] = py[0] = 1;
    for (int k = 1; k < 24; k++) {
        px[k] = px[k - 1] * cx;
        pz[k] = pz[k - 1] * cz;
        py[k] = py[k - 1] * cy;
    }
    auto span = golay_functional_span();
    // Index (ux << 12) | uz: ux tests X-error bits, uz tests Z-error bits.
    std::vector<double> p(size_t(1) << 24);
    for (size_t ux = 0; ux < 4096; ux++) {
        const uint32_t a = span[ux];
        double *row = p.data() + (ux << 12);
        for (size_t uz = 0; uz < 4096; uz++) {
            const uint32_t b = span[uz];
            row[uz] = px[std::popcount(a & ~b)] * pz[std::popcount(b & ~a)] * py[std::popcount(a & b)];
        }
    }
    walsh_hadamard(p);
    const double scale = 1.0 / double(p.size());
    for (double &v : p) {
        v *= scale;
    }
    const int logical[] = {23, 11};
    return conditional_entropy(p, logical);
}

}  // namespace ftpost
