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

#ifndef _FTPOST_PAULI_H
#define _FTPOST_PAULI_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ftpost {

/// One-qubit Pauli label. The numeric order (I,X,Y,Z) is used for every
/// 4-vector in the library.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

constexpr size_t index_of(Pauli p) {
    return static_cast<size_t>(p);
}

constexpr bool x_bit(Pauli p) {
    return p == Pauli::X || p == Pauli::Y;
}

constexpr bool z_bit(Pauli p) {
    return p == Pauli::Y || p == Pauli::Z;
}

constexpr Pauli pauli_from_bits(bool x, bool z) {
    if (x) {
        return z ? Pauli::Y : Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

/// Product of two Paulis with the phase dropped.
constexpr Pauli operator*(Pauli a, Pauli b) {
    return pauli_from_bits(x_bit(a) != x_bit(b), z_bit(a) != z_bit(b));
}

/// Symplectic inner product of the (x|z) bit pairs.
constexpr bool anticommutes(Pauli a, Pauli b) {
    return ((x_bit(a) && z_bit(b)) != (z_bit(a) && x_bit(b)));
}

constexpr int commutation_sign(Pauli a, Pauli b) {
    return anticommutes(a, b) ? -1 : 1;
}

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Two-qubit Pauli labels are indexed source-major: index = 4*source + destination.
constexpr size_t pair_index(Pauli source, Pauli destination) {
    return 4 * index_of(source) + index_of(destination);
}

constexpr Pauli pair_source(size_t k) {
    return static_cast<Pauli>(k >> 2);
}

constexpr Pauli pair_destination(size_t k) {
    return static_cast<Pauli>(k & 3);
}

constexpr bool anticommutes_pair(size_t a, size_t b) {
    return anticommutes(pair_source(a), pair_source(b)) != anticommutes(pair_destination(a), pair_destination(b));
}

constexpr int commutation_sign_pair(size_t a, size_t b) {
    return anticommutes_pair(a, b) ? -1 : 1;
}

std::string pair_label(size_t k);

/// Parses labels like "XZ". Throws std::invalid_argument on anything else.
size_t pair_index(std::string_view label);

}  // namespace ftpost

#endif
