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

#include "ftpost/pauli.h"

#include <stdexcept>

namespace ftpost {

char pauli_char(Pauli p) {
    return "IXYZ"[index_of(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

std::string pair_label(size_t k) {
    if (k >= 16) {
        throw std::out_of_range("two-qubit Pauli index out of range");
    }
    return {pauli_char(pair_source(k)), pauli_char(pair_destination(k))};
}

size_t pair_index(std::string_view label) {
    if (label.size() != 2) {
        throw std::invalid_argument("two-qubit Pauli label must have 2 characters: '" + std::string(label) + "'");
    }
    return pair_index(pauli_from_char(label[0]), pauli_from_char(label[1]));
}

}  // namespace ftpost
