// Copyright 2026 The polarctx Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace polarctx {

/// A canonical (phase +1) N-qubit Pauli observable in symplectic form.
///
/// Bit i of `mu` is the Z-part of qubit i+1 and bit i of `nu` its X-part:
/// I=(0,0), X=(0,1), Y=(1,1), Z=(1,0). Bits at or above `n_qubits` are zero.
/// The all-zero value is the identity; it is a legal product but not a point
/// of the polar space.
struct Observable {
    uint64_t mu = 0;
    uint64_t nu = 0;
    uint32_t n_qubits = 1;

    bool is_identity() const { return mu == 0 && nu == 0; }
    bool operator==(const Observable &) const = default;
};

/// A Pauli product `i^phase_exponent * observable`.
struct PhasedProduct {
    Observable observable;
    uint32_t phase_exponent = 0;  // in {0,1,2,3}

    bool operator==(const PhasedProduct &) const = default;
};

constexpr uint32_t kMaxQubits = 64;

Observable parse_observable(std::string_view text);
std::string format_observable(const Observable &p);

/// Symplectic form <p,q>; 0 iff the operators commute.
uint32_t symplectic_form(const Observable &p, const Observable &q);
inline bool commute(const Observable &p, const Observable &q) { return symplectic_form(p, q) == 0; }

PhasedProduct multiply(const Observable &p, const Observable &q);

/// Sign (+1 or -1) of the product p*q*r of three pairwise commuting
/// observables whose product is proportional to the identity.
int triple_sign(const Observable &p, const Observable &q, const Observable &r);

/// Number of qubits carrying a Y factor.
uint32_t y_count(const Observable &p);

/// Symmetric (O^T = O) iff the number of Y factors is even.
inline bool is_symmetric(const Observable &p) { return (y_count(p) & 1U) == 0; }

/// Canonical point id: mu in the high N bits, nu in the low N bits, qubit 1
/// most significant in each half. Points are ordered by this id everywhere.
uint64_t point_id(const Observable &p);
Observable observable_from_id(uint64_t id, uint32_t n_qubits);

/// Word-parallel kernels on canonical ids (N <= 31). Any fixed bit
/// permutation applied to both halves leaves these popcount formulas intact,
/// so they work directly on ids.
namespace packed {

inline uint64_t low_mask(uint32_t n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

inline uint32_t symplectic(uint64_t a, uint64_t b, uint32_t n) {
    const uint64_t m = low_mask(n);
    return static_cast<uint32_t>(std::popcount(((a >> n) & b & m) ^ (a & m & (b >> n))) & 1);
}

inline uint32_t y_count(uint64_t a, uint32_t n) { return static_cast<uint32_t>(std::popcount((a >> n) & a & low_mask(n))); }

/// Exponent k with P_a * P_b = i^k * P_{a^b}. Uses Y = i X Z, so a canonical
/// observable is i^{y} X^nu Z^mu and X^nu1 Z^mu1 X^nu2 Z^mu2 picks up
/// (-1)^{mu1.nu2}.
inline uint32_t product_phase(uint64_t a, uint64_t b, uint32_t n) {
    const uint32_t cross = static_cast<uint32_t>(std::popcount((a >> n) & b & low_mask(n)));
    return (y_count(a, n) + y_count(b, n) + 2 * cross - y_count(a ^ b, n)) & 3U;
}

/// Line sign from the phase of p*q when r = p^q: +1 for exponent 0, -1 for 2.
inline int line_sign(uint64_t a, uint64_t b, uint32_t n) { return product_phase(a, b, n) == 0 ? 1 : -1; }

}  // namespace packed

}  // namespace polarctx
