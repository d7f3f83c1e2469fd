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

#include "polarctx/pauli.hpp"

#include "polarctx/error.hpp"

namespace polarctx {

namespace {

void check_same_dimension(const Observable &p, const Observable &q) {
    if (p.n_qubits != q.n_qubits) {
        throw DimensionError("observables act on different numbers of qubits (" + std::to_string(p.n_qubits) +
                             " vs " + std::to_string(q.n_qubits) + ")");
    }
}

uint64_t reverse_low_bits(uint64_t v, uint32_t n) {
    uint64_t out = 0;
    for (uint32_t k = 0; k < n; k++) {
        out = (out << 1) | ((v >> k) & 1);
    }
    return out;
}

}  // namespace

Observable parse_observable(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty observable string");
    }
    if (text.size() > kMaxQubits) {
        throw ParseError("observable string longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    Observable result;
    result.n_qubits = static_cast<uint32_t>(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        uint64_t bit = uint64_t{1} << k;
        switch (text[k]) {
            case 'I':
                break;
            case 'X':
                result.nu |= bit;
                break;
            case 'Y':
                result.mu |= bit;
                result.nu |= bit;
                break;
            case 'Z':
                result.mu |= bit;
                break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[k]) + "' at position " +
                                 std::to_string(k) + " in observable \"" + std::string(text) + "\"");
        }
    }
    return result;
}

std::string format_observable(const Observable &p) {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    std::string out(p.n_qubits, 'I');
    for (uint32_t k = 0; k < p.n_qubits; k++) {
        out[k] = kLetters[((p.mu >> k) & 1) << 1 | ((p.nu >> k) & 1)];
    }
    return out;
}

uint32_t symplectic_form(const Observable &p, const Observable &q) {
    check_same_dimension(p, q);
    return static_cast<uint32_t>(std::popcount((p.mu & q.nu) ^ (p.nu & q.mu)) & 1);
}

uint32_t y_count(const Observable &p) { return static_cast<uint32_t>(std::popcount(p.mu & p.nu)); }

PhasedProduct multiply(const Observable &p, const Observable &q) {
    check_same_dimension(p, q);
    Observable r{p.mu ^ q.mu, p.nu ^ q.nu, p.n_qubits};
    uint32_t cross = static_cast<uint32_t>(std::popcount(p.mu & q.nu));
    uint32_t phase = (y_count(p) + y_count(q) + 2 * cross - y_count(r)) & 3U;
    return {r, phase};
}

int triple_sign(const Observable &p, const Observable &q, const Observable &r) {
    check_same_dimension(p, q);
    check_same_dimension(p, r);
    if ((p.mu ^ q.mu ^ r.mu) != 0 || (p.nu ^ q.nu ^ r.nu) != 0) {
        throw InvalidArgument("not a line: " + format_observable(p) + " " + format_observable(q) + " " +
                              format_observable(r) + " do not multiply to a multiple of the identity");
    }
    if (symplectic_form(p, q) != 0) {
        throw InvalidArgument("not a line: " + format_observable(p) + " and " + format_observable(q) +
                              " anticommute");
    }
    PhasedProduct pq = multiply(p, q);
    // (i^k r) r = i^k since canonical observables square to the identity.
    if (pq.phase_exponent & 1U) {
        throw std::logic_error("odd phase on a product proportional to the identity");
    }
    return pq.phase_exponent == 0 ? 1 : -1;
}

uint64_t point_id(const Observable &p) {
    return (reverse_low_bits(p.mu, p.n_qubits) << p.n_qubits) | reverse_low_bits(p.nu, p.n_qubits);
}

Observable observable_from_id(uint64_t id, uint32_t n_qubits) {
    if (n_qubits == 0 || n_qubits > 31) {
        throw CapabilityError("point ids are supported for 1..31 qubits");
    }
    uint64_t m = packed::low_mask(n_qubits);
    return {reverse_low_bits((id >> n_qubits) & m, n_qubits), reverse_low_bits(id & m, n_qubits), n_qubits};
}

}  // namespace polarctx
