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

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarctx/configuration.hpp"

namespace polarctx {

/// A linearly independent set of l-bit vectors spanning Im(A), the span of
/// the incidence matrix's point columns in F_2^l.
struct Gf2Basis {
    size_t bit_length = 0;
    std::vector<std::vector<uint64_t>> generators;

    size_t rank() const { return generators.size(); }
    size_t words() const { return (bit_length + 63) / 64; }
};

/// Packs the valuation vector: bit c set iff context c is negative.
std::vector<uint64_t> valuation_vector(const Configuration &config);

Gf2Basis incidence_rank(const Configuration &config);

/// All 2^rank codewords in Gray-code order (codeword k differs from k-1 in
/// generator ctz(k)). Refuses ranks above 24.
std::vector<std::vector<uint64_t>> gray_code_codewords(const Gf2Basis &basis);

constexpr uint32_t kDefaultExactRankBudget = 32;

/// Degree of contextuality: min over codewords w of weight(E xor w), by an
/// exhaustive Gray-code walk of Im(A). Throws CapabilityError (naming the
/// rank) when the rank exceeds `max_rank`.
uint64_t exact_degree(const Configuration &config, uint32_t max_rank = kDefaultExactRankBudget, unsigned threads = 0);

/// Same walk for an arbitrary target vector; exposed for the invariance tests.
uint64_t min_coset_weight(const Gf2Basis &basis, const std::vector<uint64_t> &target, uint32_t max_rank,
                          unsigned threads = 0);

/// (4^N - 1)(4^{N-1} - 1) / 15, the lower bound on the degree of the
/// all-lines configuration obtained from d_2 = 3. Defined for 2 <= N <= 16.
uint64_t lower_bound_full(uint32_t n_qubits);

/// Number of symplectic polarities of rank N in PG(2N-1,2):
/// 2^{N(N-1)} * prod_{i=1}^{N-1} (2^{2i+1} - 1).
boost::multiprecision::cpp_int polarity_count(uint32_t n_qubits);

}  // namespace polarctx
