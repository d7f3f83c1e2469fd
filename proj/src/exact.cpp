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

#include "polarctx/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>

#include "polarctx/error.hpp"

namespace polarctx {

namespace {

using Word = uint64_t;

int highest_bit(const std::vector<Word> &v) {
    for (size_t w = v.size(); w-- > 0;) {
        if (v[w] != 0) {
            return static_cast<int>(w * 64 + 63 - std::countl_zero(v[w]));
        }
    }
    return -1;
}

void xor_into(std::vector<Word> &dst, const std::vector<Word> &src) {
    for (size_t w = 0; w < dst.size(); w++) {
        dst[w] ^= src[w];
    }
}

template <size_t W>
uint64_t weight(const Word *v) {
    uint64_t total = 0;
    for (size_t w = 0; w < W; w++) {
        total += static_cast<uint64_t>(std::popcount(v[w]));
    }
    return total;
}

// Minimum weight of start ^ span(gens[0..count)) by a Gray-code walk.
template <size_t W>
uint64_t gray_walk(const Word *gens, size_t count, const Word *start) {
    Word cur[W];
    std::copy(start, start + W, cur);
    uint64_t best = weight<W>(cur);
    const uint64_t steps = uint64_t{1} << count;
    for (uint64_t k = 1; k < steps && best > 0; k++) {
        const Word *g = gens + static_cast<size_t>(std::countr_zero(k)) * W;
        for (size_t w = 0; w < W; w++) {
            cur[w] ^= g[w];
        }
        best = std::min(best, weight<W>(cur));
    }
    return best;
}

uint64_t gray_walk_dynamic(const Word *gens, size_t count, const Word *start, size_t words) {
    switch (words) {
        case 1:
            return gray_walk<1>(gens, count, start);
        case 2:
            return gray_walk<2>(gens, count, start);
        case 3:
            return gray_walk<3>(gens, count, start);
        case 4:
            return gray_walk<4>(gens, count, start);
        default:
            break;
    }
    std::vector<Word> cur(start, start + words);
    auto wt = [&] {
        uint64_t t = 0;
        for (Word x : cur) t += static_cast<uint64_t>(std::popcount(x));
        return t;
    };
    uint64_t best = wt();
    const uint64_t steps = uint64_t{1} << count;
    for (uint64_t k = 1; k < steps && best > 0; k++) {
        const Word *g = gens + static_cast<size_t>(std::countr_zero(k)) * words;
        for (size_t w = 0; w < words; w++) {
            cur[w] ^= g[w];
        }
        best = std::min(best, wt());
    }
    return best;
}

}  // namespace

std::vector<uint64_t> valuation_vector(const Configuration &config) {
    std::vector<Word> e((config.context_count() + 63) / 64, 0);
    const auto signs = config.expected_signs();
    for (size_t c = 0; c < signs.size(); c++) {
        if (signs[c] < 0) {
            e[c / 64] |= Word{1} << (c % 64);
        }
    }
    return e;
}

Gf2Basis incidence_rank(const Configuration &config) {
    Gf2Basis basis;
    basis.bit_length = config.context_count();
    const size_t words = basis.words();
    if (words == 0) {
        return basis;
    }
    // Generators kept in decreasing order of their leading bit.
    std::vector<int> leads;
    for (uint32_t p = 0; p < config.point_count(); p++) {
        std::vector<Word> column(words, 0);
        for (uint32_t c : config.contexts_through(p)) {
            column[c / 64] ^= Word{1} << (c % 64);
        }
        for (size_t g = 0; g < basis.generators.size(); g++) {
            int lead = leads[g];
            if ((column[static_cast<size_t>(lead) / 64] >> (lead % 64)) & 1) {
                xor_into(column, basis.generators[g]);
            }
        }
        int lead = highest_bit(column);
        if (lead < 0) {
            continue;
        }
        auto pos = std::upper_bound(leads.begin(), leads.end(), lead, std::greater<int>()) - leads.begin();
        leads.insert(leads.begin() + pos, lead);
        basis.generators.insert(basis.generators.begin() + pos, std::move(column));
    }
    return basis;
}

std::vector<std::vector<uint64_t>> gray_code_codewords(const Gf2Basis &basis) {
    if (basis.rank() > 24) {
        throw CapabilityError("refusing to list 2^" + std::to_string(basis.rank()) + " codewords");
    }
    std::vector<std::vector<Word>> out;
    std::vector<Word> cur(basis.words(), 0);
    out.push_back(cur);
    for (uint64_t k = 1; k < (uint64_t{1} << basis.rank()); k++) {
        xor_into(cur, basis.generators[static_cast<size_t>(std::countr_zero(k))]);
        out.push_back(cur);
    }
    return out;
}

uint64_t min_coset_weight(const Gf2Basis &basis, const std::vector<uint64_t> &target, uint32_t max_rank,
                          unsigned threads) {
    const size_t rank = basis.rank();
    if (rank > max_rank) {
        throw CapabilityError("incidence rank " + std::to_string(rank) + " exceeds the exact budget of 2^" +
                              std::to_string(max_rank) + " codewords");
    }
    const size_t words = basis.words();
    if (words == 0) {
        return 0;
    }
    if (target.size() != words) {
        throw InvalidArgument("target vector length does not match the basis");
    }
    std::vector<Word> flat;
    flat.reserve(rank * words);
    for (const auto &g : basis.generators) {
        flat.insert(flat.end(), g.begin(), g.end());
    }

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    // The top `fixed` generators select a chunk; each chunk walks the rest.
    size_t fixed = 0;
    while (fixed < rank && (size_t{1} << fixed) < 4 * size_t{threads} && rank - fixed > 16) {
        fixed++;
    }
    const size_t walked = rank - fixed;
    const uint64_t chunks = uint64_t{1} << fixed;

    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{std::numeric_limits<uint64_t>::max()};
    auto worker = [&] {
        std::vector<Word> start(words);
        for (uint64_t j = next++; j < chunks; j = next++) {
            start = target;
            for (size_t b = 0; b < fixed; b++) {
                if ((j >> b) & 1) {
                    const Word *g = flat.data() + (walked + b) * words;
                    for (size_t w = 0; w < words; w++) {
                        start[w] ^= g[w];
                    }
                }
            }
            uint64_t local = gray_walk_dynamic(flat.data(), walked, start.data(), words);
            uint64_t seen = best.load();
            while (local < seen && !best.compare_exchange_weak(seen, local)) {
            }
        }
    };
    if (threads <= 1 || chunks == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<uint64_t>(threads, chunks); t++) {
            pool.emplace_back(worker);
        }
    }
    return best.load();
}

uint64_t exact_degree(const Configuration &config, uint32_t max_rank, unsigned threads) {
    if (config.context_count() == 0) {
        return 0;
    }
    return min_coset_weight(incidence_rank(config), valuation_vector(config), max_rank, threads);
}

uint64_t lower_bound_full(uint32_t n_qubits) {
    if (n_qubits < 2) {
        throw InvalidArgument("the all-lines lower bound is defined for N >= 2");
    }
    if (n_qubits > 16) {
        throw CapabilityError("lower bound overflows 64 bits beyond N = 16");
    }
    uint64_t a = (uint64_t{1} << (2 * n_qubits)) - 1;
    uint64_t b = (uint64_t{1} << (2 * n_qubits - 2)) - 1;
    return a * b / 15;
}

boost::multiprecision::cpp_int polarity_count(uint32_t n_qubits) {
    if (n_qubits < 2) {
        throw InvalidArgument("symplectic polarities are counted for N >= 2");
    }
    using boost::multiprecision::cpp_int;
    cpp_int count = cpp_int(1) << (n_qubits * (n_qubits - 1));
    for (uint32_t i = 1; i < n_qubits; i++) {
        count *= (cpp_int(1) << (2 * i + 1)) - 1;
    }
    return count;
}

}  // namespace polarctx
