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

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polarctx/pauli.hpp"

namespace polarctx {

/// A totally isotropic line: three sorted point indices and the sign of the
/// product of its observables.
struct Line {
    std::array<uint32_t, 3> points;
    int8_t sign;
};

/// Points and lines of W(2N-1,2) labelled by canonical N-qubit observables.
///
/// Point index k carries canonical id k+1 (see point_id), so point indices
/// follow the canonical ordering and `index(a) ^ index(b)` arithmetic can be
/// done on ids. Lines are stored in lexicographic order of their point
/// triples; lines through a point are kept in CSR form, sorted by line id.
class SymplecticSpace {
   public:
    static constexpr uint32_t kMaxQubits = 7;

    explicit SymplecticSpace(uint32_t n_qubits);

    uint32_t n_qubits() const { return n_qubits_; }
    uint32_t point_count() const { return point_count_; }
    size_t line_count() const { return lines_.size(); }
    size_t negative_line_count() const { return negative_lines_; }

    Observable observable(uint32_t point) const { return observable_from_id(uint64_t{point} + 1, n_qubits_); }
    static uint64_t id_of(uint32_t point) { return uint64_t{point} + 1; }
    /// Point index of a non-identity observable on this space's qubit count.
    uint32_t point_index(const Observable &p) const;

    std::span<const Line> lines() const { return lines_; }
    const Line &line(size_t i) const { return lines_[i]; }
    std::span<const uint32_t> lines_through(uint32_t point) const {
        return {incidence_.data() + offsets_[point], incidence_.data() + offsets_[point + 1]};
    }

    /// Id of the line through two distinct points, if they are collinear.
    std::optional<uint32_t> find_line(uint32_t a, uint32_t b) const;

   private:
    uint32_t n_qubits_;
    uint32_t point_count_;
    size_t negative_lines_ = 0;
    std::vector<Line> lines_;
    std::vector<uint32_t> offsets_;
    std::vector<uint32_t> incidence_;
};

/// Builds W(2N-1,2) for 1 <= N <= 7; larger N is refused.
std::shared_ptr<const SymplecticSpace> build_space(uint32_t n_qubits);

/// Closed-form counts.
uint64_t space_point_count(uint32_t n_qubits);
uint64_t space_line_count(uint32_t n_qubits);

enum class QuadricKind { hyperbolic, elliptic };

const char *to_string(QuadricKind kind);

struct Quadric {
    QuadricKind kind;
    /// The identity only for the canonical-equation quadric Q+_{I_N}.
    Observable index;
    boost::dynamic_bitset<> members;
    std::vector<uint32_t> line_ids;

    size_t point_count() const { return members.count(); }
    size_t negative_line_count(const SymplecticSpace &space) const;
};

/// Quadric indexed by a point: symmetric points commuting with the index plus
/// skew points anticommuting with it.
Quadric make_quadric(const SymplecticSpace &space, const Observable &index);

/// The hyperbolic quadric Q+_{I_N}: all symmetric points.
Quadric make_identity_quadric(const SymplecticSpace &space);

/// One quadric per index of the matching symmetry class, in canonical index
/// order; with `include_identity`, Q+_{I_N} is prepended to the hyperbolic
/// family.
std::vector<Quadric> enumerate_quadrics(const SymplecticSpace &space, QuadricKind kind,
                                        bool include_identity = false);

/// Number of quadrics of each negative-line count. The hyperbolic family
/// always includes Q+_{I_N} here.
std::map<size_t, size_t> negative_line_distribution(const SymplecticSpace &space, QuadricKind kind);

uint64_t quadric_point_count(uint32_t n_qubits, QuadricKind kind);

/// Number of quadrics of a kind including Q+_{I_N} for the hyperbolic family.
uint64_t quadric_family_size(uint32_t n_qubits, QuadricKind kind);

}  // namespace polarctx
