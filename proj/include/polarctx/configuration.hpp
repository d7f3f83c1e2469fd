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
#include <memory>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polarctx/polar_space.hpp"

namespace polarctx {

using PointTriple = std::array<uint32_t, 3>;

/// A quantum configuration (O, C): a set of points of a polar space and a set
/// of its lines used as contexts, each with the expected product sign
/// (+1 positive line, -1 negative line).
///
/// Points are re-indexed densely in canonical order ("local" indices); the
/// global space index of local point k is point_ids()[k]. Contexts are kept in
/// ascending global line order.
class Configuration {
   public:
    Configuration(std::shared_ptr<const SymplecticSpace> space, std::vector<uint32_t> point_ids,
                  std::vector<uint32_t> context_ids);

    static Configuration from_space(std::shared_ptr<const SymplecticSpace> space);
    static Configuration from_quadric(std::shared_ptr<const SymplecticSpace> space, const Quadric &quadric);
    /// Contexts given as observable triples; the point set is the union of
    /// their points. Every triple must be a line of the space.
    static Configuration from_contexts(std::shared_ptr<const SymplecticSpace> space,
                                       std::span<const std::array<Observable, 3>> contexts);

    const SymplecticSpace &space() const { return *space_; }
    const std::shared_ptr<const SymplecticSpace> &space_ptr() const { return space_; }

    size_t point_count() const { return point_ids_.size(); }
    size_t context_count() const { return context_ids_.size(); }
    size_t negative_context_count() const { return negative_contexts_; }

    std::span<const uint32_t> point_ids() const { return point_ids_; }
    std::span<const uint32_t> context_ids() const { return context_ids_; }
    /// Contexts as triples of local point indices.
    std::span<const PointTriple> local_contexts() const { return local_contexts_; }
    std::span<const int8_t> expected_signs() const { return expected_signs_; }
    std::span<const uint32_t> contexts_through(uint32_t local_point) const {
        return {incidence_.data() + offsets_[local_point], incidence_.data() + offsets_[local_point + 1]};
    }
    uint32_t degree(uint32_t local_point) const { return offsets_[local_point + 1] - offsets_[local_point]; }

    bool contains_point(uint32_t global_point) const;
    /// Local index of a global point; throws if the point is not in O.
    uint32_t local_index(uint32_t global_point) const;

   private:
    std::shared_ptr<const SymplecticSpace> space_;
    std::vector<uint32_t> point_ids_;
    std::vector<uint32_t> context_ids_;
    std::vector<uint32_t> global_to_local_;
    std::vector<PointTriple> local_contexts_;
    std::vector<int8_t> expected_signs_;
    std::vector<uint32_t> offsets_;
    std::vector<uint32_t> incidence_;
    size_t negative_contexts_ = 0;
};

/// Values +1/-1 per configuration point, aligned with point_ids().
struct Assignment {
    std::vector<int8_t> values;

    bool operator==(const Assignment &) const = default;
};

Assignment all_plus(const Configuration &config);

/// Number of contexts whose product of assigned values differs from the
/// expected sign.
size_t hamming_distance(const Configuration &config, const Assignment &assignment);

/// The contexts left unsatisfied by an assignment.
struct UnsatisfiedConfiguration {
    std::shared_ptr<const SymplecticSpace> space;
    /// Point set of the parent configuration (global indices, ascending).
    std::vector<uint32_t> point_ids;
    /// Global line ids, ascending.
    std::vector<uint32_t> context_ids;
    /// Points on at least one unsatisfied context (global, ascending).
    std::vector<uint32_t> covered_points;

    size_t size() const { return context_ids.size(); }
    /// Contexts as global point triples.
    std::vector<PointTriple> lines() const;
};

UnsatisfiedConfiguration unsatisfied(const Configuration &config, const Assignment &assignment);

/// Contexts of `uns` lying entirely inside `subset` (a bitset over space
/// points); the point set becomes the intersection with `subset`.
UnsatisfiedConfiguration restrict_to(const UnsatisfiedConfiguration &uns, const boost::dynamic_bitset<> &subset);

/// Wraps an arbitrary set of global line ids; covered points are recomputed.
UnsatisfiedConfiguration make_line_set(std::shared_ptr<const SymplecticSpace> space, std::vector<uint32_t> point_ids,
                                       std::vector<uint32_t> line_ids);

}  // namespace polarctx
