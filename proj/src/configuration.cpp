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

#include "polarctx/configuration.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "polarctx/error.hpp"

namespace polarctx {

namespace {

constexpr uint32_t kAbsent = std::numeric_limits<uint32_t>::max();

std::vector<uint32_t> covered_by(const SymplecticSpace &space, std::span<const uint32_t> line_ids) {
    std::vector<uint32_t> covered;
    covered.reserve(line_ids.size() * 3);
    for (uint32_t id : line_ids) {
        const auto &pts = space.line(id).points;
        covered.insert(covered.end(), pts.begin(), pts.end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return covered;
}

}  // namespace

Configuration::Configuration(std::shared_ptr<const SymplecticSpace> space, std::vector<uint32_t> point_ids,
                             std::vector<uint32_t> context_ids)
    : space_(std::move(space)), point_ids_(std::move(point_ids)), context_ids_(std::move(context_ids)) {
    std::sort(point_ids_.begin(), point_ids_.end());
    point_ids_.erase(std::unique(point_ids_.begin(), point_ids_.end()), point_ids_.end());
    std::sort(context_ids_.begin(), context_ids_.end());
    context_ids_.erase(std::unique(context_ids_.begin(), context_ids_.end()), context_ids_.end());

    global_to_local_.assign(space_->point_count(), kAbsent);
    for (uint32_t k = 0; k < point_ids_.size(); k++) {
        if (point_ids_[k] >= space_->point_count()) {
            throw InvalidArgument("point index " + std::to_string(point_ids_[k]) + " outside the space");
        }
        global_to_local_[point_ids_[k]] = k;
    }

    local_contexts_.reserve(context_ids_.size());
    expected_signs_.reserve(context_ids_.size());
    offsets_.assign(point_ids_.size() + 1, 0);
    for (uint32_t id : context_ids_) {
        if (id >= space_->line_count()) {
            throw InvalidArgument("line id " + std::to_string(id) + " outside the space");
        }
        const Line &line = space_->line(id);
        PointTriple local{};
        for (int k = 0; k < 3; k++) {
            local[k] = global_to_local_[line.points[k]];
            if (local[k] == kAbsent) {
                throw InvalidArgument("context " + std::to_string(id) + " has a point outside the configuration");
            }
            offsets_[local[k] + 1]++;
        }
        local_contexts_.push_back(local);
        expected_signs_.push_back(line.sign);
        negative_contexts_ += line.sign < 0;
    }
    for (size_t k = 0; k < point_ids_.size(); k++) {
        offsets_[k + 1] += offsets_[k];
    }
    incidence_.resize(offsets_.back());
    std::vector<uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (uint32_t c = 0; c < local_contexts_.size(); c++) {
        for (uint32_t p : local_contexts_[c]) {
            incidence_[cursor[p]++] = c;
        }
    }
}

Configuration Configuration::from_space(std::shared_ptr<const SymplecticSpace> space) {
    std::vector<uint32_t> points(space->point_count());
    for (uint32_t k = 0; k < points.size(); k++) {
        points[k] = k;
    }
    std::vector<uint32_t> lines(space->line_count());
    for (uint32_t k = 0; k < lines.size(); k++) {
        lines[k] = k;
    }
    return Configuration(std::move(space), std::move(points), std::move(lines));
}

Configuration Configuration::from_quadric(std::shared_ptr<const SymplecticSpace> space, const Quadric &quadric) {
    if (quadric.members.size() != space->point_count()) {
        throw InvalidArgument("quadric does not belong to this space");
    }
    std::vector<uint32_t> points;
    points.reserve(quadric.members.count());
    for (size_t p = quadric.members.find_first(); p != boost::dynamic_bitset<>::npos; p = quadric.members.find_next(p)) {
        points.push_back(static_cast<uint32_t>(p));
    }
    return Configuration(std::move(space), std::move(points), quadric.line_ids);
}

Configuration Configuration::from_contexts(std::shared_ptr<const SymplecticSpace> space,
                                           std::span<const std::array<Observable, 3>> contexts) {
    std::vector<uint32_t> points;
    std::vector<uint32_t> lines;
    for (const auto &triple : contexts) {
        uint32_t a = space->point_index(triple[0]);
        uint32_t b = space->point_index(triple[1]);
        uint32_t c = space->point_index(triple[2]);
        auto line = space->find_line(a, b);
        if (!line || std::find(space->line(*line).points.begin(), space->line(*line).points.end(), c) ==
                         space->line(*line).points.end()) {
            throw InvalidArgument("not a line of the space: " + format_observable(triple[0]) + " " +
                                  format_observable(triple[1]) + " " + format_observable(triple[2]));
        }
        points.insert(points.end(), {a, b, c});
        lines.push_back(*line);
    }
    return Configuration(std::move(space), std::move(points), std::move(lines));
}

bool Configuration::contains_point(uint32_t global_point) const {
    return global_point < global_to_local_.size() && global_to_local_[global_point] != kAbsent;
}

uint32_t Configuration::local_index(uint32_t global_point) const {
    if (!contains_point(global_point)) {
        throw InvalidArgument("point " + std::to_string(global_point) + " is not in the configuration");
    }
    return global_to_local_[global_point];
}

Assignment all_plus(const Configuration &config) { return {std::vector<int8_t>(config.point_count(), 1)}; }

namespace {

void check_domain(const Configuration &config, const Assignment &assignment) {
    if (assignment.values.size() != config.point_count()) {
        throw InvalidArgument("assignment has " + std::to_string(assignment.values.size()) +
                              " values for a configuration of " + std::to_string(config.point_count()) + " points");
    }
}

bool is_unsatisfied(const Assignment &a, const PointTriple &ctx, int8_t expected) {
    return a.values[ctx[0]] * a.values[ctx[1]] * a.values[ctx[2]] != expected;
}

}  // namespace

size_t hamming_distance(const Configuration &config, const Assignment &assignment) {
    check_domain(config, assignment);
    const auto contexts = config.local_contexts();
    const auto signs = config.expected_signs();
    size_t distance = 0;
    for (size_t c = 0; c < contexts.size(); c++) {
        distance += is_unsatisfied(assignment, contexts[c], signs[c]);
    }
    return distance;
}

std::vector<PointTriple> UnsatisfiedConfiguration::lines() const {
    std::vector<PointTriple> out;
    out.reserve(context_ids.size());
    for (uint32_t id : context_ids) {
        out.push_back(space->line(id).points);
    }
    return out;
}

UnsatisfiedConfiguration unsatisfied(const Configuration &config, const Assignment &assignment) {
    check_domain(config, assignment);
    const auto contexts = config.local_contexts();
    const auto signs = config.expected_signs();
    const auto ids = config.context_ids();
    std::vector<uint32_t> unsat;
    for (size_t c = 0; c < contexts.size(); c++) {
        if (is_unsatisfied(assignment, contexts[c], signs[c])) {
            unsat.push_back(ids[c]);
        }
    }
    const auto pts = config.point_ids();
    return make_line_set(config.space_ptr(), std::vector<uint32_t>(pts.begin(), pts.end()), std::move(unsat));
}

UnsatisfiedConfiguration restrict_to(const UnsatisfiedConfiguration &uns, const boost::dynamic_bitset<> &subset) {
    if (subset.size() != uns.space->point_count()) {
        throw InvalidArgument("point subset size does not match the space");
    }
    std::vector<uint32_t> points;
    for (uint32_t p : uns.point_ids) {
        if (subset.test(p)) {
            points.push_back(p);
        }
    }
    std::vector<uint32_t> lines;
    for (uint32_t id : uns.context_ids) {
        const auto &pts = uns.space->line(id).points;
        if (subset.test(pts[0]) && subset.test(pts[1]) && subset.test(pts[2])) {
            lines.push_back(id);
        }
    }
    return make_line_set(uns.space, std::move(points), std::move(lines));
}

UnsatisfiedConfiguration make_line_set(std::shared_ptr<const SymplecticSpace> space, std::vector<uint32_t> point_ids,
                                       std::vector<uint32_t> line_ids) {
    std::sort(point_ids.begin(), point_ids.end());
    std::sort(line_ids.begin(), line_ids.end());
    UnsatisfiedConfiguration out;
    out.covered_points = covered_by(*space, line_ids);
    out.space = std::move(space);
    out.point_ids = std::move(point_ids);
    out.context_ids = std::move(line_ids);
    return out;
}

}  // namespace polarctx
