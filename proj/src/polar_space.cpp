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

#include "polarctx/polar_space.hpp"

#include <algorithm>
#include <string>

#include "polarctx/error.hpp"

namespace polarctx {

uint64_t space_point_count(uint32_t n_qubits) { return (uint64_t{1} << (2 * n_qubits)) - 1; }

uint64_t space_line_count(uint32_t n_qubits) {
    return space_point_count(n_qubits) * ((uint64_t{1} << (2 * n_qubits - 2)) - 1) / 3;
}

SymplecticSpace::SymplecticSpace(uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapabilityError("polar spaces are built for 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                              std::to_string(n_qubits));
    }
    point_count_ = static_cast<uint32_t>(space_point_count(n_qubits));
    lines_.reserve(space_line_count(n_qubits));

    // Each line {a < b < c} is emitted once, from its two smallest ids.
    const uint64_t max_id = point_count_;
    for (uint64_t a = 1; a <= max_id; a++) {
        for (uint64_t b = a + 1; b <= max_id; b++) {
            uint64_t c = a ^ b;
            if (c < b || packed::symplectic(a, b, n_qubits) != 0) {
                continue;
            }
            int8_t sign = static_cast<int8_t>(packed::line_sign(a, b, n_qubits));
            lines_.push_back(
                {{static_cast<uint32_t>(a - 1), static_cast<uint32_t>(b - 1), static_cast<uint32_t>(c - 1)}, sign});
            negative_lines_ += sign < 0;
        }
    }

    offsets_.assign(point_count_ + 1, 0);
    for (const Line &line : lines_) {
        for (uint32_t p : line.points) {
            offsets_[p + 1]++;
        }
    }
    for (uint32_t p = 0; p < point_count_; p++) {
        offsets_[p + 1] += offsets_[p];
    }
    incidence_.resize(offsets_.back());
    std::vector<uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (uint32_t k = 0; k < lines_.size(); k++) {
        for (uint32_t p : lines_[k].points) {
            incidence_[cursor[p]++] = k;
        }
    }
}

uint32_t SymplecticSpace::point_index(const Observable &p) const {
    if (p.n_qubits != n_qubits_) {
        throw DimensionError("observable " + format_observable(p) + " does not act on " + std::to_string(n_qubits_) +
                             " qubits");
    }
    if (p.is_identity()) {
        throw InvalidArgument("the identity is not a point of the polar space");
    }
    return static_cast<uint32_t>(point_id(p) - 1);
}

std::optional<uint32_t> SymplecticSpace::find_line(uint32_t a, uint32_t b) const {
    if (a == b || a >= point_count_ || b >= point_count_) {
        return std::nullopt;
    }
    uint64_t ia = id_of(a), ib = id_of(b);
    if (packed::symplectic(ia, ib, n_qubits_) != 0) {
        return std::nullopt;
    }
    std::array<uint32_t, 3> key{a, b, static_cast<uint32_t>((ia ^ ib) - 1)};
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(lines_.begin(), lines_.end(), key,
                               [](const Line &l, const std::array<uint32_t, 3> &k) { return l.points < k; });
    if (it == lines_.end() || it->points != key) {
        return std::nullopt;
    }
    return static_cast<uint32_t>(it - lines_.begin());
}

std::shared_ptr<const SymplecticSpace> build_space(uint32_t n_qubits) {
    return std::make_shared<const SymplecticSpace>(n_qubits);
}

const char *to_string(QuadricKind kind) { return kind == QuadricKind::hyperbolic ? "hyperbolic" : "elliptic"; }

size_t Quadric::negative_line_count(const SymplecticSpace &space) const {
    size_t count = 0;
    for (uint32_t id : line_ids) {
        count += space.line(id).sign < 0;
    }
    return count;
}

namespace {

// Index id 0 stands for the identity.
Quadric quadric_from_index_id(const SymplecticSpace &space, uint64_t index_id) {
    const uint32_t n = space.n_qubits();
    Quadric q;
    q.kind = packed::y_count(index_id, n) % 2 == 0 ? QuadricKind::hyperbolic : QuadricKind::elliptic;
    q.index = index_id == 0 ? Observable{0, 0, n} : observable_from_id(index_id, n);
    q.members.resize(space.point_count());
    for (uint32_t p = 0; p < space.point_count(); p++) {
        uint64_t id = SymplecticSpace::id_of(p);
        if (packed::symplectic(id, index_id, n) == (packed::y_count(id, n) & 1U)) {
            q.members.set(p);
        }
    }
    const auto lines = space.lines();
    for (uint32_t k = 0; k < lines.size(); k++) {
        const auto &pts = lines[k].points;
        if (q.members.test(pts[0]) && q.members.test(pts[1]) && q.members.test(pts[2])) {
            q.line_ids.push_back(k);
        }
    }
    return q;
}

}  // namespace

Quadric make_quadric(const SymplecticSpace &space, const Observable &index) {
    if (index.is_identity()) {
        throw InvalidArgument("a quadric index must be a point; use make_identity_quadric for Q+ of the identity");
    }
    return quadric_from_index_id(space, SymplecticSpace::id_of(space.point_index(index)));
}

Quadric make_identity_quadric(const SymplecticSpace &space) { return quadric_from_index_id(space, 0); }

std::vector<Quadric> enumerate_quadrics(const SymplecticSpace &space, QuadricKind kind, bool include_identity) {
    const uint32_t n = space.n_qubits();
    if (kind == QuadricKind::elliptic && n < 2) {
        throw CapabilityError("elliptic quadrics need at least 2 qubits");
    }
    std::vector<Quadric> out;
    if (kind == QuadricKind::hyperbolic && include_identity) {
        out.push_back(make_identity_quadric(space));
    }
    const uint32_t wanted_parity = kind == QuadricKind::hyperbolic ? 0 : 1;
    for (uint32_t p = 0; p < space.point_count(); p++) {
        uint64_t id = SymplecticSpace::id_of(p);
        if ((packed::y_count(id, n) & 1U) == wanted_parity) {
            out.push_back(quadric_from_index_id(space, id));
        }
    }
    return out;
}

std::map<size_t, size_t> negative_line_distribution(const SymplecticSpace &space, QuadricKind kind) {
    std::map<size_t, size_t> histogram;
    for (const Quadric &q : enumerate_quadrics(space, kind, /*include_identity=*/true)) {
        histogram[q.negative_line_count(space)]++;
    }
    return histogram;
}

uint64_t quadric_point_count(uint32_t n_qubits, QuadricKind kind) {
    uint64_t half = uint64_t{1} << (n_qubits - 1);
    uint64_t full = uint64_t{1} << n_qubits;
    return kind == QuadricKind::hyperbolic ? (half + 1) * (full - 1) : (half - 1) * (full + 1);
}

uint64_t quadric_family_size(uint32_t n_qubits, QuadricKind kind) { return quadric_point_count(n_qubits, kind) + 1; }

}  // namespace polarctx
