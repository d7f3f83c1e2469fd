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
#include <bitset>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "polarctx/configuration.hpp"

namespace polarctx {

/// Sorted (ascending) degrees of a line's three points.
using DegreeTriple = std::array<uint32_t, 3>;

/// Degree of every covered point, keyed by global point id.
using PointDegrees = std::unordered_map<uint32_t, uint32_t>;

struct DegreeProfile {
    /// degree -> number of covered points with that degree
    std::map<uint32_t, uint32_t> histogram;
    size_t covered_point_count = 0;
    /// Points of the parent configuration on no line (0 for bare line sets).
    size_t uncovered_point_count = 0;
    size_t total_context_count = 0;

    bool operator==(const DegreeProfile &) const = default;
};

struct LineTypeProfile {
    using Map = std::map<DegreeTriple, size_t>;
    Map classes;

    bool operator==(const LineTypeProfile &) const = default;
};

/// Undirected graph without loops or multi-edges.
class SimpleGraph {
   public:
    explicit SimpleGraph(size_t vertex_count = 0) : adjacency_(vertex_count) {}

    /// Throws InvalidArgument on loops and repeated edges.
    void add_edge(uint32_t u, uint32_t v);

    size_t vertex_count() const { return adjacency_.size(); }
    size_t edge_count() const { return edges_; }
    const std::vector<uint32_t> &neighbors(uint32_t v) const { return adjacency_[v]; }
    size_t degree(uint32_t v) const { return adjacency_[v].size(); }
    bool has_edge(uint32_t u, uint32_t v) const;

    /// Length of a shortest cycle; 0 for a forest.
    size_t girth() const;
    bool is_bipartite() const;
    /// Common degree, or -1 when the graph is not regular (or empty).
    int regular_degree() const;

    /// Optional vertex labels (global point ids for skeleton graphs).
    std::vector<uint32_t> labels;

   private:
    std::vector<std::vector<uint32_t>> adjacency_;
    size_t edges_ = 0;
};

PointDegrees point_degrees(std::span<const PointTriple> lines);

DegreeProfile degree_profile(std::span<const PointTriple> lines);
DegreeProfile degree_profile(const UnsatisfiedConfiguration &uns);

LineTypeProfile line_type_profile(std::span<const PointTriple> lines);
inline LineTypeProfile line_type_profile(const UnsatisfiedConfiguration &uns) { return line_type_profile(uns.lines()); }

DegreeTriple degree_triple(const PointTriple &line, const PointDegrees &degrees);

/// Lines of `lines` whose degree triple (with respect to `lines`) is `cls`.
std::vector<PointTriple> lines_of_class(std::span<const PointTriple> lines, const DegreeTriple &cls);

/// Graph on the `vertex_degree` points of `class_lines`, one edge per line
/// joining its two vertex-role points; the third point of each line must
/// have `midpoint_degree`. Degrees come from the enclosing configuration.
SimpleGraph skeleton_graph(std::span<const PointTriple> class_lines, const PointDegrees &degrees,
                           uint32_t vertex_degree, uint32_t midpoint_degree);

/// Skeleton of the class `cls` of `uns`; the repeated degree of the triple
/// plays the vertex role.
SimpleGraph skeleton_graph(const UnsatisfiedConfiguration &uns, const DegreeTriple &cls);

/// Components under shared-point connectivity, ordered by smallest point.
std::vector<std::vector<PointTriple>> connected_components(std::span<const PointTriple> lines);

/// Bipartite point-line incidence graph; points first (ascending id), then
/// lines in input order.
SimpleGraph incidence_graph(std::span<const PointTriple> lines);

/// Connected components as induced subgraphs, ordered by smallest vertex;
/// labels are carried over when present.
std::vector<SimpleGraph> graph_components(const SimpleGraph &g);

/// H(n): u_i ~ v_{(i+j) mod k} iff bit j of n is set, k = bit length of n.
SimpleGraph haar_graph(uint64_t n);
/// Nonzero vectors vs nonzero functionals of F_2^{d+1}; edge iff the
/// functional vanishes on the vector.
SimpleGraph point_hyperplane_graph(uint32_t d);
SimpleGraph complete_bipartite(uint32_t m, uint32_t n);
SimpleGraph coxeter_graph();
/// LCF [5,-5]^7.
SimpleGraph heawood_graph();

constexpr size_t kMaxIsomorphismVertices = 256;

/// Exact isomorphism test by backtracking with distance-profile pruning.
bool graphs_isomorphic(const SimpleGraph &a, const SimpleGraph &b);

/// 63 points, 63 lines, three lines per point, incidence graph of girth 12:
/// the combinatorial profile of a generalized hexagon of order (2,2).
bool recognize_hexagon(std::span<const PointTriple> lines);

/// 135 covered points, 315 lines, every point of degree 7.
bool dw52_profile(std::span<const PointTriple> lines);
inline bool dw52_profile(const UnsatisfiedConfiguration &uns) { return dw52_profile(uns.lines()); }

}  // namespace polarctx
