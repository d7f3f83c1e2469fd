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

#include "polarctx/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "polarctx/error.hpp"

namespace polarctx {

void SimpleGraph::add_edge(uint32_t u, uint32_t v) {
    if (u == v) {
        throw InvalidArgument("loop at vertex " + std::to_string(u));
    }
    if (u >= adjacency_.size() || v >= adjacency_.size()) {
        throw InvalidArgument("edge endpoint out of range");
    }
    auto &nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) {
        throw InvalidArgument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nu.insert(it, v);
    auto &nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    edges_++;
}

bool SimpleGraph::has_edge(uint32_t u, uint32_t v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

size_t SimpleGraph::girth() const {
    const size_t n = vertex_count();
    size_t best = std::numeric_limits<size_t>::max();
    std::vector<int64_t> dist(n);
    std::vector<int64_t> parent(n);
    for (uint32_t root = 0; root < n; root++) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            if (static_cast<size_t>(2 * dist[u] + 1) >= best) {
                break;
            }
            for (uint32_t w : adjacency_[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != static_cast<int64_t>(w)) {
                    best = std::min(best, static_cast<size_t>(dist[u] + dist[w] + 1));
                }
            }
        }
    }
    return best == std::numeric_limits<size_t>::max() ? 0 : best;
}

bool SimpleGraph::is_bipartite() const {
    std::vector<int> side(vertex_count(), -1);
    for (uint32_t s = 0; s < vertex_count(); s++) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<uint32_t> queue{s};
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (uint32_t w : adjacency_[u]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int SimpleGraph::regular_degree() const {
    if (adjacency_.empty()) return -1;
    size_t d = adjacency_[0].size();
    for (const auto &nbrs : adjacency_) {
        if (nbrs.size() != d) return -1;
    }
    return static_cast<int>(d);
}

PointDegrees point_degrees(std::span<const PointTriple> lines) {
    PointDegrees degrees;
    degrees.reserve(lines.size());
    for (const auto &line : lines) {
        for (uint32_t p : line) {
            degrees[p]++;
        }
    }
    return degrees;
}

DegreeProfile degree_profile(std::span<const PointTriple> lines) {
    DegreeProfile profile;
    for (const auto &[point, degree] : point_degrees(lines)) {
        profile.histogram[degree]++;
        profile.covered_point_count++;
    }
    profile.total_context_count = lines.size();
    return profile;
}

DegreeProfile degree_profile(const UnsatisfiedConfiguration &uns) {
    DegreeProfile profile = degree_profile(uns.lines());
    profile.uncovered_point_count = uns.point_ids.size() - uns.covered_points.size();
    return profile;
}

DegreeTriple degree_triple(const PointTriple &line, const PointDegrees &degrees) {
    DegreeTriple t{degrees.at(line[0]), degrees.at(line[1]), degrees.at(line[2])};
    std::sort(t.begin(), t.end());
    return t;
}

LineTypeProfile line_type_profile(std::span<const PointTriple> lines) {
    LineTypeProfile profile;
    const PointDegrees degrees = point_degrees(lines);
    for (const auto &line : lines) {
        profile.classes[degree_triple(line, degrees)]++;
    }
    return profile;
}

std::vector<PointTriple> lines_of_class(std::span<const PointTriple> lines, const DegreeTriple &cls) {
    const PointDegrees degrees = point_degrees(lines);
    std::vector<PointTriple> out;
    for (const auto &line : lines) {
        if (degree_triple(line, degrees) == cls) {
            out.push_back(line);
        }
    }
    return out;
}

SimpleGraph skeleton_graph(std::span<const PointTriple> class_lines, const PointDegrees &degrees,
                           uint32_t vertex_degree, uint32_t midpoint_degree) {
    if (vertex_degree == midpoint_degree) {
        throw InvalidArgument("vertex and midpoint roles need distinct degrees");
    }
    std::vector<std::array<uint32_t, 2>> edges;
    std::vector<uint32_t> vertices;
    for (const auto &line : class_lines) {
        std::array<uint32_t, 2> ends{};
        int n_vertex = 0, n_mid = 0;
        for (uint32_t p : line) {
            uint32_t d = degrees.at(p);
            if (d == vertex_degree) {
                if (n_vertex < 2) ends[n_vertex] = p;
                n_vertex++;
            } else if (d == midpoint_degree) {
                n_mid++;
            }
        }
        if (n_vertex != 2 || n_mid != 1) {
            throw InvalidArgument("line does not have two degree-" + std::to_string(vertex_degree) +
                                  " points and one degree-" + std::to_string(midpoint_degree) + " point");
        }
        edges.push_back(ends);
        vertices.insert(vertices.end(), ends.begin(), ends.end());
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    SimpleGraph g(vertices.size());
    auto index = [&](uint32_t p) {
        return static_cast<uint32_t>(std::lower_bound(vertices.begin(), vertices.end(), p) - vertices.begin());
    };
    for (const auto &e : edges) {
        g.add_edge(index(e[0]), index(e[1]));
    }
    g.labels = std::move(vertices);
    return g;
}

SimpleGraph skeleton_graph(const UnsatisfiedConfiguration &uns, const DegreeTriple &cls) {
    DegreeTriple sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    uint32_t vertex, mid;
    if (sorted[0] == sorted[1] && sorted[1] != sorted[2]) {
        vertex = sorted[0];
        mid = sorted[2];
    } else if (sorted[1] == sorted[2] && sorted[0] != sorted[1]) {
        vertex = sorted[1];
        mid = sorted[0];
    } else {
        throw InvalidArgument("line class needs exactly one repeated degree to define a skeleton");
    }
    const auto lines = uns.lines();
    return skeleton_graph(lines_of_class(lines, sorted), point_degrees(lines), vertex, mid);
}

std::vector<std::vector<PointTriple>> connected_components(std::span<const PointTriple> lines) {
    std::unordered_map<uint32_t, uint32_t> parent;
    auto find = [&parent](uint32_t x) {
        uint32_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            uint32_t next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    };
    for (const auto &line : lines) {
        for (uint32_t p : line) parent.try_emplace(p, p);
    }
    for (const auto &line : lines) {
        uint32_t r0 = find(line[0]);
        for (int k = 1; k < 3; k++) {
            uint32_t rk = find(line[k]);
            if (rk != r0) {
                // Keep the smallest point as root so components sort by it.
                if (rk < r0) std::swap(rk, r0);
                parent[rk] = r0;
            }
        }
    }
    std::map<uint32_t, std::vector<PointTriple>> groups;
    for (const auto &line : lines) {
        groups[find(line[0])].push_back(line);
    }
    std::vector<std::vector<PointTriple>> out;
    for (auto &[root, group] : groups) {
        out.push_back(std::move(group));
    }
    return out;
}

SimpleGraph incidence_graph(std::span<const PointTriple> lines) {
    std::vector<uint32_t> points;
    for (const auto &line : lines) points.insert(points.end(), line.begin(), line.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    SimpleGraph g(points.size() + lines.size());
    for (uint32_t k = 0; k < lines.size(); k++) {
        for (uint32_t p : lines[k]) {
            auto idx = static_cast<uint32_t>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
            g.add_edge(idx, static_cast<uint32_t>(points.size()) + k);
        }
    }
    g.labels = std::move(points);
    return g;
}

std::vector<SimpleGraph> graph_components(const SimpleGraph &g) {
    const size_t n = g.vertex_count();
    std::vector<int> component(n, -1);
    std::vector<std::vector<uint32_t>> members;
    for (uint32_t s = 0; s < n; s++) {
        if (component[s] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.push_back({s});
        component[s] = id;
        for (size_t head = 0; head < members.back().size(); head++) {
            for (uint32_t w : g.neighbors(members[id][head])) {
                if (component[w] < 0) {
                    component[w] = id;
                    members[id].push_back(w);
                }
            }
        }
    }
    std::vector<SimpleGraph> out;
    std::vector<uint32_t> local(n);
    for (auto &vs : members) {
        std::sort(vs.begin(), vs.end());
        for (uint32_t k = 0; k < vs.size(); k++) local[vs[k]] = k;
        SimpleGraph sub(vs.size());
        for (uint32_t v : vs) {
            for (uint32_t w : g.neighbors(v)) {
                if (v < w) sub.add_edge(local[v], local[w]);
            }
        }
        if (g.labels.size() == n) {
            for (uint32_t v : vs) sub.labels.push_back(g.labels[v]);
        }
        out.push_back(std::move(sub));
    }
    return out;
}

SimpleGraph haar_graph(uint64_t n) {
    if (n == 0) {
        throw InvalidArgument("Haar graphs are defined for n >= 1");
    }
    const uint32_t k = static_cast<uint32_t>(std::bit_width(n));
    SimpleGraph g(2 * k);
    for (uint32_t i = 0; i < k; i++) {
        for (uint32_t j = 0; j < k; j++) {
            if ((n >> j) & 1) {
                g.add_edge(i, k + (i + j) % k);
            }
        }
    }
    return g;
}

SimpleGraph point_hyperplane_graph(uint32_t d) {
    if (d < 1 || d > 7) {
        throw InvalidArgument("point-hyperplane graphs are built for 1 <= d <= 7");
    }
    const uint32_t m = (1U << (d + 1)) - 1;
    SimpleGraph g(2 * m);
    for (uint32_t v = 1; v <= m; v++) {
        for (uint32_t f = 1; f <= m; f++) {
            if (std::popcount(v & f) % 2 == 0) {
                g.add_edge(v - 1, m + f - 1);
            }
        }
    }
    return g;
}

SimpleGraph complete_bipartite(uint32_t m, uint32_t n) {
    SimpleGraph g(m + n);
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t j = 0; j < n; j++) {
            g.add_edge(i, m + j);
        }
    }
    return g;
}

SimpleGraph coxeter_graph() {
    // Outer 7-cycle a (0..6), star heptagons b (7..13, step 2) and c
    // (14..20, step 3), spokes d_i (21..27) joined to a_i, b_i, c_i.
    static constexpr uint32_t kEdges[42][2] = {
        {0, 1},   {0, 6},   {0, 21},  {1, 2},   {1, 22},  {2, 3},   {2, 23},  {3, 4},   {3, 24},
        {4, 5},   {4, 25},  {5, 6},   {5, 26},  {6, 27},  {7, 9},   {7, 12},  {7, 21},  {8, 10},
        {8, 13},  {8, 22},  {9, 11},  {9, 23},  {10, 12}, {10, 24}, {11, 13}, {11, 25}, {12, 26},
        {13, 27}, {14, 17}, {14, 18}, {14, 21}, {15, 18}, {15, 19}, {15, 22}, {16, 19}, {16, 20},
        {16, 23}, {17, 20}, {17, 24}, {18, 25}, {19, 26}, {20, 27}};
    SimpleGraph g(28);
    for (const auto &e : kEdges) {
        g.add_edge(e[0], e[1]);
    }
    return g;
}

SimpleGraph heawood_graph() {
    SimpleGraph g(14);
    for (uint32_t i = 0; i < 14; i++) {
        g.add_edge(i, (i + 1) % 14);
    }
    for (uint32_t i = 0; i < 14; i += 2) {
        g.add_edge(i, (i + 5) % 14);
    }
    return g;
}

namespace {

using Row = std::bitset<kMaxIsomorphismVertices>;

// Degree followed by the number of vertices at each BFS distance.
std::vector<uint32_t> vertex_invariant(const SimpleGraph &g, uint32_t v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<uint32_t> counts{static_cast<uint32_t>(g.degree(v))};
    dist[v] = 0;
    std::deque<uint32_t> queue{v};
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                if (counts.size() <= static_cast<size_t>(dist[w])) counts.resize(dist[w] + 1, 0);
                counts[dist[w]]++;
                queue.push_back(w);
            }
        }
    }
    return counts;
}

// Backtracking with forward checking: every unmapped vertex of `a` keeps the
// set of `b` vertices still compatible with the partial map, and the vertex
// with the smallest such set is mapped next.
struct Matcher {
    size_t n;
    std::vector<Row> adj_a, adj_b;

    bool extend(const std::vector<Row> &domain, const std::vector<bool> &mapped, size_t remaining) {
        if (remaining == 0) return true;
        uint32_t v = 0;
        size_t best = std::numeric_limits<size_t>::max();
        for (uint32_t u = 0; u < n; u++) {
            if (!mapped[u] && domain[u].count() < best) {
                best = domain[u].count();
                v = u;
            }
        }
        if (best == 0) return false;
        for (uint32_t w = 0; w < n; w++) {
            if (!domain[v].test(w)) continue;
            std::vector<Row> next = domain;
            std::vector<bool> next_mapped = mapped;
            next_mapped[v] = true;
            bool alive = true;
            for (uint32_t u = 0; u < n && alive; u++) {
                if (next_mapped[u]) continue;
                next[u].reset(w);
                if (adj_a[v].test(u)) {
                    next[u] &= adj_b[w];
                } else {
                    next[u] &= ~adj_b[w];
                }
                alive = next[u].any();
            }
            if (alive && extend(next, next_mapped, remaining - 1)) return true;
        }
        return false;
    }
};

std::vector<Row> bit_rows(const SimpleGraph &g) {
    std::vector<Row> rows(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); v++) {
        for (uint32_t w : g.neighbors(v)) rows[v].set(w);
    }
    return rows;
}

}  // namespace

bool graphs_isomorphic(const SimpleGraph &a, const SimpleGraph &b) {
    const size_t n = a.vertex_count();
    if (n > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices) {
        throw CapabilityError("isomorphism test is limited to " + std::to_string(kMaxIsomorphismVertices) +
                              " vertices");
    }
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n == 0) return true;

    std::vector<std::vector<uint32_t>> inv_a(n), inv_b(n);
    for (uint32_t v = 0; v < n; v++) {
        inv_a[v] = vertex_invariant(a, v);
        inv_b[v] = vertex_invariant(b, v);
    }
    auto sorted_a = inv_a, sorted_b = inv_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    auto color_of = [&](const std::vector<uint32_t> &inv) {
        return static_cast<int>(std::lower_bound(sorted_a.begin(), sorted_a.end(), inv) - sorted_a.begin());
    };

    std::vector<Row> domain(n);
    for (uint32_t v = 0; v < n; v++) {
        const int color = color_of(inv_a[v]);
        for (uint32_t w = 0; w < n; w++) {
            if (color_of(inv_b[w]) == color) domain[v].set(w);
        }
    }
    Matcher m{n, bit_rows(a), bit_rows(b)};
    return m.extend(domain, std::vector<bool>(n, false), n);
}

bool recognize_hexagon(std::span<const PointTriple> lines) {
    if (lines.size() != 63) return false;
    const PointDegrees degrees = point_degrees(lines);
    if (degrees.size() != 63) return false;
    for (const auto &[point, degree] : degrees) {
        if (degree != 3) return false;
    }
    for (const auto &line : lines) {
        if (line[0] == line[1] || line[1] == line[2] || line[0] == line[2]) return false;
    }
    return incidence_graph(lines).girth() == 12;
}

bool dw52_profile(std::span<const PointTriple> lines) {
    if (lines.size() != 315) return false;
    const PointDegrees degrees = point_degrees(lines);
    if (degrees.size() != 135) return false;
    return std::all_of(degrees.begin(), degrees.end(), [](const auto &kv) { return kv.second == 7; });
}

}  // namespace polarctx
