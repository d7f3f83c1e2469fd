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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "polarctx/error.hpp"
#include "polarctx/structure.hpp"

using namespace polarctx;
using namespace polarctx::testing;

namespace {

SimpleGraph relabel(const SimpleGraph &g, std::mt19937_64 &rng) {
    std::vector<uint32_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); v++)
        for (uint32_t w : g.neighbors(v))
            if (v < w) h.add_edge(perm[v], perm[w]);
    return h;
}

std::vector<PointTriple> relabel_lines(const std::vector<PointTriple> &lines, std::mt19937_64 &rng) {
    uint32_t max_point = 0;
    for (const auto &l : lines) max_point = std::max({max_point, l[0], l[1], l[2]});
    std::vector<uint32_t> perm(max_point + 1);
    std::iota(perm.begin(), perm.end(), 1000);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PointTriple> out;
    for (const auto &l : lines) out.push_back({perm[l[0]], perm[l[1]], perm[l[2]]});
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

// Groups class lines by the skeleton component that holds their vertex-role points.
std::vector<std::vector<PointTriple>> split_by_skeleton(const std::vector<PointTriple> &class_lines,
                                                        const PointDegrees &degrees, uint32_t vdeg, uint32_t mdeg) {
    const auto comps = graph_components(skeleton_graph(class_lines, degrees, vdeg, mdeg));
    std::map<uint32_t, size_t> owner;
    for (size_t c = 0; c < comps.size(); c++)
        for (uint32_t p : comps[c].labels) owner[p] = c;
    std::vector<std::vector<PointTriple>> out(comps.size());
    for (const auto &l : class_lines)
        for (uint32_t p : l)
            if (owner.count(p)) {
                out[owner[p]].push_back(l);
                break;
            }
    return out;
}

void check_conservation(const std::vector<PointTriple> &lines) {
    const DegreeProfile dp = degree_profile(lines);
    uint64_t weighted = 0;
    for (const auto &[d, c] : dp.histogram) weighted += uint64_t{d} * c;
    CHECK(weighted == 3 * dp.total_context_count);
    size_t classes = 0;
    for (const auto &[t, c] : line_type_profile(lines).classes) classes += c;
    CHECK(classes == lines.size());
}

}  // namespace

TEST_CASE("simple graph basics", "[structure]") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(1, 0));
    CHECK(g.girth() == 4);
    CHECK(g.is_bipartite());
    CHECK(g.regular_degree() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 1), InvalidArgument);
    SimpleGraph tree(3);
    tree.add_edge(0, 1);
    tree.add_edge(0, 2);
    CHECK(tree.girth() == 0);
    CHECK(tree.regular_degree() == -1);
}

TEST_CASE("reference graphs", "[structure]") {
    const SimpleGraph heawood = heawood_graph();
    CHECK(heawood.vertex_count() == 14);
    CHECK(heawood.edge_count() == 21);
    CHECK(heawood.regular_degree() == 3);
    CHECK(heawood.girth() == 6);

    const SimpleGraph coxeter = coxeter_graph();
    CHECK(coxeter.vertex_count() == 28);
    CHECK(coxeter.edge_count() == 42);
    CHECK(coxeter.regular_degree() == 3);
    CHECK(coxeter.girth() == 7);
    CHECK_FALSE(coxeter.is_bipartite());

    const SimpleGraph h4 = haar_graph(4);
    CHECK(h4.vertex_count() == 6);
    CHECK(h4.edge_count() == 3);
    CHECK(graph_components(h4).size() == 3);

    const SimpleGraph ph3 = point_hyperplane_graph(3);
    CHECK(ph3.vertex_count() == 30);
    CHECK(ph3.edge_count() == 105);
    CHECK(ph3.regular_degree() == 7);
    CHECK(ph3.is_bipartite());

    const SimpleGraph ph2 = point_hyperplane_graph(2);
    CHECK(ph2.vertex_count() == 14);
    CHECK(ph2.regular_degree() == 3);
    CHECK(ph2.girth() == 6);

    const SimpleGraph k77 = complete_bipartite(7, 7);
    CHECK(k77.edge_count() == 49);
    CHECK_THROWS_AS(haar_graph(0), InvalidArgument);
}

TEST_CASE("haar and point-hyperplane graphs are regular bipartite", "[structure]") {
    for (uint64_t n = 1; n < 200; n++) {
        const SimpleGraph g = haar_graph(n);
        CHECK(g.regular_degree() == std::popcount(n));
        CHECK(g.is_bipartite());
    }
    for (uint32_t d = 1; d <= 5; d++) {
        const SimpleGraph g = point_hyperplane_graph(d);
        CHECK(g.vertex_count() == 2 * ((1u << (d + 1)) - 1));
        CHECK(g.regular_degree() == static_cast<int>((1u << d) - 1));
        CHECK(g.is_bipartite());
    }
}

TEST_CASE("isomorphism examples", "[structure]") {
    CHECK(graphs_isomorphic(haar_graph(69), point_hyperplane_graph(2)));
    CHECK(graphs_isomorphic(haar_graph(69), heawood_graph()));
    CHECK(graphs_isomorphic(haar_graph(17051), point_hyperplane_graph(3)));
    CHECK_FALSE(graphs_isomorphic(heawood_graph(), complete_bipartite(7, 7)));
    CHECK_FALSE(graphs_isomorphic(coxeter_graph(), haar_graph(8195)));
    std::mt19937_64 rng(17);
    for (int k = 0; k < 5; k++) {
        CHECK(graphs_isomorphic(relabel(coxeter_graph(), rng), relabel(coxeter_graph(), rng)));
        CHECK(graphs_isomorphic(relabel(point_hyperplane_graph(4), rng), point_hyperplane_graph(4)));
    }
    // Same degree sequence, different graphs: a 6-cycle versus two triangles.
    SimpleGraph c6(6), tt(6);
    for (uint32_t v = 0; v < 6; v++) c6.add_edge(v, (v + 1) % 6);
    tt.add_edge(0, 1); tt.add_edge(1, 2); tt.add_edge(2, 0);
    tt.add_edge(3, 4); tt.add_edge(4, 5); tt.add_edge(5, 3);
    CHECK_FALSE(graphs_isomorphic(c6, tt));
    CHECK(graphs_isomorphic(SimpleGraph(0), SimpleGraph(0)));
    CHECK_THROWS_AS(graphs_isomorphic(SimpleGraph(300), SimpleGraph(300)), CapabilityError);
}

TEST_CASE("elliptic four-qubit fixture structure", "[structure]") {
    const auto uns = fixture_unsatisfied("elliptic4_315.json");
    const auto lines = uns.lines();
    REQUIRE(lines.size() == 315);
    check_conservation(lines);
    const DegreeProfile dp = degree_profile(uns);
    CHECK(dp.histogram == std::map<uint32_t, uint32_t>{{3, 14}, {7, 21}, {9, 84}});
    CHECK(line_type_profile(uns).classes ==
          LineTypeProfile::Map{{{3, 3, 7}, 21}, {{7, 9, 9}, 126}, {{9, 9, 9}, 168}});
    CHECK_FALSE(dw52_profile(uns));

    const SimpleGraph heawood = skeleton_graph(uns, {3, 3, 7});
    CHECK(heawood.vertex_count() == 14);
    CHECK(heawood.edge_count() == 21);
    CHECK(graphs_isomorphic(heawood, heawood_graph()));

    const auto coxeter_lines = lines_of_class(lines, {7, 9, 9});
    const auto hw_lines = lines_of_class(lines, {3, 3, 7});
    const PointDegrees degrees = point_degrees(lines);
    const auto comps = split_by_skeleton(coxeter_lines, degrees, 9, 7);
    REQUIRE(comps.size() == 3);
    for (const auto &comp : comps) {
        CHECK(comp.size() == 42);
        const SimpleGraph g = skeleton_graph(comp, degrees, 9, 7);
        CHECK(g.vertex_count() == 28);
        CHECK(graphs_isomorphic(g, coxeter_graph()));
        std::vector<PointTriple> hexagon = hw_lines;
        hexagon.insert(hexagon.end(), comp.begin(), comp.end());
        CHECK(recognize_hexagon(hexagon));
    }
    CHECK_THROWS_AS(skeleton_graph(uns, {9, 9, 9}), InvalidArgument);
    CHECK_THROWS_AS(skeleton_graph(coxeter_lines, degrees, 7, 9), InvalidArgument);
}

TEST_CASE("hyperbolic four-qubit fixture has the DW(5,2) profile", "[structure]") {
    const auto uns = fixture_unsatisfied("hyperbolic4_315.json");
    CHECK(dw52_profile(uns));
    CHECK(degree_profile(uns).histogram == std::map<uint32_t, uint32_t>{{7, 135}});
    CHECK_FALSE(dw52_profile(std::vector<PointTriple>{}));
}

TEST_CASE("full four-qubit fixture structure", "[structure]") {
    const auto uns = fixture_unsatisfied("full4_1575.json");
    const auto lines = uns.lines();
    check_conservation(lines);
    CHECK(degree_profile(uns).histogram == std::map<uint32_t, uint32_t>{{7, 30}, {19, 105}, {21, 120}});
    CHECK(line_type_profile(uns).classes ==
          LineTypeProfile::Map{{{7, 7, 19}, 105}, {{19, 19, 19}, 210}, {{19, 21, 21}, 1260}});
    const SimpleGraph g = skeleton_graph(uns, {7, 7, 19});
    CHECK(g.vertex_count() == 30);
    CHECK(g.edge_count() == 105);
    CHECK(g.regular_degree() == 7);
    CHECK(g.is_bipartite());
    CHECK(graphs_isomorphic(g, point_hyperplane_graph(3)));
}

TEST_CASE("hexagon recognition rejects short cycles", "[structure]") {
    const auto uns = fixture_unsatisfied("elliptic4_315.json");
    const auto lines = uns.lines();
    std::vector<PointTriple> hexagon = lines_of_class(lines, {3, 3, 7});
    const auto comps = split_by_skeleton(lines_of_class(lines, {7, 9, 9}), point_degrees(lines), 9, 7);
    hexagon.insert(hexagon.end(), comps[0].begin(), comps[0].end());
    REQUIRE(recognize_hexagon(hexagon));

    // Swapping points between two lines keeps all counts but shortens cycles.
    bool found_pentagon_variant = false;
    for (size_t i = 0; i < hexagon.size() && !found_pentagon_variant; i++) {
        for (size_t j = i + 1; j < hexagon.size() && !found_pentagon_variant; j++) {
            auto variant = hexagon;
            std::swap(variant[i][0], variant[j][0]);
            const auto &a = variant[i];
            const auto &b = variant[j];
            if (a[0] == a[1] || a[0] == a[2] || b[0] == b[1] || b[0] == b[2]) continue;
            if (incidence_graph(variant).girth() < 12) {
                CHECK_FALSE(recognize_hexagon(variant));
                found_pentagon_variant = true;
            }
        }
    }
    CHECK(found_pentagon_variant);
    CHECK_FALSE(recognize_hexagon(std::vector<PointTriple>{{1, 2, 3}}));
}

TEST_CASE("connected components", "[structure]") {
    CHECK(connected_components(std::vector<PointTriple>{{1, 2, 3}}).size() == 1);
    const std::vector<PointTriple> lines{{1, 2, 3}, {7, 8, 9}, {3, 4, 5}, {9, 10, 11}};
    const auto comps = connected_components(lines);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<PointTriple>{{1, 2, 3}, {3, 4, 5}});
    CHECK(comps[1] == std::vector<PointTriple>{{7, 8, 9}, {9, 10, 11}});
    CHECK(connected_components(std::vector<PointTriple>{}).empty());
}

TEST_CASE("empty configurations give zeroed profiles", "[structure]") {
    const DegreeProfile dp = degree_profile(std::vector<PointTriple>{});
    CHECK(dp.histogram.empty());
    CHECK(dp.covered_point_count == 0);
    CHECK(dp.total_context_count == 0);
    CHECK(line_type_profile(std::vector<PointTriple>{}).classes.empty());
}

TEST_CASE("recognizers are label invariant", "[property]") {
    std::mt19937_64 rng(23);
    const auto e4 = fixture_unsatisfied("elliptic4_315.json").lines();
    const auto h4 = fixture_unsatisfied("hyperbolic4_315.json").lines();
    auto hexagon = lines_of_class(e4, {3, 3, 7});
    const auto comps = split_by_skeleton(lines_of_class(e4, {7, 9, 9}), point_degrees(e4), 9, 7);
    REQUIRE(comps.size() == 3);
    hexagon.insert(hexagon.end(), comps[1].begin(), comps[1].end());
    for (int k = 0; k < 5; k++) {
        const auto e = relabel_lines(e4, rng);
        CHECK(line_type_profile(e) == line_type_profile(e4));
        CHECK(degree_profile(e) == degree_profile(e4));
        CHECK(dw52_profile(relabel_lines(h4, rng)));
        CHECK(recognize_hexagon(relabel_lines(hexagon, rng)));
        const auto rl = relabel_lines(e4, rng);
        CHECK(graphs_isomorphic(skeleton_graph(lines_of_class(rl, {3, 3, 7}), point_degrees(rl), 3, 7),
                                heawood_graph()));
    }
}
