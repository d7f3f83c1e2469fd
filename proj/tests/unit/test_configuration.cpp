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

#include <random>

#include "fixtures.hpp"
#include "polarctx/error.hpp"
#include "polarctx/configuration.hpp"

using namespace polarctx;
using namespace polarctx::testing;

TEST_CASE("configurations built from spaces and quadrics", "[configuration]") {
    const auto s3 = build_space(3);
    const Configuration full3 = Configuration::from_space(s3);
    CHECK(full3.point_count() == 63);
    CHECK(full3.context_count() == 315);
    CHECK(full3.negative_context_count() == 90);

    const auto s2 = build_space(2);
    const Configuration e2 = Configuration::from_quadric(s2, make_quadric(*s2, parse_observable("IY")));
    CHECK(e2.point_count() == 5);
    CHECK(e2.context_count() == 0);

    const auto s4 = build_space(4);
    const Configuration e4 = Configuration::from_quadric(s4, make_quadric(*s4, parse_observable("IIIY")));
    CHECK(e4.point_count() == 119);
    CHECK(e4.context_count() == 1071);
}

TEST_CASE("valuation matches line signs and contexts stay inside the point set", "[configuration]") {
    const auto s3 = build_space(3);
    const Configuration q = Configuration::from_quadric(s3, make_quadric(*s3, parse_observable("IIX")));
    for (size_t c = 0; c < q.context_count(); c++) {
        const Line &line = s3->line(q.context_ids()[c]);
        CHECK(q.expected_signs()[c] == line.sign);
        for (int k = 0; k < 3; k++) {
            CHECK(q.point_ids()[q.local_contexts()[c][k]] == line.points[k]);
        }
    }
    CHECK_THROWS_AS(Configuration(s3, {0, 1}, {0}), InvalidArgument);
}

TEST_CASE("hamming distance examples", "[configuration]") {
    const auto s3 = build_space(3);
    const Configuration full3 = Configuration::from_space(s3);
    CHECK(hamming_distance(full3, all_plus(full3)) == 90);
    const auto uns = unsatisfied(full3, all_plus(full3));
    CHECK(uns.size() == 90);
    for (uint32_t id : uns.context_ids) CHECK(s3->line(id).sign == -1);

    const Configuration spread = two_spread();
    CHECK(spread.point_count() == 15);
    CHECK(spread.context_count() == 10);
    CHECK(spread.negative_context_count() == 5);
    CHECK(unsatisfied(spread, all_plus(spread)).size() == 5);

    Assignment c = all_plus(spread);
    c.values[spread.local_index(spread.space().point_index(parse_observable("ZIYX")))] = -1;
    c.values[spread.local_index(spread.space().point_index(parse_observable("XIXY")))] = -1;
    CHECK(hamming_distance(spread, c) == 1);

    const auto s2 = build_space(2);
    const Configuration empty = Configuration::from_quadric(s2, make_quadric(*s2, parse_observable("YI")));
    CHECK(hamming_distance(empty, all_plus(empty)) == 0);
    CHECK(unsatisfied(empty, all_plus(empty)).size() == 0);

    CHECK_THROWS_AS(hamming_distance(full3, Assignment{{1, 1}}), InvalidArgument);
}

TEST_CASE("restriction keeps exactly the lines inside the subset", "[configuration]") {
    const auto s3 = build_space(3);
    const Configuration full3 = Configuration::from_space(s3);
    const auto uns = unsatisfied(full3, all_plus(full3));
    boost::dynamic_bitset<> everything(s3->point_count());
    everything.set();
    CHECK(restrict_to(uns, everything).context_ids == uns.context_ids);

    const Quadric q = make_quadric(*s3, parse_observable("IIY"));
    const auto sub = restrict_to(uns, q.members);
    for (uint32_t id : sub.context_ids) {
        for (uint32_t p : s3->line(id).points) CHECK(q.members[p]);
    }
    // All negative lines of the quadric are in the restriction.
    size_t negatives_in_q = 0;
    for (uint32_t id : q.line_ids) negatives_in_q += s3->line(id).sign < 0 ? 1 : 0;
    CHECK(sub.size() == negatives_in_q);
}

TEST_CASE("distance properties on random assignments", "[property]") {
    std::mt19937_64 rng(11);
    for (uint32_t n = 2; n <= 4; n++) {
        const auto space = build_space(n);
        const Configuration full = Configuration::from_space(space);
        for (int trial = 0; trial < 30; trial++) {
            Assignment a = all_plus(full);
            for (auto &v : a.values) v = (rng() & 1) ? 1 : -1;
            const size_t d = hamming_distance(full, a);
            REQUIRE(unsatisfied(full, a).size() == d);
            const uint32_t o = rng() % full.point_count();
            a.values[o] = static_cast<int8_t>(-a.values[o]);
            const size_t d2 = hamming_distance(full, a);
            const int64_t delta = static_cast<int64_t>(d2) - static_cast<int64_t>(d);
            REQUIRE(std::abs(delta) <= full.degree(o));
            REQUIRE(((delta - static_cast<int64_t>(full.degree(o))) % 2 + 2) % 2 == 0);
        }
    }
}

TEST_CASE("restriction is monotone", "[property]") {
    std::mt19937_64 rng(5);
    const auto space = build_space(3);
    const Configuration full = Configuration::from_space(space);
    for (int trial = 0; trial < 50; trial++) {
        Assignment a = all_plus(full);
        for (auto &v : a.values) v = (rng() & 1) ? 1 : -1;
        const auto uns = unsatisfied(full, a);
        boost::dynamic_bitset<> big(space->point_count()), small(space->point_count());
        for (uint32_t p = 0; p < space->point_count(); p++) {
            if (rng() % 4 != 0) {
                big.set(p);
                if (rng() % 2) small.set(p);
            }
        }
        const auto outer = restrict_to(uns, big);
        const auto inner = restrict_to(outer, small);
        REQUIRE(std::includes(outer.context_ids.begin(), outer.context_ids.end(), inner.context_ids.begin(),
                              inner.context_ids.end()));
        REQUIRE(inner.context_ids == restrict_to(uns, small).context_ids);
    }
}
