/*
 * Copyright 2026 The empg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include "empg/cycle_detect.hpp"
#include "empg/oracle.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

TEST_CASE("zero multicycle")
{
    const auto c = zero_multicycle_exists(fixtures::balanced());
    REQUIRE(c.has_value());
    Weight2 w;
    for (std::size_t e = 0; e < c->size(); e++) w += (*c)[e] * fixtures::balanced().edge(e).weight;
    CHECK(w == Weight2(0, 0));
    CHECK_FALSE(zero_multicycle_exists(make({1}, {{0, 0, 1, 0}})).has_value());
    CHECK(zero_multicycle_exists(make({1}, {{0, 0, 0, 0}})).has_value());
}

TEST_CASE("good multicycle")
{
    const auto m = good_multicycle_exists(fixtures::balanced(), 0);
    REQUIRE(m.has_value());
    CHECK(m->total == Weight2(0, 0));
    check_witness(fixtures::balanced(), *m);
    const auto t = good_multicycle_exists(fixtures::two_loops(), 0);
    REQUIRE(t.has_value());
    check_witness(fixtures::two_loops(), *t);
    CHECK_FALSE(good_multicycle_exists(make({1}, {{0, 0, -1, -1}}), 0).has_value());
}

TEST_CASE("good cycle")
{
    const auto w = good_cycle_exists(fixtures::two_loops(), 0);
    REQUIRE(w.has_value());
    CHECK(w->kind == CycleWitness::Kind::TwoCycle);
    CHECK(weight_of(fixtures::two_loops(), w->first) == Weight2(-1, 3));
    CHECK(weight_of(fixtures::two_loops(), w->second) == Weight2(1, -1));
    CHECK(w->a == 4);
    CHECK(w->b == 10);
    check_witness(fixtures::two_loops(), *w);

    CHECK_FALSE(good_cycle_exists(fixtures::balanced(), 0).has_value());
    const auto s = good_cycle_exists(make({1}, {{0, 0, 0, 1}}), 0);
    REQUIRE(s.has_value());
    CHECK(s->kind == CycleWitness::Kind::SimpleGood);
}

TEST_CASE("combination coefficients")
{
    auto [a, b] = combine_coefficients(Weight2(-1, 3), Weight2(1, -1));
    CHECK(a == 4);
    CHECK(b == 10);
    CHECK(a * -1 + b * 1 == 6);
    CHECK(a * 3 - b == 2);
    std::tie(a, b) = combine_coefficients(Weight2(-1, 2), Weight2(1, -1));
    CHECK(a == 3);
    CHECK(b == 5);
    CHECK_THROWS_AS(combine_coefficients(Weight2(-1, 1), Weight2(1, -1)), GameError);
}

TEST_CASE("loop counts")
{
    const auto w = good_cycle_exists(fixtures::two_loops(), 0);
    REQUIRE(w.has_value());
    auto [alpha, beta] = witness_loop_counts(*w, 2, 3);
    CHECK(alpha == 48);
    CHECK(beta == 120);
    // the composite walk must have positive dimension-2 weight
    const Weight2 total = weight_of(fixtures::two_loops(), composite_walk(*w));
    CHECK(total.w1 >= 0);
    CHECK(total.w2 > 0);
}

TEST_CASE("unreachable and acyclic parts are ignored")
{
    // v1 holds a good loop but is unreachable from v0
    const GameStructure g = make({1, 1}, {{0, 0, -1, 0}, {1, 1, 0, 1}});
    CHECK_FALSE(good_cycle_exists(g, 0).has_value());
    CHECK(good_cycle_exists(g, 1).has_value());
    // the only cycle is a self-loop after a one-way edge
    const GameStructure h = make({1, 1}, {{0, 1, 5, 5}, {1, 1, 0, -1}});
    CHECK_FALSE(good_multicycle_exists(h, 0).has_value());
}

TEST_CASE("detectors agree with the cycle oracles on random games")
{
    oracle::RandomGameParams p;
    p.max_vertices = 5;
    for (std::uint64_t seed = 1; seed <= 150; seed++) {
        const GameStructure g = oracle::random_game(seed, p);
        CAPTURE(seed);
        CHECK(good_cycle_exists(g, g.initial()).has_value() == oracle::good_cycle_oracle(g, g.initial()));
        CHECK(good_multicycle_exists(g, g.initial()).has_value() == oracle::good_multicycle_oracle(g, g.initial()));
    }
}
