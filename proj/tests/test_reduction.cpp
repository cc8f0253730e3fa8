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

#include "empg/graph.hpp"
#include "empg/multi_energy.hpp"
#include "empg/oracle.hpp"
#include "empg/reduction.hpp"
#include "empg/strategy.hpp"
#include "empg/two_player.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

TEST_CASE("gadget sizes")
{
    auto [g4, map] = to_energy4(fixtures::two_loops());
    CHECK(g4.num_vertices() == 10);
    CHECK(g4.num_edges() == 20);
    CHECK(g4.max_abs_weight() == 3);
    CHECK(g4.dim() == 4);
    CHECK(map.r(1) == 4);
    CHECK(map.s(1) == 5);
}

TEST_CASE("gadget of a single zero loop")
{
    auto [g4, map] = to_energy4(make({1}, {{0, 0, 0, 0}}));
    REQUIRE(g4.num_edges() == 5);
    CHECK(g4.edge(0).weight == Vec{0, 0, -1, 1});
    CHECK(g4.edge(0).from == 0);
    CHECK(g4.edge(0).to == map.r(0));
    CHECK(g4.edge(4).to == 0);
}

TEST_CASE("sizes on random games")
{
    for (std::uint64_t seed = 1; seed <= 50; seed++) {
        const GameStructure g = oracle::random_game(seed, {});
        auto [g4, map] = to_energy4(g);
        CHECK(g4.num_vertices() == g.num_vertices() + 2 * g.num_edges());
        CHECK(g4.num_edges() == 5 * g.num_edges());
        CHECK(Integer(g4.max_abs_weight()) == g.max_abs_weight());
    }
}

TEST_CASE("pull-back of a memoryless copy")
{
    const GameStructure g = fixtures::two_loops();
    auto [g4, map] = to_energy4(g);
    // go straight through every gadget: at r choose the exit edge
    MooreStrategy sp(Player::One, g4.num_vertices(), 1);
    for (std::size_t x = 0; x < g4.num_vertices(); x++) {
        sp.set_update(0, x, 0);
        if (x == 0) {
            sp.set_next(0, x, map.r(*g.find_edge(0, 0)));
        } else if (x == 1) {
            sp.set_next(0, x, map.r(*g.find_edge(1, 0)));
        } else if (x == map.r(map.edge_of_vertex(x))) {
            sp.set_next(0, x, g.edge(map.edge_of_vertex(x)).to);
        } else {
            sp.set_next(0, x, map.r(map.edge_of_vertex(x)));
        }
    }
    const MooreStrategy back = pull_back_strategy(sp, g, map, 0);
    CHECK(back.memory_size() == 1);
    CHECK(back.next(0, 0) == 0);
    CHECK(pull_back_strategy(sp, g, map, 1).next(0, 1) == 0);
}

TEST_CASE("gadget strategy pulls back to a strict winner")
{
    const GameStructure g = fixtures::two_loops();
    const Verdict v = solve_strict_pseudo_poly(g, 0, fixtures::strict, 64);
    REQUIRE(v.answer == Answer::Yes);
    const MooreStrategy s = std::get<MooreStrategy>(v.certificate);
    const oracle::Lasso l = oracle::play_lasso(g, s, 0);
    CHECK(l.cycle_weight.w1 >= 0);
    CHECK(l.cycle_weight.w2 >= 1);
    // every simple cycle of the product is good in dimension 2
    const Product p = product(g, s, 0);
    for (const Cycle &c : enumerate_simple_cycles(p.game)) CHECK(weight_of(p.game, c).w2 >= 1);
}

TEST_CASE("balanced game has no strict gadget win")
{
    const Verdict v = solve_strict_pseudo_poly(fixtures::balanced(), 0, fixtures::strict);
    CHECK(v.answer != Answer::Yes);
}
