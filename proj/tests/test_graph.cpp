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


#include <algorithm>

#include <doctest.h>

#include "empg/graph.hpp"
#include "empg/moore.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

TEST_CASE("reachable subgraph")
{
    const GameStructure g = fixtures::two_loops();
    CHECK(reachable_subgraph(g, 0).game->num_vertices() == 2);

    const GameStructure iso = make({1, 1}, {{0, 0, 0, 0}, {1, 1, 0, 0}});
    const Subgraph s = reachable_subgraph(iso, 0);
    CHECK(s.game->num_vertices() == 1);
    CHECK(s.from_original[1] == npos);

    const GameStructure chain = make({1, 1}, {{0, 1, 0, 0}, {1, 1, 0, 0}});
    CHECK(reachable_subgraph(chain, 0).game->num_vertices() == 2);
}

TEST_CASE("induced subgraph reports sinks")
{
    const GameStructure chain = make({1, 1}, {{0, 1, 0, 0}, {1, 1, 0, 0}});
    const Subgraph s = induced_subgraph(chain, {true, false}, 0);
    CHECK_FALSE(s.game.has_value());
    CHECK(s.sinks == std::vector<std::size_t>{0});
}

TEST_CASE("strongly connected components")
{
    CHECK(sccs(fixtures::two_loops()).components.size() == 1);
    const SccDecomposition d = sccs(make({1, 1}, {{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}));
    CHECK(d.components.size() == 2);
    CHECK(d.component_of[0] != d.component_of[1]);
    CHECK(sccs(make({1}, {{0, 0, 0, 0}})).components.size() == 1);
    const SccDecomposition t = sccs(make({1, 1}, {{0, 1, 0, 0}, {1, 1, 0, 0}}));
    CHECK_FALSE(t.nontrivial(make({1, 1}, {{0, 1, 0, 0}, {1, 1, 0, 0}}), t.component_of[0]));
}

TEST_CASE("product with a strategy")
{
    const GameStructure g = fixtures::balanced();
    const MooreStrategy stay = MooreStrategy::memoryless(g, Player::One, {0, 1});
    const Product p = product(g, stay, 0);
    CHECK(p.game.num_vertices() == 1);
    REQUIRE(p.game.num_edges() == 1);
    CHECK(p.game.edge(0).weight == Weight2(1, -1));

    const MooreStrategy all = MooreStrategy::memoryless(g, Player::One, {1, 0});
    CHECK(product(g, all, 0).game.num_vertices() == 2);

    MooreStrategy three(Player::One, 2, 3);
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t v = 0; v < 2; v++) {
            three.set_update(m, v, (m + 1) % 3);
            three.set_next(m, v, v == 0 ? (m == 2 ? 1 : 0) : (m == 2 ? 0 : 1));
        }
    }
    three.validate(g);
    CHECK(product(g, three, 0).game.num_vertices() <= 6);
}

TEST_CASE("simple cycles")
{
    CHECK(enumerate_simple_cycles(fixtures::two_loops()).size() == 3);
    CHECK(enumerate_simple_cycles(make({1, 1}, {{0, 1, 0, 0}, {1, 1, 0, 0}})).size() == 1);
    // complete digraph on 3 vertices with self-loops: 3 + 3 + 2
    CHECK(enumerate_simple_cycles(make({1, 1, 1}, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0},
                                                   {1, 2, 0, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}, {2, 2, 0, 0}}))
              .size() == 8);
}

TEST_CASE("memoryless strategy enumeration")
{
    CHECK(MemorylessEnumerator(fixtures::two_loops(), Player::Two).count() == 1);
    const GameStructure g = make({2, 1, 1, 2},
                                 {{0, 1, 0, 0}, {0, 2, 0, 0}, {0, 3, 0, 0}, {1, 1, 0, 0}, {2, 2, 0, 0}, {3, 0, 0, 0}, {3, 1, 0, 0}});
    CHECK(MemorylessEnumerator(g, Player::Two).count() == 6);
    const GameStructure h = make({2, 1}, {{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}});
    const MemorylessEnumerator en(h, Player::Two);
    CHECK(en.count() == 2);
    CHECK(en.choice(0) != en.choice(1));
}

TEST_CASE("moore machines trim and minimize")
{
    const GameStructure g = fixtures::balanced();
    MooreStrategy s(Player::One, 2, 4);
    for (std::size_t m = 0; m < 4; m++) {
        for (std::size_t v = 0; v < 2; v++) {
            s.set_update(m, v, m == 3 ? 3 : (m + 1) % 2);
            s.set_next(m, v, 0);
        }
    }
    const MooreStrategy t = s.trimmed(g, 0);
    CHECK(t.memory_size() <= 2);
    CHECK(t.minimized().memory_size() == 1);
    MooreStrategy bad = s;
    bad.set_next(0, 1, 1);
    CHECK_NOTHROW(bad.validate(g));
    bad.set_next(0, 0, 7);
    CHECK_THROWS_AS(bad.validate(g), GameError);
}
