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

#include "empg/game.hpp"
#include "empg/json_io.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

TEST_CASE("game document is parsed with sizes and weight bound")
{
    const GameStructure g = parse_game(R"({"vertices":[{"id":"v0","owner":1},{"id":"v1","owner":1}],
        "edges":[{"from":"v0","to":"v0","w":[1,-1]},{"from":"v0","to":"v1","w":[0,-1]},
                 {"from":"v1","to":"v1","w":[-1,3]},{"from":"v1","to":"v0","w":[0,-1]}],"initial":"v0"})");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 4);
    CHECK(g.max_abs_weight() == 3);
    CHECK(g.one_player());
    CHECK(g.vertex("v1") == 1);
}

TEST_CASE("minimal game and malformed documents")
{
    CHECK_NOTHROW(make({1}, {{0, 0, 0, 0}}));
    CHECK_THROWS_WITH_AS(make({1, 1}, {{0, 1, 0, 0}}), doctest::Contains("no outgoing edge"), GameError);
    CHECK_THROWS_AS(make({1}, {{0, 0, 0, 0}, {0, 0, 1, 1}}), GameError);
    CHECK_THROWS_AS(parse_game(R"({"vertices":[{"id":"a","owner":3}],"edges":[],"initial":"a"})"), GameError);
    CHECK_THROWS_AS(parse_game(R"({"vertices":[{"id":"a","owner":1}],"edges":[{"from":"a","to":"b","w":[0,0]}],"initial":"a"})"),
                    GameError);
    CHECK_THROWS_AS(parse_game("{"), GameError);
}

TEST_CASE("big weights survive as strings")
{
    const GameStructure g = parse_game(
        R"({"vertices":[{"id":"a","owner":1}],"edges":[{"from":"a","to":"a","w":["123456789012345678901234567890",-1]}],"initial":"a"})");
    CHECK(g.max_abs_weight() == Integer("123456789012345678901234567890"));
    const GameStructure h = game_from_json(game_to_json(g));
    CHECK(h.edge(0).weight.w1 == g.edge(0).weight.w1);
}

TEST_CASE("threshold normalization")
{
    const GameStructure g = fixtures::two_loops();
    CHECK(normalize_threshold(g, fixtures::strict).first.edge(2).weight == Weight2(-1, 3));
    // -1/2^3 on a dimension-2 weight y gives 8y + 1
    const auto [h, s] = normalize_threshold(g, fixtures::spec(MpKind::Inf, Cmp::Strict, Rational(-1, 8)));
    CHECK(h.edge(2).weight == Weight2(-1, 25));
    CHECK(h.edge(0).weight == Weight2(1, -7));
    CHECK(s.threshold == 0);
    const GameStructure m = make({1, 1}, {{0, 1, 4, -4}, {1, 0, 4, -4}, {1, 1, -1, 1}});
    CHECK(normalize_threshold(m, fixtures::spec(MpKind::Inf, Cmp::Strict, Rational(-1, 8))).first.edge(2).weight ==
          Weight2(-1, 9));
}

TEST_CASE("cycle decomposition of prefixes")
{
    const GameStructure g = fixtures::two_loops();
    auto dec = cycle_decomposition(PlayPrefix(g, {0, 1, 0, 1, 1}));
    REQUIRE(dec.cycles.size() == 2);
    CHECK(dec.stack.vertices == std::vector<std::size_t>{0, 1});
    std::vector<std::size_t> lens{dec.cycles[0].length(), dec.cycles[1].length()};
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<std::size_t>{1, 2});

    dec = cycle_decomposition(PlayPrefix(g, {0, 1}));
    CHECK(dec.cycles.empty());
    CHECK(dec.stack.vertices == std::vector<std::size_t>{0, 1});

    dec = cycle_decomposition(PlayPrefix(g, {0, 0, 0}));
    CHECK(dec.cycles.size() == 2);
    CHECK(dec.stack.vertices == std::vector<std::size_t>{0});
}

TEST_CASE("energy levels and running averages")
{
    const GameStructure g = fixtures::two_loops();
    CHECK(energy_level(PlayPrefix(g, {0, 0, 0}), 1, 2) == 2);
    CHECK(energy_level(PlayPrefix(g, {0, 0, 0}), 2, 0) == 0);
    CHECK(energy_level(PlayPrefix(fixtures::balanced(), {0, 1, 1}), 2, 2) == 0);
    CHECK(running_average(PlayPrefix(g, {0, 0, 0, 1, 1, 1, 0}), 2, 6) == Rational(1, 3));
    CHECK(running_average(PlayPrefix(fixtures::balanced(), {0, 0}), 2, 1) == -1);
    CHECK(running_average(PlayPrefix(make({1}, {{0, 0, 0, 0}}), {0, 0, 0, 0}), 2, 3) == 0);
    CHECK_THROWS_AS(PlayPrefix(make({1, 1}, {{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}}), {1, 0}), GameError);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-1/8") == Rational(-1, 8));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("0") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), GameError);
    CHECK_THROWS_AS(parse_rational("x"), GameError);
}
