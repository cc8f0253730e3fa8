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

#include "empg/one_player.hpp"
#include "empg/oracle.hpp"
#include "empg/two_player.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

TEST_CASE("player 2 owning the draining loop wins")
{
    // staying on (1,-1) forever gives mean payoff -1
    for (const auto &s : fixtures::all_specs()) {
        CHECK(solve_two_player(fixtures::two_loops(2), 0, s).answer == Answer::No);
        const auto sp = spoiling_strategy(fixtures::two_loops(2), 0, s);
        REQUIRE(sp.has_value());
        CHECK(sp->next(0, 0) == 0);
    }
    // with v1 given to player 2 instead, the (-1,3) loop is never taken
    const GameStructure g = fixtures::make({1, 2}, {{0, 0, 1, -1}, {0, 1, 0, -1}, {1, 1, -1, 3}, {1, 0, 0, -1}});
    CHECK(solve_two_player(g, 0, fixtures::nonstrict).answer == Answer::No);
}

TEST_CASE("trap vertex spoils every objective")
{
    const GameStructure g = fixtures::trap();
    for (const auto &s : fixtures::all_specs()) {
        const Verdict v = solve_two_player(g, 2, s);
        CHECK(v.answer == Answer::No);
        const auto sp = spoiling_strategy(g, 2, s);
        REQUIRE(sp.has_value());
        CHECK(sp->next(0, 2) == 2);
    }
    const auto win = winning_region(g, fixtures::strict);
    CHECK(win == std::vector<bool>{true, true, false});
}

TEST_CASE("one-player games delegate")
{
    for (const auto &s : fixtures::all_specs()) {
        CHECK(solve_two_player(fixtures::balanced(), 0, s).answer == solve_one_player(fixtures::balanced(), 0, s).answer);
    }
    const auto sp = spoiling_strategy(fixtures::balanced(), 0, fixtures::strict);
    REQUIRE(sp.has_value());
    CHECK_FALSE(spoiling_strategy(fixtures::two_loops(), 0, fixtures::strict).has_value());
    // player 2 owning v0 in the balanced game cannot make it strict-winnable
    CHECK(spoiling_strategy(fixtures::balanced(2), 0, fixtures::strict).has_value());
}

TEST_CASE("reduction route")
{
    CHECK(solve_strict_pseudo_poly(fixtures::two_loops(), 0, fixtures::strict).answer == Answer::Yes);
    CHECK(solve(fixtures::balanced(), 0, fixtures::strict, Route::Reduce).answer != Answer::Yes);
    auto [m, s] = normalize_threshold(oracle::memory_example(4), fixtures::strict);
    CHECK(solve(m, 0, fixtures::strict, Route::Reduce).answer != Answer::Yes);
    CHECK(solve(fixtures::trap(), 2, fixtures::strict, Route::Reduce).answer == Answer::No);
}

TEST_CASE("winning regions")
{
    for (const auto &s : fixtures::all_specs()) {
        CHECK(winning_region(fixtures::two_loops(), s) == std::vector<bool>{true, true});
    }
    CHECK(winning_region(make({1}, {{0, 0, -1, -1}}), fixtures::nonstrict) == std::vector<bool>{false});
}

TEST_CASE("routes agree on small random games")
{
    oracle::SuiteTally t;
    oracle::RandomGameParams p;
    p.max_vertices = 4;
    p.player2_probability = 0.4;
    for (std::uint64_t seed = 1; seed <= 40; seed++) oracle::check_routes(oracle::random_game(seed, p), std::to_string(seed), 8, t);
    CHECK(t.route_mismatches == 0);
    CHECK(t.route_instances == 40);
}

TEST_CASE("enumeration bound")
{
    CHECK_THROWS_AS(solve_two_player(fixtures::trap(), 2, fixtures::strict, 1), GameError);
}
