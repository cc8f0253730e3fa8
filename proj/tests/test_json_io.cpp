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

#include "empg/json_io.hpp"
#include "empg/one_player.hpp"
#include "fixtures.hpp"

using namespace empg;

TEST_CASE("parse errors carry a location")
{
    CHECK_THROWS_WITH_AS(parse_json("{\n  \"a\": ]"), doctest::Contains("line 2"), GameError);
    CHECK_THROWS_WITH_AS(parse_game(R"({"vertices":[{"id":"a","owner":1}],"edges":[{"from":"a","to":"a","w":[0]}],"initial":"a"})"),
                         doctest::Contains("edges[0].w"), GameError);
}

TEST_CASE("game round trip")
{
    const GameStructure g = fixtures::trap();
    const Json j = game_to_json(g);
    const GameStructure h = game_from_json(j);
    CHECK(dump(game_to_json(h)) == dump(j));
    CHECK(h.initial() == 2);
    CHECK(h.owner(2) == Player::Two);
}

TEST_CASE("integers switch to strings beyond 64 bits")
{
    CHECK(integer_json(Integer(5)).is_number());
    CHECK(integer_json(Integer("100000000000000000000")).is_string());
    CHECK(integer_from_json(Json("-100000000000000000000"), "x") == Integer("-100000000000000000000"));
    CHECK_THROWS_AS(integer_from_json(Json("1.5"), "x"), GameError);
}

TEST_CASE("strategy round trip")
{
    const GameStructure g = fixtures::two_loops();
    const Verdict v = solve_one_player(g, 0, fixtures::strict);
    const auto s = synthesize_strict(g, 0, std::get<CycleWitness>(v.certificate)).first;
    const Json j = strategy_to_json(s, g, "test");
    CHECK(j["route"] == "test");
    const MooreStrategy t = strategy_from_json(j, g);
    CHECK(dump(strategy_to_json(t, g, "test")) == dump(j));
}

TEST_CASE("schedule round trip")
{
    const GameStructure g = fixtures::balanced();
    const Verdict v = solve_one_player(g, 0, fixtures::nonstrict);
    const ScheduleStrategy s = synthesize_nonstrict(g, 0, std::get<MulticycleWitness>(v.certificate));
    const Json j = schedule_to_json(s, g, "test");
    CHECK(dump(schedule_to_json(schedule_from_json(j, g), g, "test")) == dump(j));
}

TEST_CASE("objectives and verdicts")
{
    const ObjectiveSpec s = fixtures::spec(MpKind::Sup, Cmp::NonStrict, Rational(-1, 4));
    const Json j = objective_json(s);
    CHECK(j["mp"] == "sup");
    CHECK(j["cmp"] == "ge");
    const ObjectiveSpec t = objective_from_json(j);
    CHECK(t.threshold == Rational(-1, 4));
    const Verdict v = solve_one_player(fixtures::two_loops(), 0, fixtures::strict);
    const Json vj = verdict_to_json(v, fixtures::two_loops(), 0, fixtures::strict);
    CHECK(vj["route"] == "one-player/good-cycle-lp");
    CHECK(vj["answer"] == "Yes");
}
