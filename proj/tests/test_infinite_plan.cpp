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

#include "empg/infinite_plan.hpp"
#include "empg/simulator.hpp"
#include "fixtures.hpp"

using namespace empg;
using fixtures::make;

namespace {

struct Idle : StrategyHandle
{
    void reset(const GameStructure &, std::size_t) override {}
    std::size_t choose(std::size_t) override { throw GameError("no player-2 vertex"); }
    void observe(std::size_t, std::size_t) override {}
    std::string kind() const override { return "idle"; }
};

} // namespace

TEST_CASE("plan on the balanced game")
{
    const GameStructure g = fixtures::balanced();
    InfiniteStrategyPlan p = InfiniteStrategyPlan::build(g, 0, fixtures::nonstrict);
    CHECK(p.winning_set() == std::vector<bool>{true, true});
    CHECK(p.d0() == p.kappa() * p.gamma() + p.level(1).credit[0]);
    Idle idle;
    SimulationOptions opt;
    const TraceReport r = simulate(g, 0, p, idle, 3000, p.d0(), opt);
    CHECK_FALSE(r.first_violation.has_value());
    CHECK(p.current_level() >= 2);
    CHECK(p.staircase_violations() == 0);
    CHECK(p.delta_violations() == 0);
    for (const PlanSwitch &s : p.switches()) CHECK(s.delta >= 0);
}

TEST_CASE("zero cycle settles at once")
{
    const GameStructure g = make({1}, {{0, 0, 0, 0}});
    const InfiniteStrategyPlan p = InfiniteStrategyPlan::build(g, 0, fixtures::nonstrict);
    CHECK(p.kappa() == 1);
    CHECK(p.gamma() == 0);
    CHECK(p.d0() == p.level(1).credit[0]);
}

TEST_CASE("strict winner keeps its first level")
{
    const GameStructure g = fixtures::two_loops();
    InfiniteStrategyPlan p = InfiniteStrategyPlan::build(g, 0, fixtures::nonstrict);
    Idle idle;
    const TraceReport r = simulate(g, 0, p, idle, 2000, p.d0());
    CHECK_FALSE(r.first_violation.has_value());
    CHECK(p.staircase_violations() == 0);
}

TEST_CASE("fresh plan starts with the first level")
{
    const GameStructure g = fixtures::balanced();
    InfiniteStrategyPlan p = InfiniteStrategyPlan::build(g, 0, fixtures::nonstrict);
    p.reset(g, 0);
    const PlanLevel &l1 = p.level(1);
    CHECK(p.choose(0) == l1.strategy[0].next(l1.strategy[0].initial(), 0));
    CHECK(p.current_level() == 1);
}

TEST_CASE("losing start is rejected")
{
    CHECK_THROWS_AS(InfiniteStrategyPlan::build(make({1}, {{0, 0, -1, 0}}), 0, fixtures::nonstrict), GameError);
}

TEST_CASE("plan against player 2")
{
    // player 2 at v2 may loop through either side
    const GameStructure g = make({1, 1, 2}, {{0, 0, 1, -1}, {0, 2, 0, 0}, {1, 1, -1, 1}, {1, 2, 0, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}}, 2);
    InfiniteStrategyPlan p = InfiniteStrategyPlan::build(g, 2, fixtures::nonstrict);
    RandomHandle spoiler(5);
    const TraceReport r = simulate(g, 2, p, spoiler, 5000, p.d0());
    CHECK_FALSE(r.first_violation.has_value());
    CHECK(p.delta_violations() == 0);
}
