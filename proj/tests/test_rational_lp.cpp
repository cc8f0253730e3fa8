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

#include "empg/rational_lp.hpp"

using namespace empg::lp;

namespace {

Constraint
row(std::vector<std::pair<std::size_t, Rational>> t, Relation r, Rational rhs)
{
    return Constraint{std::move(t), r, std::move(rhs)};
}

} // namespace

TEST_CASE("textbook maximum")
{
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18
    Problem p;
    p.num_vars = 2;
    p.objective = {3, 5};
    p.constraints = {row({{0, 1}}, Relation::LessEqual, 4), row({{1, 2}}, Relation::LessEqual, 12),
                     row({{0, 3}, {1, 2}}, Relation::LessEqual, 18)};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == 36);
    CHECK(s.x[0] == 2);
    CHECK(s.x[1] == 6);
}

TEST_CASE("exact fractions")
{
    // max x + y, 3x + y <= 1, x + 3y <= 1
    Problem p;
    p.num_vars = 2;
    p.objective = {1, 1};
    p.constraints = {row({{0, 3}, {1, 1}}, Relation::LessEqual, 1), row({{0, 1}, {1, 3}}, Relation::LessEqual, 1)};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == Rational(1, 2));
    CHECK(s.x[0] == Rational(1, 4));
}

TEST_CASE("infeasible and unbounded")
{
    Problem p;
    p.num_vars = 1;
    p.constraints = {row({{0, 1}}, Relation::GreaterEqual, 2), row({{0, 1}}, Relation::LessEqual, 1)};
    CHECK(solve(p).status == Status::Infeasible);

    Problem q;
    q.num_vars = 2;
    q.objective = {1, 0};
    q.constraints = {row({{0, 1}, {1, -1}}, Relation::LessEqual, 1)};
    CHECK(solve(q).status == Status::Unbounded);
}

TEST_CASE("equalities and minimization")
{
    // min x + 2y, x + y = 3, x - y >= -1, x <= 1
    Problem p;
    p.num_vars = 2;
    p.maximize = false;
    p.objective = {1, 2};
    p.constraints = {row({{0, 1}, {1, 1}}, Relation::Equal, 3), row({{0, 1}, {1, -1}}, Relation::GreaterEqual, -1),
                     row({{0, 1}}, Relation::LessEqual, 1)};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == 5);
}

TEST_CASE("degenerate feasibility without objective")
{
    Problem p;
    p.num_vars = 3;
    p.constraints = {row({{0, 1}, {1, -1}}, Relation::Equal, 0), row({{1, 1}, {2, -1}}, Relation::Equal, 0),
                     row({{0, 1}, {1, 1}, {2, 1}}, Relation::Equal, 1)};
    const Solution s = solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.x[2] == Rational(1, 3));
}
