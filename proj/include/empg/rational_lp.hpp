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

#ifndef EMPG_RATIONAL_LP_HPP
#define EMPG_RATIONAL_LP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace empg::lp {

using Rational = mpq_class;

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint
{
    std::vector<std::pair<std::size_t, Rational>> terms;
    Relation rel;
    Rational rhs;
};

/**
 * max (or min) objective . x  subject to constraints, x >= 0.
 */
struct Problem
{
    std::size_t num_vars = 0;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective; // may be empty: pure feasibility
    bool maximize = true;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution
{
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

// two-phase primal simplex, exact arithmetic, Bland's rule
Solution solve(const Problem &p);

} // namespace empg::lp

#endif
