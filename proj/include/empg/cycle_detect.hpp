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

#ifndef EMPG_CYCLE_DETECT_HPP
#define EMPG_CYCLE_DETECT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "empg/game.hpp"

namespace empg {

// nonnegative integer multiplicity per edge of the game
using Circulation = std::vector<Integer>;

/**
 * Two cycles sharing an SCC together with anchor vertices. first starts at
 * the anchor where to_second leaves, second starts where to_second arrives,
 * and to_first leads back from second's anchor to first's anchor.
 */
struct CyclePair
{
    Cycle first, second;
    Path to_second, to_first;
};

struct CycleWitness
{
    enum class Kind { SimpleGood, TwoCycle };

    Kind kind = Kind::SimpleGood;
    Cycle first;  // the good cycle, or C with weight (-x, y)
    Cycle second; // C' with weight (x', -y'), TwoCycle only
    Path to_second, to_first;
    Integer a, b;         // combination coefficients
    Integer alpha, beta;  // loop counts
    Circulation flow;     // the optimal circulation the witness was read from
};

struct MulticycleWitness
{
    enum class Kind { SingleCycle, TwoCycle, Flow };

    Kind kind = Kind::SingleCycle;
    std::vector<Cycle> cycles;          // SingleCycle: one; TwoCycle: C then C'
    std::vector<Integer> multiplicity;  // per entry of cycles
    Circulation flow;                   // integer circulation with total weight >= (0,0)
    Weight2 total;                      // weight of flow
};

std::optional<Circulation> zero_multicycle_exists(const GameStructure &g);
std::optional<MulticycleWitness> good_multicycle_exists(const GameStructure &g, std::size_t v0);
std::optional<CycleWitness> good_cycle_exists(const GameStructure &g, std::size_t v0);

/**
 * For wC = (-x, y) and wC' = (x', -y') with x' y - x y' > 0 returns
 * a = x x' + y y' and b = x^2 + y^2.
 */
std::pair<Integer, Integer> combine_coefficients(const Weight2 &wC, const Weight2 &wCp);
std::pair<Integer, Integer> witness_loop_counts(const CycleWitness &wit, const Integer &nv, const Integer &maxw);

// throws GameError if a field of the witness is inconsistent with g
void check_witness(const GameStructure &g, const CycleWitness &wit);
void check_witness(const GameStructure &g, const MulticycleWitness &wit);

// decomposition of a circulation into simple cycles, deterministic order
std::vector<std::pair<Cycle, Rational>> peel_cycles(const GameStructure &g, std::vector<Rational> flow);

// anchors and connecting paths for two cycles in one SCC, minimizing total connector length
CyclePair connect_cycles(const GameStructure &g, const Cycle &c, const Cycle &cp);

// closed walk of the composite cycle: alpha times first, to_second, beta times second, to_first
std::vector<std::size_t> composite_walk(const CycleWitness &wit);

} // namespace empg

#endif
