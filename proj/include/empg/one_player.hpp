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

#ifndef EMPG_ONE_PLAYER_HPP
#define EMPG_ONE_PLAYER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "empg/cycle_detect.hpp"
#include "empg/moore.hpp"
#include "empg/strategy.hpp"
#include "empg/verdict.hpp"

namespace empg {

Verdict solve_one_player(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec);

std::pair<MooreStrategy, Integer> synthesize_strict(const GameStructure &g, std::size_t v0, const CycleWitness &wit);

/**
 * Round schedule for the non-strict variants. Round Z loops Z*beta+gamma
 * times on C', follows the connector to C, loops Z*alpha times on C and
 * returns to C'. A degenerate schedule loops a single cycle forever.
 */
class ScheduleStrategy : public StrategyHandle
{
public:
    bool degenerate = false;
    Path access;              // from v0 to the anchor of C' (or of the single cycle)
    Cycle c, cp;              // cp is the single cycle when degenerate
    Path to_c, to_cp;         // connectors C' -> C and C -> C'
    Integer alpha, beta, gamma;
    Integer credit;           // exact credit needed by the unique play

    void reset(const GameStructure &g, std::size_t start) override;
    std::size_t choose(std::size_t v) override;
    void observe(std::size_t from, std::size_t to) override;
    std::string kind() const override { return "schedule"; }

    std::uint64_t round() const { return z_; }
    // edge to be taken next
    std::size_t current_edge() const;

    // lower bound for the dim-2 average during round z >= 2, from the round accounting
    Rational average_floor(std::uint64_t z, const Integer &nv, const Integer &maxw) const;

private:
    enum Phase { Access, LoopCp, ToC, LoopC, ToCp };
    void advance();
    void skip_empty();

    const GameStructure *g_ = nullptr;
    Phase phase_ = Access;
    std::uint64_t z_ = 1, loops_ = 0, target_ = 0;
    std::size_t pos_ = 0;
    std::uint64_t a64_ = 0, b64_ = 0, g64_ = 0;
};

ScheduleStrategy synthesize_nonstrict(const GameStructure &g, std::size_t v0, const MulticycleWitness &wit);

// positions k < horizon whose dim-1 level is <= every later level up to horizon
std::vector<std::size_t> local_minima(const PlayPrefix &p, std::size_t horizon);

} // namespace empg

#endif
