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


#ifndef EMPG_SIMULATOR_HPP
#define EMPG_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "empg/game.hpp"
#include "empg/strategy.hpp"

namespace empg {

struct SimulationOptions
{
    std::uint64_t stride = 64;        // running averages are sampled every stride steps and at the end
    std::size_t max_violations = 64;  // listed; all are counted
    bool keep_vertices = true;
    bool keep_energy = true;
};

struct TraceLasso
{
    std::uint64_t prefix = 0; // steps before the cycle starts
    std::uint64_t period = 0;
    Weight2 cycle_weight;
    Rational average; // dimension 2 over the cycle; inf and sup coincide
};

struct TraceViolation
{
    std::uint64_t step = 0; // number of edges played
    std::string what;
};

struct TraceReport
{
    std::size_t start = npos;
    std::uint64_t steps = 0;
    Integer credit;
    std::vector<std::size_t> vertices; // steps + 1 entries when kept
    std::vector<Integer> energy;       // credit + w1(prefix), steps + 1 entries when kept
    std::vector<std::pair<std::uint64_t, Rational>> averages;
    Weight2 total;
    Integer min_energy;
    std::optional<std::uint64_t> first_violation;
    std::uint64_t violation_count = 0;
    std::vector<TraceViolation> violations;
    // only when both strategies expose their memory and the joint state repeated
    std::optional<TraceLasso> lasso;
};

/**
 * Plays exactly steps edges from v0. Each player is asked at its own
 * vertices; both observe every edge. Throws GameError naming the recent
 * history when a strategy proposes a move that is not an edge.
 */
TraceReport simulate(const GameStructure &g, std::size_t v0, StrategyHandle &s1, StrategyHandle &s2,
                     std::uint64_t steps, const Integer &credit, const SimulationOptions &options = {});

enum class ObjectiveStatus { Satisfied, Violated };

inline const char *
to_string(ObjectiveStatus s)
{
    return s == ObjectiveStatus::Satisfied ? "Satisfied" : "Violated";
}

/**
 * Exact verdict for the eventually periodic play of a report: energy holds
 * iff the prefix never went negative and the cycle has w1 >= 0; the
 * mean-payoff part compares the cycle average with the threshold.
 */
ObjectiveStatus check_lasso_objective(const TraceReport &report, const ObjectiveSpec &spec);

} // namespace empg

#endif
