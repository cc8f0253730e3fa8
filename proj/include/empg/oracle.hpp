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


#ifndef EMPG_ORACLE_HPP
#define EMPG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "empg/game.hpp"
#include "empg/moore.hpp"

// Slow reference procedures used to cross-check the solvers.
namespace empg::oracle {

struct RandomGameParams
{
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 6;
    int max_weight = 3;
    double edge_probability = 0.35;
    double player2_probability = 0.0; // 0 gives one-player games
};

// deterministic in seed; every vertex gets at least one successor
GameStructure random_game(std::uint64_t seed, const RandomGameParams &p);

// simple cycles by extending vertex sequences from their smallest vertex
std::vector<Cycle> brute_force_cycles(const GameStructure &g);

// reachable good cycle through singles and pairs of simple cycles in one SCC
bool good_cycle_oracle(const GameStructure &g, std::size_t v0);
// reachable good multicycle through singles and pairs of simple cycles in one SCC
bool good_multicycle_oracle(const GameStructure &g, std::size_t v0);

// whether some a, b > 0 (or >= 0 not both zero when !strict) gives a*u + b*v in the target quadrant
bool cone_meets_quadrant(const Weight2 &u, const Weight2 &v, bool open);

/**
 * Lasso of the unique play of two Moore machines on a one-player game from
 * v0, returned as (prefix length, cycle weight, cycle length) after the
 * joint state repeats.
 */
struct Lasso
{
    std::size_t prefix = 0;
    Weight2 cycle_weight;
    std::size_t cycle_length = 0;
    Integer min_energy; // minimum of w1 over all prefixes, zero included
};
Lasso play_lasso(const GameStructure &g, const MooreStrategy &s1, std::size_t v0);

/**
 * Some player-1 Moore machine with exactly k states on the one-player game
 * g whose play from v0 satisfies energy and MP-inf > 0, by exhaustive
 * enumeration. Without a credit any finite credit is allowed.
 */
std::optional<MooreStrategy> winning_machine_of_size(const GameStructure &g, std::size_t v0, std::size_t k,
                                                     const std::optional<Integer> &credit = std::nullopt);
bool lasso_wins(const Lasso &l, const std::optional<Integer> &credit);

// game of the pseudo-polynomial memory example with parameter w
GameStructure memory_example(int w);
// its cycle v0 -> v1, 2w loops, back, as a Moore machine with 2w+1 states
MooreStrategy memory_example_strategy(const GameStructure &g, int w);

/**
 * Counters of the equivalence suites. Each check adds one instance to its
 * own counter and a message per disagreement.
 */
struct SuiteTally
{
    std::size_t lp_instances = 0, lp_mismatches = 0;
    std::size_t route_instances = 0, route_mismatches = 0, route_unknown = 0;
    std::size_t mp_instances = 0, mp_mismatches = 0;
    std::vector<std::string> failures;

    std::size_t mismatches() const { return lp_mismatches + route_mismatches + mp_mismatches; }
};

// LP good-cycle and good-multicycle detectors against the cycle oracles (one-player games)
void check_lp_detectors(const GameStructure &g, const std::string &name, SuiteTally &t);
// enumeration against the gadget reduction on the strict threshold-0 spec; Unknown is counted apart
void check_routes(const GameStructure &g, const std::string &name, std::int64_t cap, SuiteTally &t);
// MP-inf and MP-sup verdicts for both comparisons
void check_inf_sup(const GameStructure &g, const std::string &name, SuiteTally &t);

} // namespace empg::oracle

#endif
