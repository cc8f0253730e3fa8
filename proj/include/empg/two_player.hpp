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


#ifndef EMPG_TWO_PLAYER_HPP
#define EMPG_TWO_PLAYER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "empg/game.hpp"
#include "empg/moore.hpp"
#include "empg/verdict.hpp"

namespace empg {

// game where every player-2 vertex with a choice keeps only that edge; all vertices become player-1 owned
GameStructure restrict_player2(const GameStructure &g, const std::vector<std::size_t> &choice);

/**
 * Decides by enumerating memoryless player-2 strategies over the part of
 * the game reachable from v0. On No the certificate is the first spoiling
 * strategy found. Throws GameError above the enumeration bound.
 */
Verdict solve_two_player(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                         std::size_t bound = 1000000);

std::optional<MooreStrategy> spoiling_strategy(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                                               std::size_t bound = 1000000);

// the fixpoint cost grows steeply with the cap in four dimensions
constexpr std::int64_t kMaxDefaultCap = 16;

// (|V| * ||E||)^2 of the normalized game, at most kMaxDefaultCap
std::int64_t default_cap(const GameStructure &g, const ObjectiveSpec &spec);

/**
 * Strict variants through the four-dimensional energy game. Yes carries
 * the pulled-back player-1 strategy, No a memoryless player-2 strategy.
 * max_cap <= 0 selects default_cap.
 */
Verdict solve_strict_pseudo_poly(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                                 std::int64_t max_cap = 0);

enum class Route { Enumerate, Reduce, Auto };

Verdict solve(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, Route route = Route::Auto,
              std::int64_t max_cap = 0, std::size_t bound = 1000000);

std::vector<bool> winning_region(const GameStructure &g, const ObjectiveSpec &spec, std::size_t bound = 1000000);

} // namespace empg

#endif
