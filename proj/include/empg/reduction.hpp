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

#ifndef EMPG_REDUCTION_HPP
#define EMPG_REDUCTION_HPP

#include <utility>
#include <vector>

#include "empg/game.hpp"
#include "empg/moore.hpp"
#include "empg/multi_energy.hpp"

namespace empg {

/**
 * Original vertices keep their indices. Edge k of the original game owns
 * the fresh vertices r = n + 2k and s = n + 2k + 1, and gadget edges
 * 5k .. 5k+4 in the order (v,r), (r,s), (s,s), (s,r), (r,v').
 */
struct GadgetMap
{
    std::size_t num_vertices = 0; // original
    std::size_t num_edges = 0;    // original

    std::size_t r(std::size_t e) const { return num_vertices + 2 * e; }
    std::size_t s(std::size_t e) const { return num_vertices + 2 * e + 1; }
    bool original(std::size_t x) const { return x < num_vertices; }
    // original edge behind a gadget vertex (npos for original vertices)
    std::size_t edge_of_vertex(std::size_t x) const { return original(x) ? npos : (x - num_vertices) / 2; }
    std::size_t edge_of_gadget_edge(std::size_t ge) const { return ge / 5; }
    int role(std::size_t ge) const { return static_cast<int>(ge % 5); }
};

std::pair<MultiEnergyGame, GadgetMap> to_energy4(const GameStructure &g);

/**
 * Player-1 strategy on g answering what sPrime answers on the gadget history
 * with the r/s excursions sPrime itself chooses. Throws GameError when
 * sPrime loops forever inside a gadget. The result is trimmed to states
 * reachable from start and minimized.
 */
MooreStrategy pull_back_strategy(const MooreStrategy &sPrime, const GameStructure &g, const GadgetMap &map, std::size_t start);

} // namespace empg

#endif
