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

#ifndef EMPG_GRAPH_HPP
#define EMPG_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "empg/game.hpp"
#include "empg/moore.hpp"

namespace empg {

/**
 * Tarjan on a plain adjacency list. Returns the component index of every
 * node; components are numbered in reverse topological order.
 */
std::vector<std::size_t> scc_labels(const std::vector<std::vector<std::size_t>> &adj, std::size_t *count = nullptr);

std::vector<bool> reachable_from(const GameStructure &g, std::size_t v0);
std::vector<bool> reachable_from(const GraphView &g, std::size_t v0);

struct SccDecomposition
{
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> component_of;
    std::vector<bool> reachable; // from the initial vertex of the game

    // true when the component contains at least one edge
    bool nontrivial(const GameStructure &g, std::size_t c) const;
};

SccDecomposition sccs(const GameStructure &g);

struct Subgraph
{
    std::optional<GameStructure> game; // empty when sinks appeared
    std::vector<std::size_t> to_original;
    std::vector<std::size_t> from_original; // npos when dropped
    std::vector<std::size_t> sinks;         // original ids of vertices left without successors
};

Subgraph induced_subgraph(const GameStructure &g, const std::vector<bool> &keep, std::size_t initial);
Subgraph reachable_subgraph(const GameStructure &g, std::size_t v0);

struct Product
{
    GameStructure game;
    std::vector<std::pair<std::size_t, std::size_t>> state; // (vertex, memory) per product vertex
};

// product restricted to pairs reachable from (v0, initial state)
Product product(const GameStructure &g, const MooreStrategy &s, std::size_t v0);

// shortest path by edge count from 'from' to any vertex in targets, inside allowed
std::optional<Path> shortest_path(const GameStructure &g, std::size_t from, const std::vector<bool> &targets,
                                  const std::vector<bool> *allowed = nullptr);

std::vector<Cycle> enumerate_simple_cycles(const GameStructure &g, std::size_t max_count = 1000000);

/**
 * All memoryless strategies of a player, indexed 0 .. count()-1 in mixed
 * radix over the owned vertices. Index ranges may be processed independently.
 */
class MemorylessEnumerator
{
public:
    MemorylessEnumerator(const GameStructure &g, Player player, std::size_t bound = 1000000,
                         const std::vector<bool> *relevant = nullptr);

    std::size_t count() const { return count_; }
    MooreStrategy at(std::size_t index) const;
    std::vector<std::size_t> choice(std::size_t index) const;

private:
    const GameStructure *g_;
    Player player_;
    std::vector<std::size_t> owned_;
    std::size_t count_ = 1;
};

} // namespace empg

#endif
