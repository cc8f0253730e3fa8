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

#ifndef EMPG_MOORE_HPP
#define EMPG_MOORE_HPP

#include <cstddef>
#include <vector>

#include "empg/game.hpp"

namespace empg {

// owner and successor lists, shared by the two game types
struct GraphView
{
    std::vector<Player> owner;
    std::vector<std::vector<std::size_t>> succ;
};

GraphView view(const GameStructure &g);

/**
 * Finite-memory strategy as a Moore machine over a fixed vertex count.
 *
 * The machine is in state m when the play arrives at vertex v. The move
 * proposed at v is next(m, v), and leaving v moves the machine to
 * update(m, v). Both tables are dense, indexed by m * num_vertices + v.
 * next is npos at vertices not owned by the player.
 */
class MooreStrategy
{
public:
    MooreStrategy() = default;
    MooreStrategy(Player player, std::size_t num_vertices, std::size_t num_states, std::size_t initial = 0);

    static MooreStrategy memoryless(const GameStructure &g, Player player, const std::vector<std::size_t> &choice);

    Player player() const { return player_; }
    std::size_t num_vertices() const { return nv_; }
    std::size_t memory_size() const { return ns_; }
    std::size_t initial() const { return init_; }

    std::size_t update(std::size_t m, std::size_t v) const { return upd_[m * nv_ + v]; }
    std::size_t next(std::size_t m, std::size_t v) const { return nxt_[m * nv_ + v]; }
    void set_update(std::size_t m, std::size_t v, std::size_t to) { upd_[m * nv_ + v] = to; }
    void set_next(std::size_t m, std::size_t v, std::size_t to) { nxt_[m * nv_ + v] = to; }

    // throws GameError describing the first inconsistency with g
    void validate(const GameStructure &g) const;

    // restrict to states reachable from the initial state in plays from start
    MooreStrategy trimmed(const GameStructure &g, std::size_t start) const;
    MooreStrategy trimmed(const GraphView &g, std::size_t start) const;
    // merge equivalent states (partition refinement)
    MooreStrategy minimized() const;

    bool operator==(const MooreStrategy &) const = default;

private:
    Player player_ = Player::One;
    std::size_t nv_ = 0, ns_ = 0, init_ = 0;
    std::vector<std::size_t> upd_, nxt_;
};

} // namespace empg

#endif
