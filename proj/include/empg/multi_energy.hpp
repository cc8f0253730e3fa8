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

#ifndef EMPG_MULTI_ENERGY_HPP
#define EMPG_MULTI_ENERGY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "empg/game.hpp"
#include "empg/moore.hpp"
#include "empg/verdict.hpp"

namespace empg {

using Vec = std::vector<std::int64_t>;

struct MultiEdge
{
    std::size_t from;
    std::size_t to;
    Vec weight;
};

/**
 * d-dimensional energy game. Same shape rules as GameStructure, weights
 * are machine integers (gadget games never grow weights).
 */
class MultiEnergyGame
{
public:
    MultiEnergyGame() = default;
    MultiEnergyGame(std::vector<VertexSpec> vertices, std::vector<MultiEdge> edges, std::size_t dim, std::size_t initial = 0);

    std::size_t dim() const { return dim_; }
    std::size_t num_vertices() const { return ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::int64_t max_abs_weight() const { return max_abs_; }

    const std::string &id(std::size_t v) const { return ids_[v]; }
    Player owner(std::size_t v) const { return owners_[v]; }
    std::size_t initial() const { return initial_; }
    const std::vector<MultiEdge> &edges() const { return edges_; }
    const MultiEdge &edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::size_t> &out(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t> &in(std::size_t v) const { return in_[v]; }
    std::optional<std::size_t> find(const std::string &id) const;
    std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;

    bool one_player() const;
    GraphView graph_view() const;
    std::vector<VertexSpec> vertex_specs() const;

private:
    std::size_t dim_ = 1;
    std::vector<std::string> ids_;
    std::vector<Player> owners_;
    std::vector<MultiEdge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::pair<std::string, std::size_t>> index_; // sorted by id
    std::int64_t max_abs_ = 0;
    std::size_t initial_ = 0;
};

/**
 * Pareto-minimal credit vectors per vertex, each antichain stored flat
 * (k vectors of length dim) in lexicographic order.
 */
struct CreditAssignment
{
    std::size_t dim = 1;
    Vec cap; // per dimension
    std::vector<Vec> per_vertex;

    std::size_t size(std::size_t v) const { return per_vertex[v].size() / dim; }
    Vec element(std::size_t v, std::size_t i) const;
    bool winning(std::size_t v) const { return !per_vertex[v].empty(); }
    // smallest first coordinate over the antichain at v
    std::optional<std::int64_t> min_first(std::size_t v) const;
    // whether credit c is covered by some element at v
    bool covers(std::size_t v, const Vec &c) const;
};

struct EnergySolution
{
    std::vector<bool> winning;
    CreditAssignment credits;
    /**
     * Memory: state 0 is the initial state, other states are (vertex,
     * element) pairs. From any winning start vertex v the machine keeps
     * every dimension nonnegative with credit element(v, 0).
     */
    MooreStrategy strategy;
};

/**
 * Greatest fixpoint of the controllable predecessor with credits capped at
 * cap. With a stop vertex the iteration ends as soon as that vertex has no
 * credit left, leaving an over-approximation elsewhere.
 */
CreditAssignment minimal_credit_energy(const MultiEnergyGame &meg, std::int64_t cap, std::size_t stop = npos);
CreditAssignment minimal_credit_energy(const MultiEnergyGame &meg, const Vec &cap, std::size_t stop = npos);
// without a stop vertex, or when the stop vertex wins, the strategy is complete
EnergySolution solve_unknown_credit(const MultiEnergyGame &meg, std::int64_t cap, std::size_t stop = npos);
EnergySolution solve_unknown_credit(const MultiEnergyGame &meg, const Vec &cap, std::size_t stop = npos);

struct EnergyCycle
{
    std::vector<Integer> multiplicity; // per edge, support strongly connected
    std::vector<std::size_t> walk;     // closed walk realizing multiplicity, empty when too long
    std::vector<Integer> weight;
};

std::optional<EnergyCycle> one_player_energy_check(const MultiEnergyGame &meg, std::size_t v0);

// keep only the chosen edge at every vertex of player p with a choice
MultiEnergyGame restrict_choices(const MultiEnergyGame &meg, Player p, const std::vector<std::size_t> &choice);

// memoryless player-2 strategy read off a fixpoint, preferring successors where player 1 loses
std::vector<std::size_t> extract_spoiler(const MultiEnergyGame &meg, const CreditAssignment &credits);

struct EnergyDecision
{
    Answer answer = Answer::Unknown;
    std::int64_t cap = 0;                 // cap of the last fixpoint computed
    EnergySolution solution;              // fixpoint at that cap
    std::vector<std::size_t> spoiler;     // player-2 choices certifying No
};

/**
 * Memoryless player-2 strategy leaving no reachable nonnegative cycle,
 * searched from start by repairing counterexample cycles. At most budget
 * candidates are checked; tried persists across calls.
 */
std::optional<std::vector<std::size_t>> search_spoiler(const MultiEnergyGame &meg, std::size_t v0,
                                                       std::vector<std::size_t> start, std::size_t budget,
                                                       std::set<std::vector<std::size_t>> &tried);

/**
 * Tri-state unknown-credit decision at v0: Yes from the capped fixpoint,
 * No once a memoryless player-2 strategy is certified by the cycle check,
 * Unknown otherwise. Caps double from start_cap (default 1) up to max_cap.
 */
EnergyDecision decide_unknown_credit(const MultiEnergyGame &meg, std::size_t v0, std::int64_t max_cap,
                                     std::int64_t start_cap = 0, std::size_t spoiler_budget = 64);

} // namespace empg

#endif
