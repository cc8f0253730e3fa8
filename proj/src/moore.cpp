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

#include "empg/moore.hpp"

#include <map>
#include <queue>

namespace empg {

MooreStrategy::MooreStrategy(Player player, std::size_t num_vertices, std::size_t num_states, std::size_t initial)
    : player_(player), nv_(num_vertices), ns_(num_states), init_(initial),
      upd_(num_vertices * num_states, 0), nxt_(num_vertices * num_states, npos)
{
    if (num_states == 0) throw GameError("Moore machine needs at least one state");
    if (initial >= num_states) throw GameError("initial state out of range");
}

MooreStrategy
MooreStrategy::memoryless(const GameStructure &g, Player player, const std::vector<std::size_t> &choice)
{
    MooreStrategy s(player, g.num_vertices(), 1, 0);
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (g.owner(v) != player) continue;
        std::size_t to = v < choice.size() ? choice[v] : npos;
        if (to == npos) to = g.edge(g.out(v).front()).to;
        s.set_next(0, v, to);
    }
    return s;
}

void
MooreStrategy::validate(const GameStructure &g) const
{
    if (nv_ != g.num_vertices()) throw GameError("strategy vertex count does not match game");
    for (std::size_t m = 0; m < ns_; m++) {
        for (std::size_t v = 0; v < nv_; v++) {
            if (update(m, v) >= ns_) throw GameError("update leaves the state space");
            const std::size_t to = next(m, v);
            if (g.owner(v) == player_) {
                if (to == npos || !g.find_edge(v, to)) {
                    throw GameError("next move at (" + std::to_string(m) + ", " + g.id(v) + ") is not an edge");
                }
            } else if (to != npos) {
                throw GameError("next move defined at opponent vertex " + g.id(v));
            }
        }
    }
}

GraphView
view(const GameStructure &g)
{
    GraphView gv;
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        gv.owner.push_back(g.owner(v));
        gv.succ.emplace_back();
        for (std::size_t e : g.out(v)) gv.succ.back().push_back(g.edge(e).to);
    }
    return gv;
}

MooreStrategy
MooreStrategy::trimmed(const GameStructure &g, std::size_t start) const
{
    return trimmed(view(g), start);
}

MooreStrategy
MooreStrategy::trimmed(const GraphView &g, std::size_t start) const
{
    // explore (vertex, state) pairs reachable in plays consistent with the machine
    std::vector<char> seen(nv_ * ns_, 0);
    std::vector<std::size_t> order;
    std::vector<std::size_t> renum(ns_, npos);
    std::queue<std::pair<std::size_t, std::size_t>> q;
    auto visit = [&](std::size_t v, std::size_t m) {
        if (seen[m * nv_ + v]) return;
        seen[m * nv_ + v] = 1;
        if (renum[m] == npos) {
            renum[m] = order.size();
            order.push_back(m);
        }
        q.push({v, m});
    };
    visit(start, init_);
    while (!q.empty()) {
        auto [v, m] = q.front();
        q.pop();
        const std::size_t m2 = update(m, v);
        if (g.owner[v] == player_) {
            visit(next(m, v), m2);
        } else {
            for (std::size_t w : g.succ[v]) visit(w, m2);
        }
    }
    MooreStrategy r(player_, nv_, order.size(), 0);
    for (std::size_t i = 0; i < order.size(); i++) {
        const std::size_t m = order[i];
        for (std::size_t v = 0; v < nv_; v++) {
            const std::size_t u = renum[update(m, v)];
            r.set_update(i, v, u == npos ? i : u);
            r.set_next(i, v, next(m, v));
        }
    }
    return r;
}

MooreStrategy
MooreStrategy::minimized() const
{
    // Moore-style refinement: start from classes by next-move rows
    std::vector<std::size_t> cls(ns_);
    {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        for (std::size_t m = 0; m < ns_; m++) {
            std::vector<std::size_t> row(nxt_.begin() + static_cast<std::ptrdiff_t>(m * nv_),
                                         nxt_.begin() + static_cast<std::ptrdiff_t>((m + 1) * nv_));
            cls[m] = ids.emplace(std::move(row), ids.size()).first->second;
        }
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> ncls(ns_);
        for (std::size_t m = 0; m < ns_; m++) {
            std::vector<std::size_t> key;
            key.reserve(nv_ + 1);
            key.push_back(cls[m]);
            for (std::size_t v = 0; v < nv_; v++) key.push_back(cls[update(m, v)]);
            ncls[m] = ids.emplace(std::move(key), ids.size()).first->second;
        }
        cls.swap(ncls);
        if (ids.size() == count) break;
        count = ids.size();
    }
    // renumber so that the initial state's class comes first
    std::vector<std::size_t> renum(count, npos), rep(count, npos);
    std::size_t k = 0;
    renum[cls[init_]] = k++;
    rep[cls[init_]] = init_;
    for (std::size_t m = 0; m < ns_; m++) {
        if (renum[cls[m]] == npos) {
            renum[cls[m]] = k++;
            rep[cls[m]] = m;
        }
    }
    MooreStrategy r(player_, nv_, count, 0);
    for (std::size_t c = 0; c < count; c++) {
        const std::size_t m = rep[c];
        for (std::size_t v = 0; v < nv_; v++) {
            r.set_update(renum[c], v, renum[cls[update(m, v)]]);
            r.set_next(renum[c], v, next(m, v));
        }
    }
    return r;
}

} // namespace empg
