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

#include "empg/reduction.hpp"

#include <map>
#include <queue>
#include <set>

namespace empg {

std::pair<MultiEnergyGame, GadgetMap>
to_energy4(const GameStructure &g)
{
    GadgetMap map;
    map.num_vertices = g.num_vertices();
    map.num_edges = g.num_edges();
    std::vector<VertexSpec> vs = g.vertex_specs();
    for (std::size_t e = 0; e < g.num_edges(); e++) {
        vs.push_back({"e" + std::to_string(e) + ".r", Player::One});
        vs.push_back({"e" + std::to_string(e) + ".s", Player::One});
    }
    std::vector<MultiEdge> es;
    es.reserve(5 * g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); e++) {
        const Edge &ed = g.edge(e);
        const std::int64_t x = to_int64(ed.weight.w1), y = to_int64(ed.weight.w2);
        const std::size_t r = map.r(e), s = map.s(e);
        es.push_back({ed.from, r, {x, y, -1, 1}});
        es.push_back({r, s, {0, -1, 0, 0}});
        es.push_back({s, s, {0, 0, 1, -1}});
        es.push_back({s, r, {0, 0, 0, 0}});
        es.push_back({r, ed.to, {0, 0, 0, 0}});
    }
    return {MultiEnergyGame(std::move(vs), std::move(es), 4, g.initial()), map};
}

MooreStrategy
pull_back_strategy(const MooreStrategy &sp, const GameStructure &g, const GadgetMap &map, std::size_t start)
{
    const std::size_t n = g.num_vertices();
    const std::size_t np = map.num_vertices + 2 * map.num_edges;
    if (sp.num_vertices() != np || map.num_vertices != n) throw GameError("strategy does not belong to the gadget game");

    // state 0 is the initial state; other states remember the gadget memory
    // after reading the previous original vertex, together with that vertex
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::size_t>> key{{npos, npos}};
    auto state_of = [&](std::size_t mu, std::size_t u) {
        auto [it, fresh] = ids.emplace(std::make_pair(mu, u), key.size());
        if (fresh) key.push_back({mu, u});
        return it->second;
    };

    // memory of sp when the play reaches x from state s
    auto arrive = [&](std::size_t s, std::size_t x) -> std::size_t {
        if (s == 0) return sp.initial();
        auto [mu, u] = key[s];
        auto e = g.find_edge(u, x);
        if (!e) return npos;
        std::size_t y = map.r(*e);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        while (!map.original(y)) {
            if (!seen.insert({y, mu}).second) throw GameError("gadget strategy loops forever inside the gadget of edge " + std::to_string(*e));
            const std::size_t next = sp.next(mu, y);
            mu = sp.update(mu, y);
            y = next;
        }
        if (y != x) return npos;
        return mu;
    };

    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> table;
    std::queue<std::pair<std::size_t, std::size_t>> q;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    q.push({0, start});
    seen.insert({0, start});
    while (!q.empty()) {
        auto [s, x] = q.front();
        q.pop();
        const std::size_t mu = arrive(s, x);
        if (mu == npos) throw GameError("pulled-back history leaves the gadget game");
        std::size_t move = npos;
        if (g.owner(x) == Player::One) {
            const std::size_t r = sp.next(mu, x);
            if (r == npos || map.original(r)) throw GameError("gadget strategy does not enter a gadget");
            move = g.edge(map.edge_of_vertex(r)).to;
        }
        const std::size_t s2 = state_of(sp.update(mu, x), x);
        table[{s, x}] = {move, s2};
        auto push = [&](std::size_t y) {
            if (seen.insert({s2, y}).second) q.push({s2, y});
        };
        if (g.owner(x) == Player::One) {
            push(move);
        } else {
            for (std::size_t e : g.out(x)) push(g.edge(e).to);
        }
    }

    MooreStrategy res(Player::One, n, key.size(), 0);
    for (std::size_t s = 0; s < key.size(); s++) {
        for (std::size_t v = 0; v < n; v++) {
            auto it = table.find({s, v});
            if (it != table.end()) {
                res.set_update(s, v, it->second.second);
                if (g.owner(v) == Player::One) res.set_next(s, v, it->second.first);
            } else {
                res.set_update(s, v, s);
                if (g.owner(v) == Player::One) res.set_next(s, v, g.edge(g.out(v).front()).to);
            }
        }
    }
    return res.trimmed(g, start).minimized();
}

} // namespace empg
