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

#include "empg/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace empg {

std::vector<std::size_t>
scc_labels(const std::vector<std::vector<std::size_t>> &adj, std::size_t *count)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
    std::vector<std::size_t> stack;
    std::vector<char> onstack(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> call; // (node, next child slot)
    std::size_t counter = 0, ncomp = 0;

    for (std::size_t root = 0; root < n; root++) {
        if (index[root] != npos) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        while (!call.empty()) {
            auto &[v, slot] = call.back();
            if (slot < adj[v].size()) {
                const std::size_t w = adj[v][slot++];
                if (index[w] == npos) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onstack[w] = 0;
                    comp[w] = ncomp;
                } while (w != done);
                ncomp++;
            }
        }
    }
    if (count) *count = ncomp;
    return comp;
}

std::vector<bool>
reachable_from(const GraphView &g, std::size_t v0)
{
    std::vector<bool> seen(g.succ.size(), false);
    std::vector<std::size_t> todo{v0};
    seen[v0] = true;
    while (!todo.empty()) {
        const std::size_t v = todo.back();
        todo.pop_back();
        for (std::size_t w : g.succ[v]) {
            if (!seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<bool>
reachable_from(const GameStructure &g, std::size_t v0)
{
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<std::size_t> todo{v0};
    seen[v0] = true;
    while (!todo.empty()) {
        const std::size_t v = todo.back();
        todo.pop_back();
        for (std::size_t e : g.out(v)) {
            const std::size_t w = g.edge(e).to;
            if (!seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    }
    return seen;
}

bool
SccDecomposition::nontrivial(const GameStructure &g, std::size_t c) const
{
    for (std::size_t v : components[c]) {
        for (std::size_t e : g.out(v)) {
            if (component_of[g.edge(e).to] == c) return true;
        }
    }
    return false;
}

SccDecomposition
sccs(const GameStructure &g)
{
    std::vector<std::vector<std::size_t>> adj(g.num_vertices());
    for (const Edge &e : g.edges()) adj[e.from].push_back(e.to);
    SccDecomposition d;
    std::size_t count = 0;
    d.component_of = scc_labels(adj, &count);
    d.components.assign(count, {});
    for (std::size_t v = 0; v < g.num_vertices(); v++) d.components[d.component_of[v]].push_back(v);
    d.reachable = reachable_from(g, g.initial());
    return d;
}

Subgraph
induced_subgraph(const GameStructure &g, const std::vector<bool> &keep, std::size_t initial)
{
    Subgraph s;
    s.from_original.assign(g.num_vertices(), npos);
    std::vector<VertexSpec> vs;
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (!keep[v]) continue;
        s.from_original[v] = s.to_original.size();
        s.to_original.push_back(v);
        vs.push_back({g.id(v), g.owner(v)});
    }
    std::vector<Edge> es;
    std::vector<bool> has_out(g.num_vertices(), false);
    for (const Edge &e : g.edges()) {
        if (keep[e.from] && keep[e.to]) {
            es.push_back({s.from_original[e.from], s.from_original[e.to], e.weight});
            has_out[e.from] = true;
        }
    }
    for (std::size_t v : s.to_original) {
        if (!has_out[v]) s.sinks.push_back(v);
    }
    if (s.sinks.empty() && !vs.empty()) {
        const std::size_t init = initial < g.num_vertices() && keep[initial] ? s.from_original[initial] : 0;
        s.game.emplace(std::move(vs), std::move(es), init);
    }
    return s;
}

Subgraph
reachable_subgraph(const GameStructure &g, std::size_t v0)
{
    return induced_subgraph(g, reachable_from(g, v0), v0);
}

Product
product(const GameStructure &g, const MooreStrategy &s, std::size_t v0)
{
    Product p;
    std::unordered_map<std::size_t, std::size_t> idx; // key m * n + v
    const std::size_t n = g.num_vertices();
    std::vector<VertexSpec> vs;
    std::queue<std::size_t> q;
    auto get = [&](std::size_t v, std::size_t m) {
        auto [it, fresh] = idx.emplace(m * n + v, p.state.size());
        if (fresh) {
            p.state.push_back({v, m});
            vs.push_back({g.id(v) + "@" + std::to_string(m), g.owner(v)});
            q.push(it->second);
        }
        return it->second;
    };
    get(v0, s.initial());
    std::vector<Edge> es;
    while (!q.empty()) {
        const std::size_t x = q.front();
        q.pop();
        auto [v, m] = p.state[x];
        const std::size_t m2 = s.update(m, v);
        if (g.owner(v) == s.player()) {
            const std::size_t to = s.next(m, v);
            auto e = g.find_edge(v, to);
            if (!e) throw GameError("strategy proposes a non-edge at " + g.id(v));
            const std::size_t y = get(to, m2);
            es.push_back({x, y, g.edge(*e).weight});
        } else {
            for (std::size_t e : g.out(v)) {
                const std::size_t y = get(g.edge(e).to, m2);
                es.push_back({x, y, g.edge(e).weight});
            }
        }
    }
    p.game = GameStructure(std::move(vs), std::move(es), 0);
    return p;
}

std::optional<Path>
shortest_path(const GameStructure &g, std::size_t from, const std::vector<bool> &targets, const std::vector<bool> *allowed)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> via(n, npos);
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    seen[from] = true;
    q.push(from);
    std::size_t hit = npos;
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        if (targets[v]) {
            hit = v;
            break;
        }
        for (std::size_t e : g.out(v)) {
            const std::size_t w = g.edge(e).to;
            if (seen[w] || (allowed && !(*allowed)[w])) continue;
            seen[w] = true;
            via[w] = e;
            q.push(w);
        }
    }
    if (hit == npos) return std::nullopt;
    Path p;
    for (std::size_t v = hit; v != from; v = g.edge(via[v]).from) {
        p.vertices.push_back(v);
        p.edges.push_back(via[v]);
    }
    p.vertices.push_back(from);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

std::vector<Cycle>
enumerate_simple_cycles(const GameStructure &g, std::size_t max_count)
{
    // canonical rotation: each cycle is found from its smallest vertex
    const std::size_t n = g.num_vertices();
    if (n > 12) throw GameError("simple cycle enumeration is limited to 12 vertices");
    std::vector<Cycle> res;
    std::vector<bool> on(n, false);
    Cycle cur;
    for (std::size_t s = 0; s < n; s++) {
        std::vector<std::pair<std::size_t, std::size_t>> call{{s, 0}};
        cur.vertices.assign(1, s);
        cur.edges.clear();
        on[s] = true;
        while (!call.empty()) {
            auto &[v, slot] = call.back();
            if (slot < g.out(v).size()) {
                const std::size_t e = g.out(v)[slot++];
                const std::size_t w = g.edge(e).to;
                if (w == s) {
                    Cycle c = cur;
                    c.edges.push_back(e);
                    res.push_back(std::move(c));
                    if (res.size() > max_count) throw GameError("simple cycle count exceeds guard");
                } else if (w > s && !on[w]) {
                    on[w] = true;
                    cur.vertices.push_back(w);
                    cur.edges.push_back(e);
                    call.push_back({w, 0});
                }
                continue;
            }
            on[v] = false;
            call.pop_back();
            if (!call.empty()) {
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    }
    return res;
}

MemorylessEnumerator::MemorylessEnumerator(const GameStructure &g, Player player, std::size_t bound,
                                           const std::vector<bool> *relevant)
    : g_(&g), player_(player)
{
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (g.owner(v) != player || (relevant && !(*relevant)[v])) continue;
        owned_.push_back(v);
        const std::size_t d = g.out(v).size();
        if (count_ > bound / d) throw GameError("memoryless strategy count exceeds enumeration bound");
        count_ *= d;
    }
    if (count_ > bound) throw GameError("memoryless strategy count exceeds enumeration bound");
}

std::vector<std::size_t>
MemorylessEnumerator::choice(std::size_t index) const
{
    std::vector<std::size_t> c(g_->num_vertices(), npos);
    for (std::size_t v : owned_) {
        const std::size_t d = g_->out(v).size();
        c[v] = g_->edge(g_->out(v)[index % d]).to;
        index /= d;
    }
    return c;
}

MooreStrategy
MemorylessEnumerator::at(std::size_t index) const
{
    if (index >= count_) throw std::out_of_range("strategy index out of range");
    return MooreStrategy::memoryless(*g_, player_, choice(index));
}

} // namespace empg
