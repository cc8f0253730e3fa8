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


#include "empg/oracle.hpp"

#include <map>
#include <random>

#include "empg/cycle_detect.hpp"
#include "empg/graph.hpp"
#include "empg/two_player.hpp"

namespace empg::oracle {

GameStructure
random_game(std::uint64_t seed, const RandomGameParams &p)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nv(p.min_vertices, p.max_vertices);
    std::uniform_int_distribution<int> wd(-p.max_weight, p.max_weight);
    std::bernoulli_distribution edge(p.edge_probability), two(p.player2_probability);
    const std::size_t n = nv(rng);
    std::vector<VertexSpec> vs;
    for (std::size_t v = 0; v < n; v++) vs.push_back({"v" + std::to_string(v), two(rng) ? Player::Two : Player::One});
    std::vector<Edge> es;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t v = 0; v < n; v++) {
        std::vector<bool> to(n, false);
        for (std::size_t u = 0; u < n; u++) to[u] = edge(rng);
        to[pick(rng)] = true;
        for (std::size_t u = 0; u < n; u++) {
            if (!to[u]) continue;
            const int a = wd(rng), b = wd(rng);
            es.push_back({v, u, Weight2(a, b)});
        }
    }
    return GameStructure(std::move(vs), std::move(es), 0);
}

std::vector<Cycle>
brute_force_cycles(const GameStructure &g)
{
    const std::size_t n = g.num_vertices();
    std::vector<Cycle> out;
    std::vector<std::size_t> seq, es;
    std::vector<bool> used(n, false);
    // extend a path of distinct vertices larger than its head, closing whenever possible
    auto rec = [&](auto &&self, std::size_t head) -> void {
        const std::size_t last = seq.back();
        for (std::size_t e : g.out(last)) {
            const std::size_t u = g.edge(e).to;
            if (u == head) {
                Cycle c;
                c.vertices = seq;
                c.vertices.push_back(head);
                c.edges = es;
                c.edges.push_back(e);
                out.push_back(std::move(c));
            } else if (u > head && !used[u]) {
                used[u] = true;
                seq.push_back(u);
                es.push_back(e);
                self(self, head);
                es.pop_back();
                seq.pop_back();
                used[u] = false;
            }
        }
    };
    for (std::size_t h = 0; h < n; h++) {
        seq = {h};
        used[h] = true;
        rec(rec, h);
        used[h] = false;
    }
    return out;
}

bool
cone_meets_quadrant(const Weight2 &u, const Weight2 &v, bool open)
{
    // t = a/b ranges over (0, inf); each constraint t*u_k + v_k > 0 (or >= 0) cuts it
    Rational lo = 0, hi = 0;
    bool lo_open = true, hi_open = false, bounded = false;
    for (int k = 0; k < 2; k++) {
        const Integer &uk = u[k + 1], &vk = v[k + 1];
        if (uk == 0) {
            if (open ? vk <= 0 : vk < 0) return false;
            continue;
        }
        const Rational t0 = Rational(-vk) / Rational(uk);
        if (uk > 0) {
            if (t0 > lo) {
                lo = t0;
                lo_open = open;
            } else if (t0 == lo) {
                lo_open = lo_open || open;
            }
        } else if (!bounded || t0 < hi) {
            bounded = true;
            hi = t0;
            hi_open = open;
        } else if (t0 == hi) {
            hi_open = hi_open || open;
        }
    }
    if (!bounded || lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
}

namespace {

bool
single_ok(const Weight2 &w, bool strict)
{
    return strict ? (w.w1 >= 0 && w.w2 > 0) : (w.w1 >= 0 && w.w2 >= 0);
}

bool
pair_oracle(const GameStructure &g, std::size_t v0, bool strict)
{
    const std::vector<bool> reach = reachable_from(g, v0);
    std::size_t count = 0;
    std::vector<std::vector<std::size_t>> adj(g.num_vertices());
    for (const Edge &e : g.edges()) adj[e.from].push_back(e.to);
    const std::vector<std::size_t> comp = scc_labels(adj, &count);
    std::map<std::size_t, std::vector<Weight2>> by_comp;
    for (const Cycle &c : brute_force_cycles(g)) {
        if (!reach[c.vertices.front()]) continue;
        const Weight2 w = weight_of(g, c);
        if (single_ok(w, strict)) return true;
        by_comp[comp[c.vertices.front()]].push_back(w);
    }
    for (auto &[k, ws] : by_comp) {
        for (std::size_t i = 0; i < ws.size(); i++) {
            for (std::size_t j = i + 1; j < ws.size(); j++) {
                // strict: a good cycle needs an interior direction so connectors can be absorbed
                if (cone_meets_quadrant(ws[i], ws[j], strict)) return true;
            }
        }
    }
    return false;
}

} // namespace

bool
good_cycle_oracle(const GameStructure &g, std::size_t v0)
{
    return pair_oracle(g, v0, true);
}

bool
good_multicycle_oracle(const GameStructure &g, std::size_t v0)
{
    return pair_oracle(g, v0, false);
}

Lasso
play_lasso(const GameStructure &g, const MooreStrategy &s, std::size_t v0)
{
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    std::vector<Weight2> level{Weight2(0, 0)};
    std::size_t v = v0, m = s.initial();
    for (std::size_t k = 0;; k++) {
        auto [it, fresh] = seen.emplace(std::make_pair(v, m), k);
        if (!fresh) {
            Lasso l;
            l.prefix = it->second;
            l.cycle_length = k - it->second;
            l.cycle_weight = level[k] + Integer(-1) * level[it->second];
            l.min_energy = 0;
            for (const Weight2 &x : level) l.min_energy = std::min(l.min_energy, x.w1);
            return l;
        }
        const std::size_t to = g.owner(v) == s.player() ? s.next(m, v) : g.edge(g.out(v).front()).to;
        const auto e = g.find_edge(v, to);
        if (!e) throw GameError("machine proposes a non-edge");
        m = s.update(m, v);
        level.push_back(level.back() + g.edge(*e).weight);
        v = to;
    }
}

bool
lasso_wins(const Lasso &l, const std::optional<Integer> &credit)
{
    if (l.cycle_weight.w1 < 0 || l.cycle_weight.w2 <= 0) return false;
    return !credit || l.min_energy + *credit >= 0;
}

std::optional<MooreStrategy>
winning_machine_of_size(const GameStructure &g, std::size_t v0, std::size_t k, const std::optional<Integer> &credit)
{
    const std::size_t n = g.num_vertices();
    // free slots: update for every (m, v) and next for every (m, v) with a choice
    struct Slot
    {
        std::size_t m, v;
        bool is_next;
        std::size_t arity;
    };
    std::vector<Slot> slots;
    for (std::size_t m = 0; m < k; m++) {
        for (std::size_t v = 0; v < n; v++) {
            slots.push_back({m, v, false, k});
            if (g.owner(v) == Player::One && g.out(v).size() > 1) slots.push_back({m, v, true, g.out(v).size()});
        }
    }
    std::vector<std::size_t> digit(slots.size(), 0);
    MooreStrategy s(Player::One, n, k, 0);
    for (std::size_t v = 0; v < n; v++) {
        if (g.owner(v) != Player::One) continue;
        for (std::size_t m = 0; m < k; m++) s.set_next(m, v, g.edge(g.out(v).front()).to);
    }
    for (;;) {
        for (std::size_t i = 0; i < slots.size(); i++) {
            const Slot &sl = slots[i];
            if (sl.is_next) s.set_next(sl.m, sl.v, g.edge(g.out(sl.v)[digit[i]]).to);
            else s.set_update(sl.m, sl.v, digit[i]);
        }
        if (lasso_wins(play_lasso(g, s, v0), credit)) return s;
        std::size_t i = 0;
        while (i < slots.size() && ++digit[i] == slots[i].arity) digit[i++] = 0;
        if (i == slots.size()) return std::nullopt;
    }
}

GameStructure
memory_example(int w)
{
    std::vector<VertexSpec> vs{{"v0", Player::One}, {"v1", Player::One}};
    std::vector<Edge> es{{0, 1, Weight2(w, -w)}, {1, 0, Weight2(w, -w)}, {1, 1, Weight2(-1, 1)}};
    return GameStructure(std::move(vs), std::move(es), 0);
}

MooreStrategy
memory_example_strategy(const GameStructure &g, int w)
{
    // state j < 2w counts the loops taken at v1, state 2w leaves
    const std::size_t k = static_cast<std::size_t>(2 * w + 1);
    MooreStrategy s(Player::One, g.num_vertices(), k, 0);
    for (std::size_t m = 0; m < k; m++) {
        s.set_next(m, 0, 1);
        s.set_update(m, 0, 0);
        const bool leave = m + 1 == k;
        s.set_next(m, 1, leave ? 0 : 1);
        s.set_update(m, 1, leave ? 0 : m + 1);
    }
    return s;
}

void
check_lp_detectors(const GameStructure &g, const std::string &name, SuiteTally &t)
{
    const std::size_t v0 = g.initial();
    t.lp_instances++;
    const bool c_lp = good_cycle_exists(g, v0).has_value(), c_or = good_cycle_oracle(g, v0);
    const bool m_lp = good_multicycle_exists(g, v0).has_value(), m_or = good_multicycle_oracle(g, v0);
    if (c_lp != c_or) {
        t.lp_mismatches++;
        t.failures.push_back(name + ": good cycle lp=" + std::to_string(c_lp) + " oracle=" + std::to_string(c_or));
    }
    if (m_lp != m_or) {
        t.lp_mismatches++;
        t.failures.push_back(name + ": good multicycle lp=" + std::to_string(m_lp) + " oracle=" + std::to_string(m_or));
    }
}

void
check_routes(const GameStructure &g, const std::string &name, std::int64_t cap, SuiteTally &t)
{
    ObjectiveSpec spec;
    spec.cmp = Cmp::Strict;
    t.route_instances++;
    const Answer a = solve(g, g.initial(), spec, Route::Enumerate).answer;
    const Answer b = solve(g, g.initial(), spec, Route::Reduce, cap).answer;
    if (b == Answer::Unknown) {
        t.route_unknown++;
    } else if (a != b) {
        t.route_mismatches++;
        t.failures.push_back(name + ": enumeration " + to_string(a) + ", reduction " + to_string(b));
    }
}

void
check_inf_sup(const GameStructure &g, const std::string &name, SuiteTally &t)
{
    t.mp_instances++;
    for (Cmp c : {Cmp::Strict, Cmp::NonStrict}) {
        ObjectiveSpec inf, sup;
        inf.cmp = sup.cmp = c;
        inf.kind = MpKind::Inf;
        sup.kind = MpKind::Sup;
        const Answer a = solve(g, g.initial(), inf, Route::Enumerate).answer;
        const Answer b = solve(g, g.initial(), sup, Route::Enumerate).answer;
        if (a != b) {
            t.mp_mismatches++;
            t.failures.push_back(name + ": " + to_string(inf) + " " + to_string(a) + " but " + to_string(sup) + " " +
                                 to_string(b));
        }
    }
}

} // namespace empg::oracle
