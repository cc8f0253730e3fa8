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

#include "empg/cycle_detect.hpp"

#include <algorithm>
#include <queue>

#include "empg/graph.hpp"
#include "empg/rational_lp.hpp"

namespace empg {

namespace {

// edges of the game with both endpoints in the component
std::vector<std::size_t>
component_edges(const GameStructure &g, const SccDecomposition &d, std::size_t c)
{
    std::vector<std::size_t> es;
    for (std::size_t e = 0; e < g.num_edges(); e++) {
        const Edge &ed = g.edge(e);
        if (d.component_of[ed.from] == c && d.component_of[ed.to] == c) es.push_back(e);
    }
    return es;
}

// conservation at every vertex touched by es, plus sum x = 1
lp::Problem
circulation_lp(const GameStructure &g, const std::vector<std::size_t> &es)
{
    lp::Problem p;
    p.num_vars = es.size();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> at(g.num_vertices());
    for (std::size_t j = 0; j < es.size(); j++) {
        const Edge &ed = g.edge(es[j]);
        if (ed.from == ed.to) continue;
        at[ed.from].push_back({j, 1});
        at[ed.to].push_back({j, -1});
    }
    for (auto &terms : at) {
        if (!terms.empty()) p.constraints.push_back({std::move(terms), lp::Relation::Equal, 0});
    }
    lp::Constraint sum{{}, lp::Relation::Equal, 1};
    for (std::size_t j = 0; j < es.size(); j++) sum.terms.push_back({j, 1});
    p.constraints.push_back(std::move(sum));
    return p;
}

lp::Constraint
weighted(const GameStructure &g, const std::vector<std::size_t> &es, int dim, lp::Relation rel)
{
    lp::Constraint c{{}, rel, 0};
    for (std::size_t j = 0; j < es.size(); j++) {
        const Integer &w = g.edge(es[j]).weight[dim];
        if (sgn(w) != 0) c.terms.push_back({j, Rational(w)});
    }
    return c;
}

std::vector<Rational>
expand(const GameStructure &g, const std::vector<std::size_t> &es, const std::vector<Rational> &x)
{
    std::vector<Rational> flow(g.num_edges());
    for (std::size_t j = 0; j < es.size(); j++) flow[es[j]] = x[j];
    return flow;
}

Circulation
integral(const std::vector<Rational> &flow)
{
    Integer l = 1, gd = 0;
    for (const Rational &q : flow) {
        if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    Circulation c(flow.size());
    for (std::size_t e = 0; e < flow.size(); e++) {
        Rational s = flow[e] * l;
        c[e] = s.get_num();
        mpz_gcd(gd.get_mpz_t(), gd.get_mpz_t(), c[e].get_mpz_t());
    }
    if (gd > 1) {
        for (Integer &z : c) z /= gd;
    }
    return c;
}

Weight2
flow_weight(const GameStructure &g, const Circulation &c)
{
    Weight2 w(0, 0);
    for (std::size_t e = 0; e < c.size(); e++) {
        if (sgn(c[e]) != 0) w += c[e] * g.edge(e).weight;
    }
    return w;
}

bool
in_first_quadrant_open(const Weight2 &w)
{
    return sgn(w.w1) >= 0 && sgn(w.w2) > 0;
}

} // namespace

std::vector<std::pair<Cycle, Rational>>
peel_cycles(const GameStructure &g, std::vector<Rational> flow)
{
    std::vector<std::pair<Cycle, Rational>> res;
    const std::size_t n = g.num_vertices();
    for (;;) {
        std::size_t start = npos;
        for (std::size_t e = 0; e < flow.size(); e++) {
            if (sgn(flow[e]) > 0) {
                start = e;
                break;
            }
        }
        if (start == npos) break;
        // walk along positive edges until a vertex repeats
        std::vector<std::size_t> where(n, npos);
        std::vector<std::size_t> vs, es;
        std::size_t v = g.edge(start).from;
        std::size_t e = start;
        for (;;) {
            where[v] = vs.size();
            vs.push_back(v);
            es.push_back(e);
            v = g.edge(e).to;
            if (where[v] != npos) break;
            e = npos;
            for (std::size_t f : g.out(v)) {
                if (sgn(flow[f]) > 0) {
                    e = f;
                    break;
                }
            }
            if (e == npos) throw GameError("flow is not a circulation");
        }
        Cycle c;
        c.vertices.assign(vs.begin() + static_cast<std::ptrdiff_t>(where[v]), vs.end());
        c.edges.assign(es.begin() + static_cast<std::ptrdiff_t>(where[v]), es.end());
        Rational m = flow[c.edges[0]];
        for (std::size_t f : c.edges) m = std::min(m, flow[f]);
        for (std::size_t f : c.edges) flow[f] -= m;
        res.push_back({std::move(c), m});
    }
    return res;
}

CyclePair
connect_cycles(const GameStructure &g, const Cycle &c, const Cycle &cp)
{
    const std::size_t n = g.num_vertices();
    // BFS distances from every vertex of either cycle
    auto bfs = [&](std::size_t s) {
        std::vector<std::size_t> dist(n, npos), via(n, npos);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t e : g.out(v)) {
                const std::size_t w = g.edge(e).to;
                if (dist[w] != npos) continue;
                dist[w] = dist[v] + 1;
                via[w] = e;
                q.push(w);
            }
        }
        return std::make_pair(dist, via);
    };
    auto path = [&](std::size_t s, std::size_t t, const std::vector<std::size_t> &via) {
        Path p;
        for (std::size_t v = t; v != s; v = g.edge(via[v]).from) {
            p.vertices.push_back(v);
            p.edges.push_back(via[v]);
        }
        p.vertices.push_back(s);
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
        return p;
    };
    std::size_t best = npos, bu = npos, bup = npos;
    std::vector<std::vector<std::size_t>> from_c, from_cp;
    for (std::size_t u : c.vertices) from_c.push_back(bfs(u).first);
    for (std::size_t up : cp.vertices) from_cp.push_back(bfs(up).first);
    for (std::size_t i = 0; i < c.vertices.size(); i++) {
        for (std::size_t j = 0; j < cp.vertices.size(); j++) {
            const std::size_t d1 = from_c[i][cp.vertices[j]];
            const std::size_t d2 = from_cp[j][c.vertices[i]];
            if (d1 == npos || d2 == npos) continue;
            if (best == npos || d1 + d2 < best) {
                best = d1 + d2;
                bu = c.vertices[i];
                bup = cp.vertices[j];
            }
        }
    }
    if (best == npos) throw GameError("cycles are not in one strongly connected component");
    CyclePair r;
    r.first = rotate_to(c, bu);
    r.second = rotate_to(cp, bup);
    r.to_second = path(bu, bup, bfs(bu).second);
    r.to_first = path(bup, bu, bfs(bup).second);
    return r;
}

std::pair<Integer, Integer>
combine_coefficients(const Weight2 &wC, const Weight2 &wCp)
{
    const Integer x = -wC.w1, y = wC.w2, xp = wCp.w1, yp = -wCp.w2;
    if (x < 1 || y < 1 || xp < 1 || yp < 0) throw GameError("cycle weights are not of the form (-x, y), (x', -y')");
    if (xp * y - x * yp <= 0) throw GameError("cycles do not make an angle below 180 degrees");
    Integer a = x * xp + y * yp;
    Integer b = x * x + y * y;
    return {a, b};
}

std::pair<Integer, Integer>
witness_loop_counts(const CycleWitness &wit, const Integer &nv, const Integer &maxw)
{
    if (wit.kind != CycleWitness::Kind::TwoCycle) throw GameError("loop counts need a two-cycle witness");
    return {2 * wit.a * nv * maxw, 2 * wit.b * nv * maxw};
}

std::vector<std::size_t>
composite_walk(const CycleWitness &wit)
{
    std::vector<std::size_t> walk;
    if (wit.kind == CycleWitness::Kind::SimpleGood) return wit.first.edges;
    for (Integer k = 0; k < wit.alpha; k++) walk.insert(walk.end(), wit.first.edges.begin(), wit.first.edges.end());
    walk.insert(walk.end(), wit.to_second.edges.begin(), wit.to_second.edges.end());
    for (Integer k = 0; k < wit.beta; k++) walk.insert(walk.end(), wit.second.edges.begin(), wit.second.edges.end());
    walk.insert(walk.end(), wit.to_first.edges.begin(), wit.to_first.edges.end());
    return walk;
}

std::optional<Circulation>
zero_multicycle_exists(const GameStructure &g)
{
    std::vector<std::size_t> es(g.num_edges());
    for (std::size_t e = 0; e < es.size(); e++) es[e] = e;
    lp::Problem p = circulation_lp(g, es);
    p.constraints.push_back(weighted(g, es, 1, lp::Relation::Equal));
    p.constraints.push_back(weighted(g, es, 2, lp::Relation::Equal));
    lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal) return std::nullopt;
    return integral(expand(g, es, s.x));
}

std::optional<MulticycleWitness>
good_multicycle_exists(const GameStructure &g, std::size_t v0)
{
    const SccDecomposition d = sccs(g.with_initial(v0));
    std::optional<MulticycleWitness> best;
    auto rank = [](const MulticycleWitness &w) {
        std::size_t len = 0;
        for (const Cycle &c : w.cycles) len += c.length();
        return std::make_pair(w.kind == MulticycleWitness::Kind::SingleCycle ? 0 : 1, len);
    };
    for (std::size_t c = 0; c < d.components.size(); c++) {
        if (!d.reachable[d.components[c].front()]) continue;
        const std::vector<std::size_t> es = component_edges(g, d, c);
        if (es.empty()) continue;
        lp::Problem p = circulation_lp(g, es);
        p.constraints.push_back(weighted(g, es, 1, lp::Relation::GreaterEqual));
        p.constraints.push_back(weighted(g, es, 2, lp::Relation::GreaterEqual));
        lp::Solution s = lp::solve(p);
        if (s.status != lp::Status::Optimal) continue;

        MulticycleWitness w;
        w.flow = integral(expand(g, es, s.x));
        w.total = flow_weight(g, w.flow);
        std::vector<Rational> fq(w.flow.begin(), w.flow.end());
        auto peeled = peel_cycles(g, fq);
        // a single nonnegative support cycle, shortest first
        const Cycle *single = nullptr;
        for (auto &[cyc, m] : peeled) {
            const Weight2 cw = weight_of(g, cyc);
            if (sgn(cw.w1) >= 0 && sgn(cw.w2) >= 0 && (!single || cyc.length() < single->length())) single = &cyc;
        }
        if (single) {
            w.kind = MulticycleWitness::Kind::SingleCycle;
            w.cycles = {*single};
            w.multiplicity = {1};
        } else {
            // pair (-x, y), (x', -y') with x' y - x y' >= 0, shortest total length
            const std::pair<Cycle, Rational> *bc = nullptr, *bcp = nullptr;
            for (auto &c1 : peeled) {
                const Weight2 u = weight_of(g, c1.first);
                if (!(sgn(u.w1) < 0 && sgn(u.w2) > 0)) continue;
                for (auto &c2 : peeled) {
                    const Weight2 v = weight_of(g, c2.first);
                    if (!(sgn(v.w1) > 0 && sgn(v.w2) < 0)) continue;
                    if (v.w1 * u.w2 - u.w1 * v.w2 < 0) continue; // x' y - x y' < 0
                    if (!bc || c1.first.length() + c2.first.length() < bc->first.length() + bcp->first.length()) {
                        bc = &c1;
                        bcp = &c2;
                    }
                }
            }
            if (bc) {
                const Weight2 u = weight_of(g, bc->first), v = weight_of(g, bcp->first);
                Integer alpha = v.w1, beta = -u.w1, gd;
                mpz_gcd(gd.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
                w.kind = MulticycleWitness::Kind::TwoCycle;
                w.cycles = {bc->first, bcp->first};
                w.multiplicity = {alpha / gd, beta / gd};
            } else {
                w.kind = MulticycleWitness::Kind::Flow;
                for (auto &[cyc, m] : peeled) {
                    w.cycles.push_back(cyc);
                    w.multiplicity.push_back(m.get_num());
                }
            }
        }
        if (!best || rank(w) < rank(*best)) best = std::move(w);
    }
    return best;
}

std::optional<CycleWitness>
good_cycle_exists(const GameStructure &g, std::size_t v0)
{
    const SccDecomposition d = sccs(g.with_initial(v0));
    std::optional<CycleWitness> best;
    auto rank = [](const CycleWitness &w) {
        const std::size_t len = w.first.length() + (w.kind == CycleWitness::Kind::TwoCycle ? w.second.length() : 0);
        return std::make_pair(w.kind == CycleWitness::Kind::SimpleGood ? 0 : 1, len);
    };
    const Integer nv = static_cast<unsigned long>(g.num_vertices());
    for (std::size_t c = 0; c < d.components.size(); c++) {
        if (!d.reachable[d.components[c].front()]) continue;
        const std::vector<std::size_t> es = component_edges(g, d, c);
        if (es.empty()) continue;
        lp::Problem p = circulation_lp(g, es);
        p.constraints.push_back(weighted(g, es, 1, lp::Relation::GreaterEqual));
        p.objective.assign(es.size(), 0);
        for (std::size_t j = 0; j < es.size(); j++) p.objective[j] = g.edge(es[j]).weight.w2;
        lp::Solution s = lp::solve(p);
        if (s.status != lp::Status::Optimal || sgn(s.value) <= 0) continue;

        CycleWitness w;
        w.flow = integral(expand(g, es, s.x));
        std::vector<Rational> fq(w.flow.begin(), w.flow.end());
        auto peeled = peel_cycles(g, fq);
        const Cycle *simple = nullptr;
        for (auto &[cyc, m] : peeled) {
            if (in_first_quadrant_open(weight_of(g, cyc)) && (!simple || cyc.length() < simple->length())) simple = &cyc;
        }
        if (simple) {
            w.kind = CycleWitness::Kind::SimpleGood;
            w.first = *simple;
        } else {
            const Cycle *bc = nullptr, *bcp = nullptr;
            for (auto &c1 : peeled) {
                const Weight2 u = weight_of(g, c1.first);
                if (!(sgn(u.w1) < 0 && sgn(u.w2) > 0)) continue;
                for (auto &c2 : peeled) {
                    const Weight2 v = weight_of(g, c2.first);
                    if (!(sgn(v.w1) > 0 && sgn(v.w2) <= 0)) continue;
                    if (v.w1 * u.w2 - u.w1 * v.w2 <= 0) continue;
                    if (!bc || c1.first.length() + c2.first.length() < bc->length() + bcp->length()) {
                        bc = &c1.first;
                        bcp = &c2.first;
                    }
                }
            }
            if (!bc) throw GameError("internal: positive circulation without a good cycle pair");
            CyclePair cp = connect_cycles(g, *bc, *bcp);
            w.kind = CycleWitness::Kind::TwoCycle;
            w.first = std::move(cp.first);
            w.second = std::move(cp.second);
            w.to_second = std::move(cp.to_second);
            w.to_first = std::move(cp.to_first);
            std::tie(w.a, w.b) = combine_coefficients(weight_of(g, w.first), weight_of(g, w.second));
            std::tie(w.alpha, w.beta) = witness_loop_counts(w, nv, g.max_abs_weight());
        }
        if (!best || rank(w) < rank(*best)) best = std::move(w);
    }
    return best;
}

namespace {

void
check_cycle(const GameStructure &g, const Cycle &c)
{
    const std::size_t k = c.length();
    if (k == 0 || c.vertices.size() != k) throw GameError("malformed cycle");
    std::vector<std::size_t> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw GameError("cycle is not simple");
    for (std::size_t j = 0; j < k; j++) {
        const Edge &e = g.edge(c.edges[j]);
        if (e.from != c.vertices[j] || e.to != c.vertices[(j + 1) % k]) throw GameError("cycle edges do not match vertices");
    }
}

void
check_path(const GameStructure &g, const Path &p, std::size_t from, std::size_t to)
{
    if (p.vertices.size() != p.edges.size() + 1 || p.source() != from || p.target() != to) {
        throw GameError("connector path has wrong endpoints");
    }
    for (std::size_t j = 0; j < p.length(); j++) {
        const Edge &e = g.edge(p.edges[j]);
        if (e.from != p.vertices[j] || e.to != p.vertices[j + 1]) throw GameError("connector edges do not match vertices");
    }
}

} // namespace

void
check_witness(const GameStructure &g, const CycleWitness &wit)
{
    check_cycle(g, wit.first);
    const Weight2 u = weight_of(g, wit.first);
    if (wit.kind == CycleWitness::Kind::SimpleGood) {
        if (!in_first_quadrant_open(u)) throw GameError("simple witness cycle is not good");
        return;
    }
    check_cycle(g, wit.second);
    check_path(g, wit.to_second, wit.first.vertices[0], wit.second.vertices[0]);
    check_path(g, wit.to_first, wit.second.vertices[0], wit.first.vertices[0]);
    const Weight2 v = weight_of(g, wit.second);
    auto [a, b] = combine_coefficients(u, v);
    if (a != wit.a || b != wit.b) throw GameError("witness coefficients do not match the cycles");
    const Weight2 comb = a * u + b * v;
    if (sgn(comb.w1) <= 0 || sgn(comb.w2) <= 0) throw GameError("combined weight is not positive");
    const Weight2 total = wit.alpha * u + wit.beta * v + weight_of(g, wit.to_second) + weight_of(g, wit.to_first);
    if (sgn(total.w1) < 0 || sgn(total.w2) <= 0) throw GameError("composite cycle is not good");
}

void
check_witness(const GameStructure &g, const MulticycleWitness &wit)
{
    if (wit.cycles.empty() || wit.cycles.size() != wit.multiplicity.size()) throw GameError("empty multicycle");
    const SccDecomposition d = sccs(g);
    const std::size_t comp = d.component_of[wit.cycles[0].vertices[0]];
    Weight2 total(0, 0);
    for (std::size_t i = 0; i < wit.cycles.size(); i++) {
        check_cycle(g, wit.cycles[i]);
        for (std::size_t v : wit.cycles[i].vertices) {
            if (d.component_of[v] != comp) throw GameError("multicycle spans several components");
        }
        if (wit.multiplicity[i] < 1) throw GameError("multiplicity must be positive");
        total += wit.multiplicity[i] * weight_of(g, wit.cycles[i]);
    }
    if (sgn(total.w1) < 0 || sgn(total.w2) < 0) throw GameError("multicycle weight is negative");
}

} // namespace empg
