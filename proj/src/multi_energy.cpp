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

#include "empg/multi_energy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <limits>
#include <numeric>
#include <set>

#include "empg/graph.hpp"
#include "empg/rational_lp.hpp"

namespace empg {

MultiEnergyGame::MultiEnergyGame(std::vector<VertexSpec> vertices, std::vector<MultiEdge> edges, std::size_t dim,
                                 std::size_t initial)
    : dim_(dim), edges_(std::move(edges)), initial_(initial)
{
    const std::size_t n = vertices.size();
    if (dim_ == 0) throw GameError("energy game needs dimension >= 1");
    if (n == 0) throw GameError("game has no vertices");
    if (initial_ >= n) throw GameError("initial vertex out of range");
    for (std::size_t v = 0; v < n; v++) {
        ids_.push_back(std::move(vertices[v].id));
        owners_.push_back(vertices[v].owner);
        index_.push_back({ids_.back(), v});
    }
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 1; i < n; i++) {
        if (index_[i].first == index_[i - 1].first) throw GameError("duplicate vertex id '" + index_[i].first + "'");
    }
    out_.assign(n, {});
    in_.assign(n, {});
    for (std::size_t e = 0; e < edges_.size(); e++) {
        const MultiEdge &ed = edges_[e];
        if (ed.from >= n || ed.to >= n) throw GameError("edge endpoint out of range");
        if (ed.weight.size() != dim_) throw GameError("edge weight has wrong dimension");
        for (std::size_t f : out_[ed.from]) {
            if (edges_[f].to == ed.to) throw GameError("duplicate edge " + ids_[ed.from] + " -> " + ids_[ed.to]);
        }
        for (std::int64_t w : ed.weight) {
            if (w == std::numeric_limits<std::int64_t>::min()) throw GameError("weight out of range");
            max_abs_ = std::max(max_abs_, w < 0 ? -w : w);
        }
        out_[ed.from].push_back(e);
        in_[ed.to].push_back(e);
    }
    for (std::size_t v = 0; v < n; v++) {
        if (out_[v].empty()) throw GameError("vertex '" + ids_[v] + "' has no outgoing edge");
    }
}

std::optional<std::size_t>
MultiEnergyGame::find(const std::string &id) const
{
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(id, std::size_t{0}));
    if (it == index_.end() || it->first != id) return std::nullopt;
    return it->second;
}

std::optional<std::size_t>
MultiEnergyGame::find_edge(std::size_t from, std::size_t to) const
{
    for (std::size_t e : out_[from]) {
        if (edges_[e].to == to) return e;
    }
    return std::nullopt;
}

bool
MultiEnergyGame::one_player() const
{
    return std::all_of(owners_.begin(), owners_.end(), [](Player p) { return p == Player::One; });
}

GraphView
MultiEnergyGame::graph_view() const
{
    GraphView gv;
    gv.owner = owners_;
    for (std::size_t v = 0; v < ids_.size(); v++) {
        gv.succ.emplace_back();
        for (std::size_t e : out_[v]) gv.succ.back().push_back(edges_[e].to);
    }
    return gv;
}

std::vector<VertexSpec>
MultiEnergyGame::vertex_specs() const
{
    std::vector<VertexSpec> vs;
    for (std::size_t v = 0; v < ids_.size(); v++) vs.push_back({ids_[v], owners_[v]});
    return vs;
}

Vec
CreditAssignment::element(std::size_t v, std::size_t i) const
{
    return Vec(per_vertex[v].begin() + static_cast<std::ptrdiff_t>(i * dim),
               per_vertex[v].begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
}

std::optional<std::int64_t>
CreditAssignment::min_first(std::size_t v) const
{
    if (per_vertex[v].empty()) return std::nullopt;
    return per_vertex[v][0]; // lexicographic order puts the smallest first coordinate first
}

bool
CreditAssignment::covers(std::size_t v, const Vec &c) const
{
    const Vec &a = per_vertex[v];
    for (std::size_t i = 0; i < a.size(); i += dim) {
        bool le = true;
        for (std::size_t k = 0; k < dim && le; k++) le = a[i + k] <= c[k];
        if (le) return true;
    }
    return false;
}

namespace {

bool
leq(const std::int64_t *a, const std::int64_t *b, std::size_t d)
{
    for (std::size_t k = 0; k < d; k++) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

// up to four coordinates below 2^15 packed into 16-bit lanes, first coordinate highest
constexpr std::uint64_t kHigh = 0x8000800080008000ULL;

bool
packable(const Vec &flat, std::size_t d)
{
    if (d > 4) return false;
    return std::all_of(flat.begin(), flat.end(), [](std::int64_t x) { return x >= 0 && x < 0x8000; });
}

// sort lexicographically and drop dominated or repeated vectors
Vec
minimize(const Vec &flat, std::size_t d)
{
    const std::size_t k = flat.size() / d;
    if (d == 1) return k == 0 ? Vec{} : Vec{*std::min_element(flat.begin(), flat.end())};
    if (d == 2) {
        // after a lexicographic sort a pair survives iff its second coordinate drops
        std::vector<std::pair<std::int64_t, std::int64_t>> p(k);
        for (std::size_t i = 0; i < k; i++) p[i] = {flat[2 * i], flat[2 * i + 1]};
        std::sort(p.begin(), p.end());
        Vec out;
        for (const auto &[a, b] : p) {
            if (!out.empty() && out.back() <= b) continue;
            out.push_back(a);
            out.push_back(b);
        }
        return out;
    }
    if (packable(flat, d)) {
        std::vector<std::uint64_t> key(k);
        for (std::size_t i = 0; i < k; i++) {
            std::uint64_t x = 0;
            for (std::size_t c = 0; c < 4; c++) x = (x << 16) | static_cast<std::uint64_t>(c < d ? flat[i * d + c] : 0);
            key[i] = x;
        }
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        std::vector<std::uint64_t> kept;
        for (std::uint64_t x : key) {
            // lane-wise y <= x iff no lane of (x | high) - y loses its high bit
            bool dominated = false;
            for (std::uint64_t y : kept) {
                if ((((x | kHigh) - y) & kHigh) == kHigh) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(x);
        }
        Vec out(kept.size() * d);
        for (std::size_t i = 0; i < kept.size(); i++) {
            for (std::size_t c = 0; c < d; c++) out[i * d + c] = static_cast<std::int64_t>((kept[i] >> (16 * (3 - c))) & 0xFFFF);
        }
        return out;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a * d),
                                            flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * d),
                                            flat.begin() + static_cast<std::ptrdiff_t>(b * d),
                                            flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * d));
    });
    Vec out;
    for (std::size_t i : idx) {
        const std::int64_t *x = flat.data() + i * d;
        bool dominated = false;
        for (std::size_t j = 0; j < out.size() && !dominated; j += d) dominated = leq(out.data() + j, x, d);
        if (!dominated) out.insert(out.end(), x, x + d);
    }
    return out;
}

// credits needed before taking an edge of weight w to land in the set a
Vec
pred(const Vec &a, const Vec &w, std::size_t d, const Vec &cap)
{
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); i += d) {
        bool ok = true;
        for (std::size_t k = 0; k < d; k++) {
            const std::int64_t p = std::max<std::int64_t>(a[i + k] - w[k], 0);
            if (p > cap[k]) ok = false;
        }
        if (!ok) continue;
        for (std::size_t k = 0; k < d; k++) out.push_back(std::max<std::int64_t>(a[i + k] - w[k], 0));
    }
    return out;
}

/**
 * Player 1 may take a self-loop any finite number of times before leaving:
 * add the iterated predecessors of every leaving option, stopping once an
 * iterate is dominated by the previous one or exceeds the cap. A loop that
 * is nonnegative everywhere wins from zero credit.
 */
Vec
loop_closure(const Vec &leave, const Vec &w, std::size_t d, const Vec &cap)
{
    if (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 0; })) return Vec(d, 0);
    if (d == 2) {
        // staircase first -> second, second strictly decreasing; iteration is
        // monotone, so a chain may stop at the first dominated iterate
        std::map<std::int64_t, std::int64_t> st;
        auto dominated = [&](std::int64_t a, std::int64_t b) {
            auto it = st.upper_bound(a);
            return it != st.begin() && std::prev(it)->second <= b;
        };
        auto insert = [&](std::int64_t a, std::int64_t b) {
            auto it = st.lower_bound(a);
            while (it != st.end() && it->second >= b) it = st.erase(it);
            st[a] = b;
        };
        for (std::size_t i = 0; i < leave.size(); i += 2) {
            if (!dominated(leave[i], leave[i + 1])) insert(leave[i], leave[i + 1]);
        }
        std::vector<std::pair<std::int64_t, std::int64_t>> todo(st.begin(), st.end());
        for (auto [a, b] : todo) {
            for (;;) {
                const std::int64_t a2 = std::max<std::int64_t>(a - w[0], 0), b2 = std::max<std::int64_t>(b - w[1], 0);
                if (a2 > cap[0] || b2 > cap[1] || dominated(a2, b2)) break;
                insert(a2, b2);
                a = a2;
                b = b2;
            }
        }
        Vec out;
        out.reserve(2 * st.size());
        for (auto [a, b] : st) {
            out.push_back(a);
            out.push_back(b);
        }
        return out;
    }
    Vec out = leave;
    Vec x(d), y(d);
    for (std::size_t i = 0; i < leave.size(); i += d) {
        std::copy(leave.begin() + static_cast<std::ptrdiff_t>(i), leave.begin() + static_cast<std::ptrdiff_t>(i + d), x.begin());
        for (;;) {
            bool over = false;
            for (std::size_t k = 0; k < d; k++) {
                y[k] = std::max<std::int64_t>(x[k] - w[k], 0);
                over = over || y[k] > cap[k];
            }
            if (over || leq(x.data(), y.data(), d)) break;
            out.insert(out.end(), y.begin(), y.end());
            x.swap(y);
        }
    }
    return minimize(out, d);
}

Vec
join(const Vec &a, const Vec &b, std::size_t d)
{
    Vec out;
    out.reserve(a.size() / d * b.size());
    auto covered = [&](const Vec &set, const std::int64_t *x) {
        for (std::size_t j = 0; j < set.size(); j += d) {
            if (leq(set.data() + j, x, d)) return true;
        }
        return false;
    };
    // an element already above the other set joins only with itself
    for (std::size_t i = 0; i < a.size(); i += d) {
        if (covered(b, a.data() + i)) out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i + d));
    }
    for (std::size_t j = 0; j < b.size(); j += d) {
        if (covered(a, b.data() + j)) out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.begin() + static_cast<std::ptrdiff_t>(j + d));
    }
    for (std::size_t i = 0; i < a.size(); i += d) {
        for (std::size_t j = 0; j < b.size(); j += d) {
            if (leq(a.data() + i, b.data() + j, d) || leq(b.data() + j, a.data() + i, d)) continue;
            for (std::size_t k = 0; k < d; k++) out.push_back(std::max(a[i + k], b[j + k]));
        }
    }
    return out;
}

// successor edges of v sorted by target id
std::vector<std::size_t>
sorted_out(const MultiEnergyGame &g, std::size_t v)
{
    std::vector<std::size_t> es = g.out(v);
    std::sort(es.begin(), es.end(), [&](std::size_t a, std::size_t b) { return g.id(g.edge(a).to) < g.id(g.edge(b).to); });
    return es;
}

} // namespace

CreditAssignment
minimal_credit_energy(const MultiEnergyGame &g, std::int64_t cap, std::size_t stop)
{
    return minimal_credit_energy(g, Vec(g.dim(), cap), stop);
}

CreditAssignment
minimal_credit_energy(const MultiEnergyGame &g, const Vec &cap, std::size_t stop)
{
    if (cap.size() != g.dim()) throw GameError("one cap per dimension expected");
    if (*std::min_element(cap.begin(), cap.end()) < 1) throw GameError("cap must be at least 1");
    const std::size_t n = g.num_vertices(), d = g.dim();
    CreditAssignment F;
    F.dim = d;
    F.cap = cap;
    F.per_vertex.assign(n, Vec(d, 0));

    std::deque<std::size_t> work;
    std::vector<char> queued(n, 1);
    for (std::size_t v = 0; v < n; v++) work.push_back(v);
    while (!work.empty()) {
        const std::size_t v = work.front();
        work.pop_front();
        queued[v] = 0;
        Vec next;
        if (g.owner(v) == Player::One) {
            const MultiEdge *loop = nullptr;
            for (std::size_t e : g.out(v)) {
                if (g.edge(e).to == v) {
                    loop = &g.edge(e);
                    continue;
                }
                Vec p = pred(F.per_vertex[g.edge(e).to], g.edge(e).weight, d, cap);
                next.insert(next.end(), p.begin(), p.end());
            }
            next = minimize(next, d);
            if (loop) next = loop_closure(next, loop->weight, d, cap);
        } else {
            bool first = true;
            for (std::size_t e : g.out(v)) {
                Vec p = minimize(pred(F.per_vertex[g.edge(e).to], g.edge(e).weight, d, cap), d);
                next = first ? std::move(p) : minimize(join(next, p, d), d);
                first = false;
                if (next.empty()) break;
            }
        }
        if (next == F.per_vertex[v]) continue;
        F.per_vertex[v] = std::move(next);
        if (v == stop && F.per_vertex[v].empty()) break;
        for (std::size_t e : g.in(v)) {
            const std::size_t u = g.edge(e).from;
            if (!queued[u]) {
                queued[u] = 1;
                work.push_back(u);
            }
        }
    }
    return F;
}

EnergySolution
solve_unknown_credit(const MultiEnergyGame &g, std::int64_t cap, std::size_t stop)
{
    return solve_unknown_credit(g, Vec(g.dim(), cap), stop);
}

EnergySolution
solve_unknown_credit(const MultiEnergyGame &g, const Vec &cap, std::size_t stop)
{
    EnergySolution sol;
    sol.credits = minimal_credit_energy(g, cap, stop);
    if (stop != npos && !sol.credits.winning(stop)) {
        sol.winning.assign(g.num_vertices(), false);
        return sol;
    }
    const CreditAssignment &F = sol.credits;
    const std::size_t n = g.num_vertices(), d = g.dim();
    sol.winning.resize(n);
    for (std::size_t v = 0; v < n; v++) sol.winning[v] = F.winning(v);

    std::vector<std::size_t> base(n + 1, 1);
    for (std::size_t v = 0; v < n; v++) base[v + 1] = base[v] + F.size(v);
    const std::size_t states = base[n];

    // link[s] lists (successor, element index) pairs for state s = (p, i)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> link(states);
    // for player-1 pairs: chosen successor
    std::vector<std::size_t> move(states, npos);
    auto covering = [&](std::size_t e, const std::int64_t *m) -> std::size_t {
        const MultiEdge &ed = g.edge(e);
        const Vec &a = F.per_vertex[ed.to];
        for (std::size_t j = 0; j < a.size(); j += d) {
            bool ok = true;
            for (std::size_t k = 0; k < d && ok; k++) ok = std::max<std::int64_t>(a[j + k] - ed.weight[k], 0) <= m[k];
            if (ok) return j / d;
        }
        return npos;
    };
    for (std::size_t v = 0; v < n; v++) {
        const std::vector<std::size_t> es = sorted_out(g, v);
        for (std::size_t i = 0; i < F.size(v); i++) {
            const std::size_t s = base[v] + i;
            const std::int64_t *m = F.per_vertex[v].data() + i * d;
            for (std::size_t e : es) {
                const std::size_t j = covering(e, m);
                if (j == npos) continue;
                link[s].push_back({g.edge(e).to, j});
                if (g.owner(v) == Player::One) {
                    move[s] = g.edge(e).to;
                    break;
                }
            }
            if (g.owner(v) == Player::One && move[s] == npos) throw GameError("internal: fixpoint element without a move");
        }
    }

    MooreStrategy st(Player::One, n, states, 0);
    for (std::size_t s = 0; s < states; s++) {
        for (std::size_t v = 0; v < n; v++) {
            std::size_t j = F.winning(v) ? 0 : npos;
            if (s != 0) {
                for (auto [u, k] : link[s]) {
                    if (u == v) j = k;
                }
            }
            st.set_update(s, v, j == npos ? 0 : base[v] + j);
            if (g.owner(v) == Player::One) {
                st.set_next(s, v, j == npos ? g.edge(g.out(v).front()).to : move[base[v] + j]);
            }
        }
    }
    sol.strategy = std::move(st);
    return sol;
}

namespace {

struct Scc
{
    std::vector<std::size_t> label;
    std::size_t count = 0;
};

Scc
edge_sccs(const MultiEnergyGame &g, const std::vector<std::size_t> &es)
{
    std::vector<std::vector<std::size_t>> adj(g.num_vertices());
    for (std::size_t e : es) adj[g.edge(e).from].push_back(g.edge(e).to);
    Scc s;
    s.label = scc_labels(adj, &s.count);
    return s;
}

std::vector<std::size_t>
euler_walk(const MultiEnergyGame &g, const std::vector<Integer> &mult, std::size_t limit)
{
    Integer total = 0;
    for (const Integer &m : mult) total += m;
    if (total > static_cast<unsigned long>(limit)) return {};
    std::vector<std::size_t> left(mult.size());
    std::size_t start = npos;
    for (std::size_t e = 0; e < mult.size(); e++) {
        left[e] = mult[e].get_ui();
        if (left[e] > 0 && start == npos) start = g.edge(e).from;
    }
    if (start == npos) return {};
    std::vector<std::size_t> slot(g.num_vertices(), 0);
    // Hierholzer on (vertex, incoming edge) stack
    std::vector<std::pair<std::size_t, std::size_t>> st{{start, npos}};
    std::vector<std::size_t> circuit;
    while (!st.empty()) {
        const std::size_t v = st.back().first;
        auto &out = g.out(v);
        while (slot[v] < out.size() && left[out[slot[v]]] == 0) slot[v]++;
        if (slot[v] < out.size()) {
            const std::size_t e = out[slot[v]];
            left[e]--;
            st.push_back({g.edge(e).to, e});
        } else {
            if (st.back().second != npos) circuit.push_back(st.back().second);
            st.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

std::optional<EnergyCycle>
connected_nonneg(const MultiEnergyGame &g, const std::vector<std::size_t> &es)
{
    const std::size_t d = g.dim();
    std::vector<bool> in_support(es.size(), false);
    std::vector<Rational> total(es.size());
    bool any = false;
    // grow the support until no nonnegative circulation uses a new edge
    for (;;) {
        lp::Problem p;
        p.num_vars = es.size();
        std::vector<std::vector<std::pair<std::size_t, Rational>>> at(g.num_vertices());
        for (std::size_t j = 0; j < es.size(); j++) {
            const MultiEdge &ed = g.edge(es[j]);
            if (ed.from == ed.to) continue;
            at[ed.from].push_back({j, 1});
            at[ed.to].push_back({j, -1});
        }
        for (auto &terms : at) {
            if (!terms.empty()) p.constraints.push_back({std::move(terms), lp::Relation::Equal, 0});
        }
        for (std::size_t k = 0; k < d; k++) {
            lp::Constraint c{{}, lp::Relation::GreaterEqual, 0};
            for (std::size_t j = 0; j < es.size(); j++) {
                if (g.edge(es[j]).weight[k] != 0) c.terms.push_back({j, Rational(static_cast<long>(g.edge(es[j]).weight[k]))});
            }
            p.constraints.push_back(std::move(c));
        }
        lp::Constraint fresh{{}, lp::Relation::Equal, 1};
        for (std::size_t j = 0; j < es.size(); j++) {
            if (!in_support[j]) fresh.terms.push_back({j, 1});
        }
        if (fresh.terms.empty()) break;
        p.constraints.push_back(std::move(fresh));
        lp::Solution s = lp::solve(p);
        if (s.status != lp::Status::Optimal) break;
        any = true;
        for (std::size_t j = 0; j < es.size(); j++) {
            if (sgn(s.x[j]) > 0) {
                in_support[j] = true;
                total[j] += s.x[j];
            }
        }
    }
    if (!any) return std::nullopt;

    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < es.size(); j++) {
        if (in_support[j]) support.push_back(es[j]);
    }
    const Scc sc = edge_sccs(g, support);
    std::vector<std::vector<std::size_t>> parts(sc.count);
    for (std::size_t e : support) {
        if (sc.label[g.edge(e).from] == sc.label[g.edge(e).to]) parts[sc.label[g.edge(e).from]].push_back(e);
    }
    std::size_t nonempty = 0;
    for (auto &pt : parts) nonempty += !pt.empty();
    if (nonempty == 1) {
        EnergyCycle c;
        c.multiplicity.assign(g.num_edges(), 0);
        Integer l = 1;
        for (const Rational &q : total) {
            if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        Integer gd = 0;
        for (std::size_t j = 0; j < es.size(); j++) {
            Rational s = total[j] * l;
            c.multiplicity[es[j]] = s.get_num();
            mpz_gcd(gd.get_mpz_t(), gd.get_mpz_t(), s.get_num_mpz_t());
        }
        for (Integer &m : c.multiplicity) m /= gd;
        c.weight.assign(d, 0);
        for (std::size_t e = 0; e < g.num_edges(); e++) {
            for (std::size_t k = 0; k < d; k++) c.weight[k] += c.multiplicity[e] * static_cast<long>(g.edge(e).weight[k]);
        }
        c.walk = euler_walk(g, c.multiplicity, 1000000);
        return c;
    }
    for (auto &pt : parts) {
        if (pt.empty()) continue;
        if (auto c = connected_nonneg(g, pt)) return c;
    }
    return std::nullopt;
}

} // namespace

std::optional<EnergyCycle>
one_player_energy_check(const MultiEnergyGame &g, std::size_t v0)
{
    if (!g.one_player()) throw GameError("energy cycle check needs a one-player game");
    const std::vector<bool> reach = reachable_from(g.graph_view(), v0);
    std::vector<std::size_t> es;
    for (std::size_t e = 0; e < g.num_edges(); e++) {
        if (reach[g.edge(e).from]) es.push_back(e);
    }
    const Scc sc = edge_sccs(g, es);
    std::vector<std::vector<std::size_t>> parts(sc.count);
    for (std::size_t e : es) {
        if (sc.label[g.edge(e).from] == sc.label[g.edge(e).to]) parts[sc.label[g.edge(e).from]].push_back(e);
    }
    for (std::size_t c = parts.size(); c-- > 0;) {
        if (parts[c].empty()) continue;
        if (auto r = connected_nonneg(g, parts[c])) return r;
    }
    return std::nullopt;
}

MultiEnergyGame
restrict_choices(const MultiEnergyGame &g, Player p, const std::vector<std::size_t> &choice)
{
    std::vector<VertexSpec> vs = g.vertex_specs();
    std::vector<MultiEdge> es;
    for (const MultiEdge &e : g.edges()) {
        if (g.owner(e.from) == p && e.from < choice.size() && choice[e.from] != npos && choice[e.from] != e.to) continue;
        es.push_back(e);
    }
    for (std::size_t v = 0; v < vs.size(); v++) {
        if (vs[v].owner == p) vs[v].owner = opponent(p);
    }
    return MultiEnergyGame(std::move(vs), std::move(es), g.dim(), g.initial());
}

std::vector<std::size_t>
extract_spoiler(const MultiEnergyGame &g, const CreditAssignment &F)
{
    const std::size_t n = g.num_vertices(), d = g.dim();
    std::vector<std::size_t> choice(n, npos);
    for (std::size_t v = 0; v < n; v++) {
        if (g.owner(v) != Player::Two) continue;
        std::size_t best = npos;
        std::int64_t best_score = -1;
        for (std::size_t e : sorted_out(g, v)) {
            const MultiEdge &ed = g.edge(e);
            const Vec p = pred(F.per_vertex[ed.to], ed.weight, d, F.cap);
            // losing successors score highest, otherwise the smallest credit needed
            std::int64_t score = std::numeric_limits<std::int64_t>::max();
            for (std::size_t i = 0; i < p.size(); i += d) {
                std::int64_t s = 0;
                for (std::size_t k = 0; k < d; k++) s += p[i + k];
                score = std::min(score, s);
            }
            if (score > best_score) {
                best_score = score;
                best = ed.to;
            }
        }
        choice[v] = best;
    }
    return choice;
}

std::optional<std::vector<std::size_t>>
search_spoiler(const MultiEnergyGame &g, std::size_t v0, std::vector<std::size_t> start, std::size_t budget,
               std::set<std::vector<std::size_t>> &tried)
{
    // depth-first over memoryless player-2 strategies; each failed candidate
    // is repaired at the player-2 vertices the counterexample cycle relies on
    std::vector<std::vector<std::size_t>> stack{std::move(start)};
    std::size_t checks = 0;
    while (!stack.empty() && checks < budget) {
        std::vector<std::size_t> c = std::move(stack.back());
        stack.pop_back();
        if (!tried.insert(c).second) continue;
        checks++;
        const MultiEnergyGame h = restrict_choices(g, Player::Two, c);
        const auto cyc = one_player_energy_check(h, v0);
        if (!cyc) return c;
        std::vector<bool> on_cycle(g.num_vertices(), false);
        for (std::size_t e = 0; e < cyc->multiplicity.size(); e++) {
            if (sgn(cyc->multiplicity[e]) > 0) on_cycle[h.edge(e).from] = true;
        }
        const std::vector<bool> reach = reachable_from(h.graph_view(), v0);
        // push path vertices first so that cycle vertices are tried first
        for (int pass = 0; pass < 2; pass++) {
            for (std::size_t x = g.num_vertices(); x-- > 0;) {
                if (g.owner(x) != Player::Two || !reach[x] || on_cycle[x] != (pass == 1)) continue;
                for (std::size_t e : sorted_out(g, x)) {
                    if (g.edge(e).to == c[x]) continue;
                    std::vector<std::size_t> c2 = c;
                    c2[x] = g.edge(e).to;
                    if (!tried.count(c2)) stack.push_back(std::move(c2));
                }
            }
        }
    }
    return std::nullopt;
}

EnergyDecision
decide_unknown_credit(const MultiEnergyGame &g, std::size_t v0, std::int64_t max_cap, std::int64_t start_cap,
                      std::size_t spoiler_budget)
{
    if (max_cap < 1) throw GameError("cap must be at least 1");
    std::int64_t cap = start_cap > 0 ? std::min(start_cap, max_cap) : 1;
    EnergyDecision dec;
    std::set<std::vector<std::size_t>> tried;
    for (;;) {
        dec.cap = cap;
        dec.solution = solve_unknown_credit(g, cap, v0);
        if (dec.solution.winning[v0]) {
            dec.answer = Answer::Yes;
            return dec;
        }
        // a cheap attempt at every cap, the full budget once the cap is exhausted
        const std::size_t budget = cap >= max_cap ? spoiler_budget : std::min<std::size_t>(spoiler_budget, 2);
        if (auto sp = search_spoiler(g, v0, extract_spoiler(g, dec.solution.credits), budget, tried)) {
            dec.answer = Answer::No;
            dec.spoiler = std::move(*sp);
            return dec;
        }
        if (cap >= max_cap) break;
        cap = cap > max_cap / 2 ? max_cap : cap * 2;
    }
    dec.answer = Answer::Unknown;
    return dec;
}

} // namespace empg
