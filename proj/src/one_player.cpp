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

#include "empg/one_player.hpp"

#include <algorithm>

#include "empg/graph.hpp"

namespace empg {

namespace {

std::vector<bool>
mark(std::size_t n, const std::vector<std::size_t> &vs)
{
    std::vector<bool> m(n, false);
    for (std::size_t v : vs) m[v] = true;
    return m;
}

Path
access_path(const GameStructure &g, std::size_t v0, const std::vector<std::size_t> &targets)
{
    auto p = shortest_path(g, v0, mark(g.num_vertices(), targets));
    if (!p) throw GameError("witness is not reachable from the initial vertex");
    return *p;
}

void
check_walk(const GameStructure &g, const std::vector<std::size_t> &edges, bool closed)
{
    for (std::size_t j = 0; j + 1 < edges.size(); j++) {
        if (g.edge(edges[j]).to != g.edge(edges[j + 1]).from) throw GameError("witness walk is broken");
    }
    if (closed && !edges.empty() && g.edge(edges.back()).to != g.edge(edges.front()).from) {
        throw GameError("witness walk is not closed");
    }
}

} // namespace

std::pair<MooreStrategy, Integer>
synthesize_strict(const GameStructure &g, std::size_t v0, const CycleWitness &wit)
{
    const std::size_t n = g.num_vertices();
    const Integer credit = Integer(static_cast<unsigned long>(n - 1)) * g.max_abs_weight();
    for (std::size_t e : wit.first.edges) {
        if (e >= g.num_edges()) throw GameError("witness refers to unknown edge");
    }

    if (wit.kind == CycleWitness::Kind::SimpleGood) {
        check_walk(g, wit.first.edges, true);
        const Weight2 w = weight_of(g, wit.first);
        if (sgn(w.w1) < 0 || sgn(w.w2) <= 0) throw GameError("witness cycle is not good");
        // memoryless: go to the nearest cycle vertex, then follow the cycle
        const Path p = access_path(g, v0, wit.first.vertices);
        std::vector<std::size_t> choice(n, npos);
        for (std::size_t j = 0; j < p.length(); j++) choice[p.vertices[j]] = p.vertices[j + 1];
        for (std::size_t j = 0; j < wit.first.length(); j++) choice[wit.first.vertices[j]] = g.edge(wit.first.edges[j]).to;
        return {MooreStrategy::memoryless(g, Player::One, choice), credit};
    }

    std::vector<std::size_t> walk = composite_walk(wit);
    check_walk(g, walk, true);
    const Weight2 total = weight_of(g, walk);
    if (sgn(total.w1) < 0 || sgn(total.w2) <= 0) throw GameError("composite witness cycle is not good");

    // rotate at the first position of minimal energy
    Integer level = 0, low = 0;
    std::size_t at = 0;
    for (std::size_t j = 0; j < walk.size(); j++) {
        level += g.edge(walk[j]).weight.w1;
        if (level < low) {
            low = level;
            at = j + 1;
        }
    }
    at %= walk.size();
    std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(at), walk.end());
    const Path p = access_path(g, v0, {g.edge(walk.front()).from});

    // states 0 .. |p|-1 follow the access path, then one state per cycle position
    const std::size_t lp = p.length(), L = walk.size();
    MooreStrategy s(Player::One, n, lp + L, 0);
    std::vector<std::size_t> seq_v, seq_next;
    for (std::size_t j = 0; j < lp; j++) {
        seq_v.push_back(p.vertices[j]);
        seq_next.push_back(p.vertices[j + 1]);
    }
    for (std::size_t e : walk) {
        seq_v.push_back(g.edge(e).from);
        seq_next.push_back(g.edge(e).to);
    }
    for (std::size_t m = 0; m < lp + L; m++) {
        const std::size_t succ = m + 1 < lp + L ? m + 1 : lp;
        for (std::size_t v = 0; v < n; v++) {
            if (v == seq_v[m]) {
                s.set_update(m, v, succ);
                if (g.owner(v) == Player::One) s.set_next(m, v, seq_next[m]);
            } else {
                s.set_update(m, v, m);
                if (g.owner(v) == Player::One) s.set_next(m, v, g.edge(g.out(v).front()).to);
            }
        }
    }
    return {std::move(s), credit};
}

void
ScheduleStrategy::reset(const GameStructure &g, std::size_t start)
{
    g_ = &g;
    if (start != access.source()) throw GameError("schedule started away from its initial vertex");
    a64_ = static_cast<std::uint64_t>(to_int64(alpha));
    b64_ = static_cast<std::uint64_t>(to_int64(beta));
    g64_ = static_cast<std::uint64_t>(to_int64(gamma));
    phase_ = Access;
    z_ = 1;
    loops_ = 0;
    pos_ = 0;
    target_ = 0;
    skip_empty();
}

std::size_t
ScheduleStrategy::current_edge() const
{
    switch (phase_) {
    case Access: return access.edges[pos_];
    case LoopCp: return cp.edges[pos_];
    case ToC: return to_c.edges[pos_];
    case LoopC: return c.edges[pos_];
    case ToCp: return to_cp.edges[pos_];
    }
    return npos;
}

void
ScheduleStrategy::skip_empty()
{
    for (;;) {
        switch (phase_) {
        case Access:
            if (pos_ < access.length()) return;
            phase_ = LoopCp;
            pos_ = 0;
            loops_ = 0;
            target_ = z_ * b64_ + g64_;
            break;
        case LoopCp:
            if (degenerate || loops_ < target_) return;
            phase_ = ToC;
            pos_ = 0;
            break;
        case ToC:
            if (pos_ < to_c.length()) return;
            phase_ = LoopC;
            pos_ = 0;
            loops_ = 0;
            target_ = z_ * a64_;
            break;
        case LoopC:
            if (loops_ < target_) return;
            phase_ = ToCp;
            pos_ = 0;
            break;
        case ToCp:
            if (pos_ < to_cp.length()) return;
            z_++;
            phase_ = LoopCp;
            pos_ = 0;
            loops_ = 0;
            target_ = z_ * b64_ + g64_;
            break;
        }
    }
}

void
ScheduleStrategy::advance()
{
    pos_++;
    if (phase_ == LoopCp && pos_ == cp.length()) {
        pos_ = 0;
        loops_++;
    } else if (phase_ == LoopC && pos_ == c.length()) {
        pos_ = 0;
        loops_++;
    }
    skip_empty();
}

std::size_t
ScheduleStrategy::choose(std::size_t v)
{
    const Edge &e = g_->edge(current_edge());
    if (e.from != v) throw GameError("play left the schedule at " + g_->id(v));
    return e.to;
}

void
ScheduleStrategy::observe(std::size_t from, std::size_t to)
{
    const Edge &e = g_->edge(current_edge());
    if (e.from != from || e.to != to) throw GameError("play left the schedule at " + g_->id(from));
    advance();
}

Rational
ScheduleStrategy::average_floor(std::uint64_t z, const Integer &nv, const Integer &maxw) const
{
    if (z < 2 || degenerate) return 0;
    const Integer unit = nv * maxw;
    const Integer zz = static_cast<unsigned long>(z);
    const Integer low = -unit * (1 + (zz - 1) * (gamma + 2) + zz * beta + gamma + 3);
    Integer k = static_cast<unsigned long>(access.length());
    for (Integer l = 1; l < zz; l++) {
        k += (l * beta + gamma) * static_cast<unsigned long>(cp.length()) + static_cast<unsigned long>(to_c.length()) +
             l * alpha * static_cast<unsigned long>(c.length()) + static_cast<unsigned long>(to_cp.length());
    }
    Rational q(low, k);
    q.canonicalize();
    return q;
}

ScheduleStrategy
synthesize_nonstrict(const GameStructure &g, std::size_t v0, const MulticycleWitness &wit)
{
    ScheduleStrategy s;
    if (wit.kind == MulticycleWitness::Kind::SingleCycle) {
        const Cycle &cyc = wit.cycles.at(0);
        check_walk(g, cyc.edges, true);
        const Weight2 w = weight_of(g, cyc);
        if (sgn(w.w1) < 0 || sgn(w.w2) < 0) throw GameError("single witness cycle is negative");
        s.degenerate = true;
        s.access = access_path(g, v0, cyc.vertices);
        s.cp = rotate_to(cyc, s.access.target());
        s.alpha = s.beta = s.gamma = 0;
        Integer level = 0, low = 0;
        for (std::size_t e : s.access.edges) {
            level += g.edge(e).weight.w1;
            low = std::min(low, level);
        }
        for (std::size_t e : s.cp.edges) {
            level += g.edge(e).weight.w1;
            low = std::min(low, level);
        }
        s.credit = -low;
        return s;
    }
    if (wit.kind != MulticycleWitness::Kind::TwoCycle || wit.cycles.size() != 2) {
        throw GameError("schedule needs a single-cycle or two-cycle witness");
    }
    CyclePair pr = connect_cycles(g, wit.cycles[0], wit.cycles[1]);
    s.c = std::move(pr.first);
    s.cp = std::move(pr.second);
    s.to_cp = std::move(pr.to_second);
    s.to_c = std::move(pr.to_first);
    s.alpha = wit.multiplicity[0];
    s.beta = wit.multiplicity[1];
    const Weight2 wc = weight_of(g, s.c), wcp = weight_of(g, s.cp);
    const Weight2 comb = s.alpha * wc + s.beta * wcp;
    if (sgn(wc.w1) >= 0 || sgn(wcp.w1) <= 0 || sgn(comb.w1) < 0 || sgn(comb.w2) < 0 || s.alpha < 1 || s.beta < 1) {
        throw GameError("two-cycle witness does not combine to a nonnegative weight");
    }
    // pad C' loops so that each round pays for both connectors on dimension 1
    const Integer deficit = -(weight_of(g, s.to_c).w1 + weight_of(g, s.to_cp).w1);
    s.gamma = 0;
    if (sgn(deficit) > 0) mpz_cdiv_q(s.gamma.get_mpz_t(), deficit.get_mpz_t(), wcp.w1.get_mpz_t());
    s.access = access_path(g, v0, {s.cp.vertices[0]});

    // round starts never decrease and round 1 has the deepest relative dip,
    // so access plus the first round determine the credit
    Integer level = 0, low = 0;
    auto walk = [&](const std::vector<std::size_t> &es, const Integer &times) {
        for (Integer k = 0; k < times; k++) {
            for (std::size_t e : es) {
                level += g.edge(e).weight.w1;
                if (level < low) low = level;
            }
        }
    };
    walk(s.access.edges, 1);
    walk(s.cp.edges, s.beta + s.gamma);
    walk(s.to_c.edges, 1);
    walk(s.c.edges, s.alpha);
    walk(s.to_cp.edges, 1);
    s.credit = -low;
    return s;
}

std::vector<std::size_t>
local_minima(const PlayPrefix &p, std::size_t horizon)
{
    if (horizon > p.length()) throw std::out_of_range("horizon beyond prefix");
    std::vector<std::size_t> res;
    // suffix minimum over positions k+1 .. horizon
    Integer suffix;
    bool have = false;
    for (std::size_t k = horizon; k-- > 0;) {
        const Integer &next = p.level(1, k + 1);
        if (!have || next < suffix) {
            suffix = next;
            have = true;
        }
        if (p.level(1, k) <= suffix) res.push_back(k);
    }
    std::reverse(res.begin(), res.end());
    return res;
}

Verdict
solve_one_player(const GameStructure &g0, std::size_t v0, const ObjectiveSpec &spec0)
{
    if (!g0.one_player()) throw GameError("one-player solver needs a game without player-2 vertices");
    auto [g, spec] = normalize_threshold(g0, spec0, 2);
    Verdict v;
    v.route = spec.strict() ? "one-player/good-cycle-lp" : "one-player/good-multicycle-lp";
    if (spec.strict()) {
        auto wit = good_cycle_exists(g, v0);
        if (wit) {
            v.answer = Answer::Yes;
            v.initial_credit = Integer(static_cast<unsigned long>(g.num_vertices() - 1)) * g.max_abs_weight();
            v.certificate = std::move(*wit);
            return v;
        }
    } else {
        auto wit = good_multicycle_exists(g, v0);
        if (wit) {
            v.answer = Answer::Yes;
            v.initial_credit = synthesize_nonstrict(g, v0, *wit).credit;
            v.certificate = std::move(*wit);
            return v;
        }
    }
    v.answer = Answer::No;
    v.certificate = MooreStrategy::memoryless(g, Player::Two, {});
    return v;
}

} // namespace empg
