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


#include "empg/two_player.hpp"

#include <limits>

#include "empg/graph.hpp"
#include "empg/multi_energy.hpp"
#include "empg/one_player.hpp"
#include "empg/reduction.hpp"

namespace empg {

GameStructure
restrict_player2(const GameStructure &g, const std::vector<std::size_t> &choice)
{
    std::vector<VertexSpec> vs = g.vertex_specs();
    for (auto &s : vs) s.owner = Player::One;
    std::vector<Edge> es;
    for (const Edge &e : g.edges()) {
        const std::size_t c = e.from < choice.size() ? choice[e.from] : npos;
        if (g.owner(e.from) == Player::Two && c != npos && c != e.to) continue;
        es.push_back(e);
    }
    return GameStructure(std::move(vs), std::move(es), g.initial());
}

namespace {

MooreStrategy
full_spoiler(const GameStructure &g, const std::vector<std::size_t> &choice)
{
    return MooreStrategy::memoryless(g, Player::Two, choice);
}

} // namespace

Verdict
solve_two_player(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, std::size_t bound)
{
    if (g.one_player()) return solve_one_player(g, v0, spec);
    const std::vector<bool> reach = reachable_from(g, v0);
    MemorylessEnumerator en(g, Player::Two, bound, &reach);
    Verdict v;
    v.route = "two-player/memoryless-enumeration";
    for (std::size_t i = 0; i < en.count(); i++) {
        const std::vector<std::size_t> choice = en.choice(i);
        const Verdict sub = solve_one_player(restrict_player2(g, choice), v0, spec);
        if (sub.answer == Answer::No) {
            v.answer = Answer::No;
            v.certificate = full_spoiler(g, choice);
            v.note = "spoiler " + std::to_string(i) + " of " + std::to_string(en.count());
            return v;
        }
    }
    v.answer = Answer::Yes;
    v.note = "all " + std::to_string(en.count()) + " memoryless player-2 strategies checked";
    return v;
}

std::optional<MooreStrategy>
spoiling_strategy(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, std::size_t bound)
{
    Verdict v = solve_two_player(g, v0, spec, bound);
    if (v.answer != Answer::No) return std::nullopt;
    return std::get<MooreStrategy>(v.certificate);
}

std::int64_t
default_cap(const GameStructure &g0, const ObjectiveSpec &spec)
{
    const GameStructure g = normalize_threshold(g0, spec, 2).first;
    Integer c = Integer(static_cast<unsigned long>(g.num_vertices())) * g.max_abs_weight();
    c *= c;
    if (c < 1) c = 1;
    if (c > kMaxDefaultCap) return kMaxDefaultCap;
    return to_int64(c);
}

Verdict
solve_strict_pseudo_poly(const GameStructure &g0, std::size_t v0, const ObjectiveSpec &spec0, std::int64_t max_cap)
{
    if (!spec0.strict()) throw GameError("the gadget reduction only covers strict thresholds");
    if (max_cap <= 0) max_cap = default_cap(g0, spec0);
    const GameStructure g = normalize_threshold(g0, spec0, 2).first;
    auto [meg, map] = to_energy4(g);
    EnergyDecision dec = decide_unknown_credit(meg, v0, max_cap);
    Verdict v;
    v.route = "two-player/gadget-reduction";
    v.note = "cap " + std::to_string(dec.cap);
    v.answer = dec.answer;
    if (dec.answer == Answer::Yes) {
        v.initial_credit = Integer(static_cast<long>(*dec.solution.credits.min_first(v0)));
        v.certificate = pull_back_strategy(dec.solution.strategy, g, map, v0);
    } else if (dec.answer == Answer::No) {
        std::vector<std::size_t> choice(g.num_vertices(), npos);
        for (std::size_t x = 0; x < g.num_vertices(); x++) {
            if (g.owner(x) == Player::Two && dec.spoiler[x] != npos) choice[x] = g.edge(map.edge_of_vertex(dec.spoiler[x])).to;
        }
        v.certificate = full_spoiler(g0, choice);
    } else {
        v.note += ", fixpoint saturated";
    }
    return v;
}

Verdict
solve(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, Route route, std::int64_t max_cap,
      std::size_t bound)
{
    if (route == Route::Reduce) return solve_strict_pseudo_poly(g, v0, spec, max_cap);
    if (route == Route::Enumerate || !spec.strict()) return solve_two_player(g, v0, spec, bound);
    try {
        return solve_two_player(g, v0, spec, bound);
    } catch (const GameError &) {
        return solve_strict_pseudo_poly(g, v0, spec, max_cap);
    }
}

std::vector<bool>
winning_region(const GameStructure &g, const ObjectiveSpec &spec, std::size_t bound)
{
    std::vector<bool> win(g.num_vertices(), false);
    for (std::size_t v = 0; v < g.num_vertices(); v++) win[v] = solve_two_player(g, v, spec, bound).answer == Answer::Yes;
    return win;
}

} // namespace empg
