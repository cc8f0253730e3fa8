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


#include "empg/simulator.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace empg {

namespace {

std::string
recent(const GameStructure &g, const std::deque<std::size_t> &tail)
{
    std::string s;
    for (std::size_t v : tail) s += (s.empty() ? "" : " ") + g.id(v);
    return s;
}

} // namespace

TraceReport
simulate(const GameStructure &g, std::size_t v0, StrategyHandle &s1, StrategyHandle &s2, std::uint64_t steps,
         const Integer &credit, const SimulationOptions &options)
{
    if (steps < 1) throw GameError("simulation needs at least one step");
    if (v0 >= g.num_vertices()) throw GameError("start vertex out of range");
    if (options.stride < 1) throw GameError("sampling stride must be positive");

    TraceReport r;
    r.start = v0;
    r.steps = steps;
    r.credit = credit;
    r.total = Weight2(0, 0);
    r.min_energy = credit;
    if (options.keep_vertices) r.vertices.reserve(steps + 1), r.vertices.push_back(v0);
    if (options.keep_energy) r.energy.reserve(steps + 1), r.energy.push_back(credit);

    s1.reset(g, v0);
    s2.reset(g, v0);
    auto flag = [&](std::uint64_t k, std::string what) {
        if (!r.first_violation) r.first_violation = k;
        r.violation_count++;
        if (r.violations.size() < options.max_violations) r.violations.push_back({k, std::move(what)});
    };
    if (credit < 0) flag(0, "negative initial credit");

    using Joint = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<Joint, std::uint64_t> seen;
    std::vector<Weight2> sums; // prefix sums while the lasso is open
    bool track = true;
    std::deque<std::size_t> tail{v0};

    Integer energy = credit;
    std::size_t v = v0;
    for (std::uint64_t k = 0; k < steps; k++) {
        if (track) {
            auto m1 = s1.memory(), m2 = s2.memory();
            if (!m1 || !m2) {
                track = false;
            } else {
                auto [it, fresh] = seen.emplace(Joint{v, *m1, *m2}, k);
                if (!fresh) {
                    TraceLasso l;
                    l.prefix = it->second;
                    l.period = k - it->second;
                    l.cycle_weight = Weight2(r.total.w1 - sums[it->second].w1, r.total.w2 - sums[it->second].w2);
                    l.average = Rational(l.cycle_weight.w2, static_cast<unsigned long>(l.period));
                    l.average.canonicalize();
                    r.lasso = std::move(l);
                    track = false;
                    seen.clear();
                    sums.clear();
                } else {
                    sums.push_back(r.total);
                }
            }
        }

        StrategyHandle &mover = g.owner(v) == Player::One ? s1 : s2;
        const std::size_t w = mover.choose(v);
        const auto e = w < g.num_vertices() ? g.find_edge(v, w) : std::nullopt;
        if (!e) {
            throw GameError("player " + std::to_string(static_cast<int>(g.owner(v))) + " proposed an illegal move at step " +
                            std::to_string(k) + " after " + recent(g, tail) +
                            (w < g.num_vertices() ? " to " + g.id(w) : std::string(" to an unknown vertex")));
        }
        s1.observe(v, w);
        s2.observe(v, w);
        const Weight2 &wt = g.edge(*e).weight;
        r.total += wt;
        energy += wt.w1;
        if (energy < r.min_energy) r.min_energy = energy;
        if (energy < 0) flag(k + 1, "energy " + to_string(energy));
        v = w;
        tail.push_back(v);
        if (tail.size() > 8) tail.pop_front();
        if (options.keep_vertices) r.vertices.push_back(v);
        if (options.keep_energy) r.energy.push_back(energy);
        if ((k + 1) % options.stride == 0 || k + 1 == steps) {
            Rational a(r.total.w2, static_cast<unsigned long>(k + 1));
            a.canonicalize();
            r.averages.push_back({k + 1, std::move(a)});
        }
    }
    return r;
}

ObjectiveStatus
check_lasso_objective(const TraceReport &report, const ObjectiveSpec &spec)
{
    if (!report.lasso) throw GameError("report has no lasso");
    const TraceLasso &l = *report.lasso;
    if (report.first_violation || sgn(l.cycle_weight.w1) < 0) return ObjectiveStatus::Violated;
    const bool mp = spec.strict() ? l.average > spec.threshold : l.average >= spec.threshold;
    return mp ? ObjectiveStatus::Satisfied : ObjectiveStatus::Violated;
}

} // namespace empg
