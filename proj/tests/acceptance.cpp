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


// One line per criterion: PASS or FAIL, the criterion, and what was measured.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "empg/cycle_detect.hpp"
#include "empg/graph.hpp"
#include "empg/infinite_plan.hpp"
#include "empg/json_io.hpp"
#include "empg/one_player.hpp"
#include "empg/oracle.hpp"
#include "empg/reduction.hpp"
#include "empg/simulator.hpp"
#include "empg/two_player.hpp"

using namespace empg;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double
seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void
report(bool ok, const std::string &name, const std::string &detail)
{
    if (!ok) failures++;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

// run a check, turning exceptions into failures
void
criterion(const std::string &name, const std::function<bool(std::ostringstream &)> &body)
{
    std::ostringstream detail;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception &e) {
        detail << " exception: " << e.what();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.1fs]", seconds_since(t0));
    report(ok, name, detail.str() + buf);
}

GameStructure
game(std::initializer_list<Player> owners, std::vector<Edge> edges, std::size_t initial = 0)
{
    std::vector<VertexSpec> vs;
    for (Player p : owners) vs.push_back({"v" + std::to_string(vs.size()), p});
    return GameStructure(std::move(vs), std::move(edges), initial);
}

const Player P1 = Player::One;

GameStructure
two_loops()
{
    return game({P1, P1}, {{0, 0, Weight2(1, -1)}, {0, 1, Weight2(0, -1)}, {1, 1, Weight2(-1, 3)}, {1, 0, Weight2(0, -1)}});
}

GameStructure
balanced()
{
    return game({P1, P1}, {{0, 0, Weight2(1, -1)}, {0, 1, Weight2(0, -1)}, {1, 1, Weight2(-1, 1)}, {1, 0, Weight2(0, -1)}});
}

ObjectiveSpec
make_spec(MpKind k, Cmp c, Rational t = 0)
{
    ObjectiveSpec s;
    s.kind = k;
    s.cmp = c;
    s.threshold = t;
    return s;
}

std::vector<ObjectiveSpec>
all_specs()
{
    return {make_spec(MpKind::Inf, Cmp::Strict), make_spec(MpKind::Sup, Cmp::Strict), make_spec(MpKind::Inf, Cmp::NonStrict),
            make_spec(MpKind::Sup, Cmp::NonStrict)};
}

struct Idle : StrategyHandle
{
    void reset(const GameStructure &, std::size_t) override {}
    std::size_t choose(std::size_t) override { throw GameError("no player-2 vertex"); }
    void observe(std::size_t, std::size_t) override {}
    std::optional<std::size_t> memory() const override { return 0; }
    std::string kind() const override { return "idle"; }
};

// ---- golden instances ----

bool
golden_two_loops(std::ostringstream &out)
{
    const GameStructure g = two_loops();
    bool ok = true;
    for (const auto &s : all_specs()) {
        const Verdict v = solve_one_player(g, 0, s);
        out << to_string(s) << "=" << to_string(v.answer) << " ";
        ok &= v.answer == Answer::Yes;
    }
    const Verdict v = solve_one_player(g, 0, make_spec(MpKind::Inf, Cmp::Strict));
    auto [m, credit] = synthesize_strict(g, 0, std::get<CycleWitness>(v.certificate));
    MooreHandle h(m);
    Idle idle;
    const TraceReport r = simulate(g, 0, h, idle, 10000, credit);
    ok &= credit == 3 && !r.first_violation && r.lasso && r.lasso->average > 0;
    out << "c0=" << credit;
    if (r.lasso) out << " lasso MP2=" << to_string(r.lasso->average) << " over " << r.lasso->period << " edges";
    out << " violations=" << r.violation_count;
    return ok;
}

bool
golden_balanced(std::ostringstream &out)
{
    const GameStructure g = balanced();
    bool ok = true;
    for (const auto &s : all_specs()) {
        const Verdict v = solve_one_player(g, 0, s);
        out << to_string(s) << "=" << to_string(v.answer) << " ";
        if (s.strict()) {
            ok &= v.answer == Answer::No;
        } else {
            ok &= v.answer == Answer::Yes && v.initial_credit == 0;
            const auto &w = std::get<MulticycleWitness>(v.certificate);
            // support exactly the two self-loops, total (0,0)
            std::vector<std::size_t> support;
            for (std::size_t e = 0; e < w.flow.size(); e++) {
                if (w.flow[e] > 0) support.push_back(e);
            }
            const bool loops = support.size() == 2 && g.edge(support[0]).from == g.edge(support[0]).to &&
                               g.edge(support[1]).from == g.edge(support[1]).to;
            ok &= loops && w.total == Weight2(0, 0);
        }
    }
    out << "c0=0 multicycle={(v0,v0),(v1,v1)} weight (0,0)";
    return ok;
}

bool
golden_memory(int w, std::ostringstream &out)
{
    const GameStructure g = oracle::memory_example(w);
    bool ok = solve_one_player(g, 0, make_spec(MpKind::Inf, Cmp::Strict)).answer == Answer::No &&
              solve_one_player(g, 0, make_spec(MpKind::Inf, Cmp::NonStrict)).answer == Answer::Yes;
    out << "W=" << w << " strict=No non-strict=Yes " << (ok ? "ok" : "wrong");
    // mean payoff above -1/(2W)
    const GameStructure h = normalize_threshold(g, make_spec(MpKind::Inf, Cmp::Strict, Rational(-1, 2 * w))).first;
    for (int k = 1; k <= w; k++) {
        if (oracle::winning_machine_of_size(h, 0, static_cast<std::size_t>(k))) {
            out << "; a machine with " << k << " states wins";
            ok = false;
        }
    }
    out << "; no machine with <= " << w << " states";
    const MooreStrategy big = oracle::memory_example_strategy(h, w);
    const bool wins = oracle::lasso_wins(oracle::play_lasso(h, big, 0), std::nullopt);
    out << "; " << big.memory_size() << "-state machine " << (wins ? "wins" : "loses");
    return ok && wins && big.memory_size() == static_cast<std::size_t>(2 * w + 1);
}

// ---- suites ----

struct Suites
{
    oracle::SuiteTally one, two;
    double seconds = 0;
};

Suites
run_suites()
{
    Suites s;
    const auto t0 = Clock::now();
    oracle::RandomGameParams p1;
    for (std::uint64_t seed = 5000; seed < 5500; seed++) {
        const GameStructure g = oracle::random_game(seed, p1);
        oracle::check_lp_detectors(g, "one:" + std::to_string(seed), s.one);
        oracle::check_inf_sup(g, "one:" + std::to_string(seed), s.one);
    }
    oracle::RandomGameParams p2;
    p2.player2_probability = 0.4;
    for (std::uint64_t seed = 1000; seed < 1500; seed++) {
        const GameStructure g = oracle::random_game(seed, p2);
        oracle::check_routes(g, "two:" + std::to_string(seed), 8, s.two);
        oracle::check_inf_sup(g, "two:" + std::to_string(seed), s.two);
    }
    s.seconds = seconds_since(t0);
    return s;
}

void
print_failures(const oracle::SuiteTally &t)
{
    for (std::size_t i = 0; i < t.failures.size() && i < 10; i++) std::cout << "  " << t.failures[i] << "\n";
}

// ---- reduction sizes ----

bool
reduction_sizes(std::ostringstream &out)
{
    oracle::RandomGameParams p;
    p.player2_probability = 0.4;
    std::size_t bad = 0, zero = 0;
    for (std::uint64_t seed = 3000; seed < 3100; seed++) {
        const GameStructure g = oracle::random_game(seed, p);
        auto [g4, map] = to_energy4(g);
        // the gadget's own +-1 entries bound ||E'|| from below
        const Integer expect = g.max_abs_weight() == 0 ? Integer(1) : g.max_abs_weight();
        zero += g.max_abs_weight() == 0;
        if (g4.num_vertices() != g.num_vertices() + 2 * g.num_edges() || g4.num_edges() != 5 * g.num_edges() ||
            Integer(g4.max_abs_weight()) != expect) {
            bad++;
        }
    }
    out << "100 games, " << bad << " with wrong sizes; " << zero << " all-zero games where ||E'|| = 1";
    return bad == 0;
}

// ---- infinite plan ----

struct PlanStats
{
    std::size_t runs = 0, energy_bad = 0, staircase_bad = 0, delta_bad = 0, low_level = 0, stuck = 0;
    int min_level = 1 << 30, max_level = 0;
};

/**
 * Plays the plan against a memoryless player-2 strategy, checking energy
 * against d0, the staircase bound at levels >= 2 and delta at switches.
 */
void
run_plan(const GameStructure &g, std::size_t v0, InfiniteStrategyPlan plan, StrategyHandle &s2, std::uint64_t steps,
         PlanStats &st)
{
    st.runs++;
    plan.reset(g, v0);
    s2.reset(g, v0);
    Integer energy = plan.d0(), w2 = 0;
    std::size_t v = v0, seen_switches = 0;
    bool energy_ok = true, stair_ok = true;
    for (std::uint64_t k = 1; k <= steps; k++) {
        const std::size_t to = g.owner(v) == Player::One ? plan.choose(v) : s2.choose(v);
        const auto e = g.find_edge(v, to);
        if (!e) throw GameError("illegal move");
        plan.observe(v, to);
        s2.observe(v, to);
        energy += g.edge(*e).weight.w1;
        w2 += g.edge(*e).weight.w2;
        v = to;
        if (energy < 0) energy_ok = false;
        // average over the prefix at least -1/2^(i-1) at level i
        const int i = plan.current_level();
        if (i >= 2) {
            Integer lhs = w2;
            lhs <<= static_cast<mp_bitcnt_t>(i - 1);
            if (lhs + static_cast<unsigned long>(k) < 0) stair_ok = false;
        }
        for (; seen_switches < plan.switches().size(); seen_switches++) {
            if (plan.switches()[seen_switches].delta < 0) st.delta_bad++;
        }
    }
    st.energy_bad += !energy_ok;
    st.staircase_bad += !stair_ok;
    st.delta_bad += plan.delta_violations();
    st.stuck += plan.stuck();
    st.low_level += plan.current_level() < 6;
    st.min_level = std::min(st.min_level, plan.current_level());
    st.max_level = std::max(st.max_level, plan.current_level());
}

bool
plan_simulation(std::ostringstream &out)
{
    const ObjectiveSpec spec = make_spec(MpKind::Inf, Cmp::NonStrict);
    const std::uint64_t steps = 100000;
    PlanStats st;
    std::size_t instances = 1, opponents = 1;
    {
        const GameStructure g = balanced();
        Idle idle;
        run_plan(g, 0, InfiniteStrategyPlan::build(g, 0, spec), idle, steps, st);
    }
    oracle::RandomGameParams p;
    p.max_vertices = 5;
    p.player2_probability = 0.4;
    std::size_t found = 0;
    for (std::uint64_t seed = 7000; found < 20 && seed < 20000; seed++) {
        const GameStructure g = oracle::random_game(seed, p);
        if (g.one_player() || solve(g, g.initial(), spec).answer != Answer::Yes) continue;
        found++;
        instances++;
        const InfiniteStrategyPlan plan = InfiniteStrategyPlan::build(g, g.initial(), spec);
        const MemorylessEnumerator en(g, Player::Two);
        for (std::size_t k = 0; k < en.count(); k++) {
            MooreHandle s2(en.at(k));
            run_plan(g, g.initial(), plan, s2, steps, st);
            opponents++;
        }
    }
    out << instances << " games, " << st.runs << " runs of " << steps << " steps; energy violations " << st.energy_bad
        << ", staircase violations " << st.staircase_bad << ", negative delta " << st.delta_bad << ", final level "
        << st.min_level << ".." << st.max_level << ", runs below level 6 " << st.low_level << ", stuck " << st.stuck;
    (void)opponents;
    return found == 20 && st.energy_bad == 0 && st.staircase_bad == 0 && st.delta_bad == 0 && st.low_level == 0 &&
           st.stuck == 0;
}

// ---- determinism ----

std::string
jobs_output()
{
    std::string all;
    const ObjectiveSpec strict = make_spec(MpKind::Inf, Cmp::Strict), nonstrict = make_spec(MpKind::Inf, Cmp::NonStrict);
    oracle::RandomGameParams p;
    p.player2_probability = 0.4;
    for (std::uint64_t seed = 9000; seed < 9040; seed++) {
        const GameStructure g = oracle::random_game(seed, p);
        const std::size_t v0 = g.initial();
        for (const auto &s : {strict, nonstrict}) {
            const Verdict v = solve(g, v0, s, Route::Auto, 8);
            all += dump(verdict_to_json(v, g, v0, s));
        }
        const Verdict r = solve(g, v0, strict, Route::Reduce, 8);
        all += dump(verdict_to_json(r, g, v0, strict));
        auto [g4, map] = to_energy4(g);
        all += dump(energy_game_to_json(g4, "reduction/gadget"));
        all += dump(gadget_map_to_json(map, g, g4));
        if (!g.one_player() && solve(g, v0, nonstrict).answer == Answer::Yes) {
            InfiniteStrategyPlan plan = InfiniteStrategyPlan::build(g, v0, nonstrict);
            RandomHandle s2(seed);
            const TraceReport t = simulate(g, v0, plan, s2, 2000, plan.d0());
            all += dump(trace_to_json(t, g));
            all += dump(plan_to_json(plan, g));
        }
    }
    return all;
}

bool
determinism(std::ostringstream &out)
{
    const std::string a = jobs_output(), b = jobs_output();
    out << a.size() << " bytes per run, " << (a == b ? "identical" : "different");
    return a == b;
}

} // namespace

int
main()
{
    criterion("golden two-loop game: four variants Yes, strict lasso MP2 > 0, c0 = 3", golden_two_loops);
    criterion("golden balanced game: strict No, non-strict Yes with c0 = 0 and a (0,0) multicycle of both loops",
              golden_balanced);
    for (int w : {2, 3, 4}) {
        criterion("golden memory game W=" + std::to_string(w) + ": memory <= W loses above -1/(2W), 2W+1 states win",
                  [w](std::ostringstream &o) { return golden_memory(w, o); });
    }

    const Suites s = run_suites();
    char secs[64];
    std::snprintf(secs, sizeof secs, " [suites %.1fs]", s.seconds);
    report(s.one.lp_mismatches == 0 && s.one.lp_instances >= 500, "LP detectors agree with the cycle oracles",
           std::to_string(s.one.lp_instances) + " one-player games, " + std::to_string(s.one.lp_mismatches) + " mismatches" + secs);
    print_failures(s.one);
    const double unknown = s.two.route_instances ? double(s.two.route_unknown) / double(s.two.route_instances) : 1.0;
    report(s.two.route_mismatches == 0 && s.two.route_instances >= 500 && unknown < 0.2,
           "enumeration agrees with the reduction on strict objectives",
           std::to_string(s.two.route_instances) + " two-player games, " + std::to_string(s.two.route_mismatches) +
               " mismatches, " + std::to_string(s.two.route_unknown) + " Unknown (cap 8)" + secs);
    print_failures(s.two);
    const std::size_t mp_n = s.one.mp_instances + s.two.mp_instances, mp_bad = s.one.mp_mismatches + s.two.mp_mismatches;
    report(mp_bad == 0 && mp_n >= 1000, "MP-inf and MP-sup verdicts coincide",
           std::to_string(mp_n) + " games, both comparisons each, " + std::to_string(mp_bad) + " mismatches" + secs);
    report(s.seconds < 300, "suites finish within 5 minutes", std::string(secs + 1));

    criterion("reduction sizes |V'| = |V|+2|E|, |E'| = 5|E|, ||E'|| = max(||E||, 1)", reduction_sizes);

    const auto t4 = Clock::now();
    criterion("infinite plan: no energy violation, staircase holds, delta >= 0, level >= 6 over 1e5 steps", plan_simulation);
    const double plan_secs = seconds_since(t4);
    char pbuf[32];
    std::snprintf(pbuf, sizeof pbuf, "%.1fs", plan_secs);
    report(plan_secs < 120, "infinite plan simulation finishes within 2 minutes", pbuf);

    criterion("repeated runs give byte-identical output", determinism);

    std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("all criteria passed")) << std::endl;
    return failures ? 1 : 0;
}
