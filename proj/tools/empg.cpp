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


#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

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

constexpr int kError = 3;

// exit code of a command whose answer is the requested player's win
int
answer_code(Answer a)
{
    return a == Answer::Yes ? 0 : a == Answer::No ? 1 : 2;
}

struct SpecArgs
{
    std::string mp = "inf", cmp = "ge", threshold = "0";

    void add(CLI::App *c, const std::string &default_cmp)
    {
        cmp = default_cmp;
        c->add_option("--mp", mp, "mean-payoff kind")->check(CLI::IsMember({"inf", "sup"}));
        c->add_option("--cmp", cmp, "gt for strict, ge for non-strict")->check(CLI::IsMember({"gt", "ge"}));
        c->add_option("--threshold", threshold, "rational threshold on dimension 2");
    }
    ObjectiveSpec spec() const
    {
        ObjectiveSpec s;
        s.kind = mp == "inf" ? MpKind::Inf : MpKind::Sup;
        s.cmp = cmp == "gt" ? Cmp::Strict : Cmp::NonStrict;
        s.threshold = parse_rational(threshold);
        return s;
    }
};

std::size_t
start_vertex(const GameStructure &g, const std::string &id)
{
    return id.empty() ? g.initial() : g.vertex(id);
}

Route
route_of(const std::string &r)
{
    return r == "enum" ? Route::Enumerate : r == "reduce" ? Route::Reduce : Route::Auto;
}

/**
 * Player-1 synthesis: Moore machine for strict specs, schedule for
 * one-player non-strict specs, infinite plan otherwise.
 */
struct Synthesis
{
    Answer answer = Answer::Unknown;
    std::string note;
    std::optional<Integer> credit;
    Json json;
    std::unique_ptr<StrategyHandle> handle;
    const InfiniteStrategyPlan *plan = nullptr;
};

Synthesis
synthesize_player1(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, std::int64_t cap)
{
    Synthesis out;
    if (spec.strict() && g.one_player()) {
        Verdict v = solve_one_player(g, v0, spec);
        out.answer = v.answer;
        if (v.answer != Answer::Yes) return out;
        const GameStructure gn = normalize_threshold(g, spec, 2).first;
        auto [s, c] = synthesize_strict(gn, v0, std::get<CycleWitness>(v.certificate));
        out.credit = c;
        out.json = strategy_to_json(s, g, "one-player/strict-lasso");
        out.handle = std::make_unique<MooreHandle>(std::move(s));
    } else if (spec.strict()) {
        Verdict v = solve_strict_pseudo_poly(g, v0, spec, cap);
        out.answer = v.answer;
        out.note = v.note;
        if (v.answer != Answer::Yes) return out;
        MooreStrategy s = std::get<MooreStrategy>(v.certificate);
        out.credit = v.initial_credit;
        out.json = strategy_to_json(s, g, v.route);
        out.handle = std::make_unique<MooreHandle>(std::move(s));
    } else if (g.one_player()) {
        Verdict v = solve_one_player(g, v0, spec);
        out.answer = v.answer;
        if (v.answer != Answer::Yes) return out;
        const GameStructure gn = normalize_threshold(g, spec, 2).first;
        ScheduleStrategy s = synthesize_nonstrict(gn, v0, std::get<MulticycleWitness>(v.certificate));
        out.credit = s.credit;
        out.json = schedule_to_json(s, g, "one-player/schedule");
        out.handle = std::make_unique<ScheduleStrategy>(std::move(s));
    } else {
        Verdict v = solve_two_player(g, v0, spec);
        out.answer = v.answer;
        if (v.answer != Answer::Yes) return out;
        auto plan = std::make_unique<InfiniteStrategyPlan>(InfiniteStrategyPlan::build(g, v0, spec));
        out.credit = plan->d0();
        out.json = plan_to_json(*plan, g);
        out.plan = plan.get();
        out.handle = std::move(plan);
    }
    if (out.credit) out.json["initial_credit"] = integer_json(*out.credit);
    out.json["objective"] = objective_json(spec);
    return out;
}

Synthesis
synthesize_player2(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, Route route, std::int64_t cap)
{
    Synthesis out;
    Verdict v = solve(g, v0, spec, route, cap);
    out.note = v.note;
    // player 2 wins exactly when player 1 does not
    out.answer = v.answer == Answer::No ? Answer::Yes : v.answer == Answer::Yes ? Answer::No : Answer::Unknown;
    if (out.answer != Answer::Yes) return out;
    MooreStrategy s = std::get<MooreStrategy>(v.certificate);
    out.json = strategy_to_json(s, g, v.route);
    out.json["objective"] = objective_json(spec);
    out.handle = std::make_unique<MooreHandle>(std::move(s));
    return out;
}

// strategy argument of simulate: file, random:SEED or schedule
Synthesis
strategy_argument(const std::string &arg, Player p, const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                  std::int64_t cap)
{
    Synthesis out;
    out.answer = Answer::Yes;
    if (arg.rfind("random:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(arg.substr(7));
        } catch (const std::exception &) {
            throw GameError("bad seed in '" + arg + "'");
        }
        out.handle = std::make_unique<RandomHandle>(seed);
        return out;
    }
    if (arg == "schedule") {
        out = p == Player::One ? synthesize_player1(g, v0, spec, cap) : synthesize_player2(g, v0, spec, Route::Auto, cap);
        if (out.answer != Answer::Yes) {
            throw GameError("player " + std::to_string(static_cast<int>(p)) + " has no winning strategy to simulate (" +
                            to_string(out.answer) + ")");
        }
        return out;
    }
    const Json j = load_json(arg);
    const std::string kind = j.value("kind", "");
    if (kind == "moore") {
        MooreStrategy s = strategy_from_json(j, g);
        if (s.player() != p) throw GameError(arg + ": strategy belongs to the other player");
        if (j.contains("initial_credit")) out.credit = integer_from_json(j["initial_credit"], "initial_credit");
        out.handle = std::make_unique<MooreHandle>(std::move(s));
    } else if (kind == "schedule") {
        if (p != Player::One) throw GameError(arg + ": schedules are player-1 strategies");
        ScheduleStrategy s = schedule_from_json(j, g);
        out.credit = s.credit;
        out.handle = std::make_unique<ScheduleStrategy>(std::move(s));
    } else if (kind == "infinite-plan") {
        if (p != Player::One) throw GameError(arg + ": plans are player-1 strategies");
        // plans are rebuilt deterministically from the game and objective
        PlanOptions opt;
        if (j.contains("lead")) opt.lead = j["lead"].get<int>();
        if (j.value("route", "") == "infinite-plan/gadget-levels") opt.route = LevelRoute::Gadget;
        const std::size_t start = g.vertex(j.at("initial").get<std::string>());
        auto plan = std::make_unique<InfiniteStrategyPlan>(InfiniteStrategyPlan::build(g, start, objective_from_json(j.at("objective")), opt));
        out.credit = plan->d0();
        out.plan = plan.get();
        out.handle = std::move(plan);
    } else {
        throw GameError(arg + ": unknown strategy kind '" + kind + "'");
    }
    return out;
}

std::vector<std::filesystem::path>
game_files(const std::string &dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

int
main(int argc, char **argv)
{
    CLI::App app{"empg: energy mean-payoff game solver"};
    app.require_subcommand(1);

    std::string game_path, initial, out_path = "-", map_path, route_name = "auto", s1_arg, s2_arg, credit_arg;
    std::int64_t cap = 0;
    std::size_t bound = 1000000, max_vertices = 6, random_count = 0;
    std::uint64_t steps = 1000, stride = 64, seed = 1;
    int player = 1;
    bool full_trace = false;

    auto *validate = app.add_subcommand("validate", "check a game file");
    validate->add_option("game", game_path)->required();

    auto *solve_cmd = app.add_subcommand("solve", "decide whether player 1 wins");
    SpecArgs solve_spec;
    solve_cmd->add_option("game", game_path)->required();
    solve_spec.add(solve_cmd, "gt");
    solve_cmd->add_option("--route", route_name)->check(CLI::IsMember({"enum", "reduce", "auto"}));
    solve_cmd->add_option("--cap", cap, "credit cap of the reduction route (0 = default)");
    solve_cmd->add_option("--bound", bound, "largest number of memoryless player-2 strategies to enumerate");
    solve_cmd->add_option("--initial", initial, "start vertex (defaults to the game's initial vertex)");

    auto *synth = app.add_subcommand("synthesize", "write a winning strategy");
    SpecArgs synth_spec;
    synth->add_option("game", game_path)->required();
    synth->add_option("--player", player)->check(CLI::IsMember({1, 2}));
    synth_spec.add(synth, "gt");
    synth->add_option("--cap", cap);
    synth->add_option("--initial", initial);
    synth->add_option("-o,--output", out_path);

    auto *sim = app.add_subcommand("simulate", "play two strategies against each other");
    SpecArgs sim_spec;
    sim->add_option("game", game_path)->required();
    sim->add_option("--s1", s1_arg, "file, random:SEED or schedule")->required();
    sim->add_option("--s2", s2_arg, "file, random:SEED or schedule")->required();
    sim_spec.add(sim, "ge");
    sim->add_option("--steps", steps)->check(CLI::PositiveNumber);
    sim->add_option("--credit", credit_arg, "initial credit (defaults to the one synthesized for player 1, else 0)");
    sim->add_option("--stride", stride)->check(CLI::PositiveNumber);
    sim->add_option("--cap", cap);
    sim->add_option("--initial", initial);
    sim->add_flag("--full", full_trace, "include every vertex and energy level");
    sim->add_option("-o,--output", out_path);

    auto *reduce = app.add_subcommand("reduce", "write the four-dimensional energy game");
    SpecArgs reduce_spec;
    reduce->add_option("game", game_path)->required();
    reduce->add_option("--threshold", reduce_spec.threshold, "move this dimension-2 threshold to 0 first");
    reduce->add_option("-o,--output", out_path);
    reduce->add_option("--map", map_path, "gadget map sidecar");

    auto *oc = app.add_subcommand("oracle-check", "run the equivalence suites");
    std::string dir;
    oc->add_option("dir", dir, "directory of game files");
    oc->add_option("--max-vertices", max_vertices);
    oc->add_option("--random", random_count, "also check this many random games");
    oc->add_option("--seed", seed);
    oc->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*validate) {
            try {
                const GameStructure g = load_game(game_path);
                Json j{{"route", "validate"}, {"valid", true}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()},
                       {"max_abs_weight", integer_json(g.max_abs_weight())}, {"one_player", g.one_player()}};
                save_json("-", j);
                return 0;
            } catch (const GameError &e) {
                save_json("-", Json{{"route", "validate"}, {"valid", false}, {"error", e.what()}});
                return kError;
            }
        }
        if (*solve_cmd) {
            const GameStructure g = load_game(game_path);
            const std::size_t v0 = start_vertex(g, initial);
            const ObjectiveSpec spec = solve_spec.spec();
            const Verdict v = solve(g, v0, spec, route_of(route_name), cap, bound);
            save_json("-", verdict_to_json(v, g, v0, spec));
            return answer_code(v.answer);
        }
        if (*synth) {
            const GameStructure g = load_game(game_path);
            const std::size_t v0 = start_vertex(g, initial);
            const ObjectiveSpec spec = synth_spec.spec();
            Synthesis s = player == 1 ? synthesize_player1(g, v0, spec, cap) : synthesize_player2(g, v0, spec, Route::Auto, cap);
            if (s.answer != Answer::Yes) {
                std::cerr << "player " << player << " has no winning strategy (" << to_string(s.answer) << ")"
                          << (s.note.empty() ? "" : ": " + s.note) << "\n";
                return answer_code(s.answer);
            }
            save_json(out_path, s.json);
            return 0;
        }
        if (*sim) {
            const GameStructure g = load_game(game_path);
            const std::size_t v0 = start_vertex(g, initial);
            const ObjectiveSpec spec = sim_spec.spec();
            Synthesis a = strategy_argument(s1_arg, Player::One, g, v0, spec, cap);
            Synthesis b = strategy_argument(s2_arg, Player::Two, g, v0, spec, cap);
            Integer credit = 0;
            if (!credit_arg.empty()) {
                credit = integer_from_json(Json(credit_arg), "--credit");
            } else if (a.credit) {
                credit = *a.credit;
            }
            SimulationOptions opt;
            opt.stride = stride;
            opt.keep_vertices = opt.keep_energy = full_trace;
            const TraceReport r = simulate(g, v0, *a.handle, *b.handle, steps, credit, opt);
            Json j = trace_to_json(r, g);
            j["objective"] = objective_json(spec);
            j["strategies"] = {{"s1", a.handle->kind()}, {"s2", b.handle->kind()}};
            if (r.lasso) j["lasso_verdict"] = to_string(check_lasso_objective(r, spec));
            if (a.plan) j["plan"] = plan_run_to_json(*a.plan, g);
            save_json(out_path, j);
            return r.first_violation ? 1 : 0;
        }
        if (*reduce) {
            const GameStructure g0 = load_game(game_path);
            ObjectiveSpec spec;
            spec.threshold = parse_rational(reduce_spec.threshold);
            const GameStructure g = normalize_threshold(g0, spec, 2).first;
            auto [meg, map] = to_energy4(g);
            save_json(out_path, energy_game_to_json(meg, "reduction/gadget"));
            if (!map_path.empty()) save_json(map_path, gadget_map_to_json(map, g, meg));
            return 0;
        }
        if (*oc) {
            oracle::SuiteTally t;
            std::size_t skipped = 0;
            auto run = [&](const GameStructure &g, const std::string &name) {
                if (g.num_vertices() > max_vertices) {
                    skipped++;
                    return;
                }
                if (g.one_player()) oracle::check_lp_detectors(g, name, t);
                oracle::check_routes(g, name, cap > 0 ? cap : default_cap(g, ObjectiveSpec{}), t);
                oracle::check_inf_sup(g, name, t);
            };
            if (!dir.empty()) {
                for (const auto &f : game_files(dir)) run(load_game(f.string()), f.filename().string());
            }
            oracle::RandomGameParams rp;
            rp.max_vertices = std::max<std::size_t>(1, max_vertices);
            for (std::size_t k = 0; k < random_count; k++) {
                rp.player2_probability = k % 2 ? 0.4 : 0.0;
                run(oracle::random_game(seed + k, rp), "random:" + std::to_string(seed + k));
            }
            Json j{{"route", "oracle-check"},
                   {"lp", {{"instances", t.lp_instances}, {"mismatches", t.lp_mismatches}}},
                   {"routes", {{"instances", t.route_instances}, {"mismatches", t.route_mismatches}, {"unknown", t.route_unknown}}},
                   {"inf_sup", {{"instances", t.mp_instances}, {"mismatches", t.mp_mismatches}}},
                   {"skipped", skipped},
                   {"failures", t.failures}};
            save_json("-", j);
            return t.mismatches() ? 1 : 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
