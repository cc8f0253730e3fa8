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


#ifndef EMPG_JSON_IO_HPP
#define EMPG_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "empg/cycle_detect.hpp"
#include "empg/game.hpp"
#include "empg/infinite_plan.hpp"
#include "empg/moore.hpp"
#include "empg/multi_energy.hpp"
#include "empg/one_player.hpp"
#include "empg/reduction.hpp"
#include "empg/simulator.hpp"
#include "empg/verdict.hpp"

namespace empg {

// keys keep insertion order so output is stable and readable
using Json = nlohmann::ordered_json;

// parse errors carry "line L, column C" of the offending byte
Json parse_json(std::string_view text);
Json load_json(const std::string &path);
void save_json(const std::string &path, const Json &j); // "-" writes to stdout
std::string dump(const Json &j);

// integers as JSON numbers when they fit 64 bits, as decimal strings otherwise
Json integer_json(const Integer &z);
Integer integer_from_json(const Json &j, const std::string &where);
Json rational_json(const Rational &q); // "p/q" or "p"

GameStructure game_from_json(const Json &j);
GameStructure parse_game(std::string_view text);
GameStructure load_game(const std::string &path);
Json game_to_json(const GameStructure &g);

Json energy_game_to_json(const MultiEnergyGame &meg, const std::string &route);
Json gadget_map_to_json(const GadgetMap &map, const GameStructure &g, const MultiEnergyGame &meg);

Json objective_json(const ObjectiveSpec &spec);
ObjectiveSpec objective_from_json(const Json &j);

Json strategy_to_json(const MooreStrategy &s, const GameStructure &g, const std::string &route);
MooreStrategy strategy_from_json(const Json &j, const GameStructure &g);

Json cycle_witness_to_json(const CycleWitness &w, const GameStructure &g);
Json multicycle_witness_to_json(const MulticycleWitness &w, const GameStructure &g);
Json verdict_to_json(const Verdict &v, const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec);

Json schedule_to_json(const ScheduleStrategy &s, const GameStructure &g, const std::string &route);
ScheduleStrategy schedule_from_json(const Json &j, const GameStructure &g);

// levels computed so far; strategies are included when requested
Json plan_to_json(const InfiniteStrategyPlan &p, const GameStructure &g, bool with_strategies = true);
// runtime record of one play driven by the plan
Json plan_run_to_json(const InfiniteStrategyPlan &p, const GameStructure &g);

Json trace_to_json(const TraceReport &r, const GameStructure &g);

} // namespace empg

#endif
