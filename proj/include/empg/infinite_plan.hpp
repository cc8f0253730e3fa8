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


#ifndef EMPG_INFINITE_PLAN_HPP
#define EMPG_INFINITE_PLAN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "empg/game.hpp"
#include "empg/graph.hpp"
#include "empg/moore.hpp"
#include "empg/strategy.hpp"

namespace empg {

enum class LevelRoute {
    Energy2, // (w1, w2') as a two-dimensional energy game
    Gadget   // four-dimensional gadget game and pull-back
};

struct PlanOptions
{
    LevelRoute route = LevelRoute::Energy2;
    int max_kappa_level = 16; // give up when credits have not settled by then
    int max_level = 40;       // hard ceiling for the level counter
    int max_attempts = 40;    // cap doublings per level
    // level i plays for -1/2^(i+lead); a positive lead keeps a margin over the level's own threshold
    int lead = 1;
};

/**
 * Level i: the game restricted to the winning region with dimension-2
 * weights w2' = 2^(i+lead) * w2 + 1 after moving the threshold to 0. Its
 * strategies keep every cycle average of w2 above -1/2^i.
 */
struct PlanLevel
{
    int index = 0;
    std::vector<std::int64_t> cap; // caps of the successful fixpoint
    std::vector<Integer> credit;   // c_i per vertex of the region
    std::vector<MooreStrategy> strategy;
    std::vector<std::size_t> memory;
    std::vector<std::size_t> product_size; // |Win| * memory
};

struct PlanSwitch
{
    std::uint64_t step = 0; // edges played before the switch
    int level = 0;          // level entered
    std::size_t vertex = npos;
    Integer delta;
    Integer energy;
};

/**
 * Infinite-memory player-1 strategy for the non-strict variants: plays
 * the level-i strategy from the vertex where level i started and moves to
 * level i+1 once w2(prefix) > N_{i+1}(v) * W - |prefix| / 2^i.
 */
class InfiniteStrategyPlan : public StrategyHandle
{
public:
    static InfiniteStrategyPlan build(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                                      PlanOptions options = {});
    // with a winning region computed elsewhere
    static InfiniteStrategyPlan build(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                                      const std::vector<bool> &win, PlanOptions options = {});

    void reset(const GameStructure &g, std::size_t start) override;
    std::size_t choose(std::size_t v) override;
    void observe(std::size_t from, std::size_t to) override;
    std::string kind() const override { return "infinite-plan"; }

    const std::vector<bool> &winning_set() const;
    std::size_t initial() const;
    const Integer &kappa() const;
    const Integer &gamma() const;
    const Integer &d0() const;
    const ObjectiveSpec &objective() const;
    const PlanOptions &options() const;
    // level i >= 1, computed on first use
    const PlanLevel &level(int i) const;
    int levels_computed() const;
    // dimension-2 weight bound of the normalized region game
    const Integer &weight_bound() const;

    // runtime view
    int current_level() const { return level_; }
    std::uint64_t steps() const { return len_; }
    const std::vector<PlanSwitch> &switches() const { return switches_; }
    std::uint64_t staircase_violations() const { return staircase_bad_; }
    std::uint64_t delta_violations() const { return delta_bad_; }
    // first few violation messages
    const std::vector<std::string> &violations() const { return messages_; }
    // smallest value of 2^(i-1) * w2(prefix) + |prefix| seen at levels i >= 2 (nonnegative when the staircase holds)
    const std::optional<Integer> &staircase_slack() const { return slack_; }
    // a level could not be solved; the plan keeps its current level
    bool stuck() const { return stuck_; }

private:
    struct Data;
    std::shared_ptr<Data> data_;

    void note(const std::string &msg);

    const GameStructure *g_ = nullptr;
    int level_ = 1;
    std::size_t seg_ = npos, m_ = 0;
    std::uint64_t len_ = 0;
    __int128 w2_ = 0;
    Integer energy_, delta_;
    std::vector<PlanSwitch> switches_;
    std::uint64_t staircase_bad_ = 0, delta_bad_ = 0;
    std::vector<std::string> messages_;
    std::optional<Integer> slack_;
    bool stuck_ = false;
};

} // namespace empg

#endif
