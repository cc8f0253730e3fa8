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

#ifndef EMPG_STRATEGY_HPP
#define EMPG_STRATEGY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "empg/game.hpp"
#include "empg/moore.hpp"

namespace empg {

/**
 * Uniform runtime interface over all strategy kinds. The simulator calls
 * reset once, then for every step choose (only at owned vertices) and
 * observe (always, for both players).
 */
class StrategyHandle
{
public:
    virtual ~StrategyHandle() = default;

    virtual void reset(const GameStructure &g, std::size_t start) = 0;
    virtual std::size_t choose(std::size_t v) = 0;
    virtual void observe(std::size_t from, std::size_t to) = 0;

    // current memory state when the strategy is a finite Moore machine
    virtual std::optional<std::size_t> memory() const { return std::nullopt; }
    virtual std::string kind() const = 0;
};

class MooreHandle : public StrategyHandle
{
public:
    explicit MooreHandle(MooreStrategy s) : s_(std::move(s)) {}

    void reset(const GameStructure &, std::size_t) override { m_ = s_.initial(); }
    std::size_t choose(std::size_t v) override { return s_.next(m_, v); }
    void observe(std::size_t from, std::size_t) override { m_ = s_.update(m_, from); }
    std::optional<std::size_t> memory() const override { return m_; }
    std::string kind() const override { return "moore"; }

    const MooreStrategy &strategy() const { return s_; }

private:
    MooreStrategy s_;
    std::size_t m_ = 0;
};

// uniform choice among successors; deterministic for a given seed
class RandomHandle : public StrategyHandle
{
public:
    explicit RandomHandle(std::uint64_t seed) : seed_(seed) {}

    void reset(const GameStructure &g, std::size_t) override;
    std::size_t choose(std::size_t v) override;
    void observe(std::size_t, std::size_t) override {}
    std::string kind() const override { return "random"; }

private:
    std::uint64_t seed_, state_ = 0;
    const GameStructure *g_ = nullptr;
};

// reads successor ids from a stream, one per decision
class InteractiveHandle : public StrategyHandle
{
public:
    InteractiveHandle(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

    void reset(const GameStructure &g, std::size_t) override { g_ = &g; }
    std::size_t choose(std::size_t v) override;
    void observe(std::size_t, std::size_t) override {}
    std::string kind() const override { return "interactive"; }

private:
    std::istream &in_;
    std::ostream &out_;
    const GameStructure *g_ = nullptr;
};

} // namespace empg

#endif
