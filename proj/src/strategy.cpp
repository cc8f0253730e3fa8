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

#include "empg/strategy.hpp"

#include <istream>
#include <ostream>

namespace empg {

namespace {

// splitmix64, fixed so traces do not depend on the standard library
std::uint64_t
mix(std::uint64_t &s)
{
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

void
RandomHandle::reset(const GameStructure &g, std::size_t)
{
    g_ = &g;
    state_ = seed_;
}

std::size_t
RandomHandle::choose(std::size_t v)
{
    const auto &out = g_->out(v);
    return g_->edge(out[mix(state_) % out.size()]).to;
}

std::size_t
InteractiveHandle::choose(std::size_t v)
{
    for (;;) {
        out_ << "at " << g_->id(v) << ", successors:";
        for (std::size_t e : g_->out(v)) out_ << ' ' << g_->id(g_->edge(e).to);
        out_ << "\n> " << std::flush;
        std::string id;
        if (!(in_ >> id)) throw GameError("input closed during interactive play");
        auto w = g_->find(id);
        if (w && g_->find_edge(v, *w)) return *w;
        out_ << "not a successor\n";
    }
}

} // namespace empg
