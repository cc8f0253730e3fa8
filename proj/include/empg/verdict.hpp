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

#ifndef EMPG_VERDICT_HPP
#define EMPG_VERDICT_HPP

#include <optional>
#include <string>
#include <variant>

#include "empg/cycle_detect.hpp"
#include "empg/moore.hpp"

namespace empg {

enum class Answer { Yes, No, Unknown };

inline const char *
to_string(Answer a)
{
    return a == Answer::Yes ? "Yes" : a == Answer::No ? "No" : "Unknown";
}

struct Verdict
{
    Answer answer = Answer::Unknown;
    std::optional<Integer> initial_credit;
    // witness for Yes, memoryless P2 strategy for No, a P1 strategy for
    // reduction-route Yes answers
    std::variant<std::monostate, CycleWitness, MulticycleWitness, MooreStrategy> certificate;
    std::string route;
    std::string note;
};

} // namespace empg

#endif
