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


#ifndef EMPG_TESTS_FIXTURES_HPP
#define EMPG_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "empg/game.hpp"

namespace fixtures {

struct E
{
    std::size_t from, to;
    long w1, w2;
};

inline empg::GameStructure
make(std::initializer_list<int> owners, std::initializer_list<E> edges, std::size_t initial = 0)
{
    std::vector<empg::VertexSpec> vs;
    int k = 0;
    for (int o : owners) vs.push_back({"v" + std::to_string(k++), o == 1 ? empg::Player::One : empg::Player::Two});
    std::vector<empg::Edge> es;
    for (const E &e : edges) es.push_back({e.from, e.to, empg::Weight2(e.w1, e.w2)});
    return empg::GameStructure(vs, es, initial);
}

// v0 loop (1,-1), v1 loop (-1,3), connectors (0,-1)
inline empg::GameStructure
two_loops(int o0 = 1)
{
    return make({o0, 1}, {{0, 0, 1, -1}, {0, 1, 0, -1}, {1, 1, -1, 3}, {1, 0, 0, -1}});
}

// same shape, loops cancel exactly
inline empg::GameStructure
balanced(int o0 = 1)
{
    return make({o0, 1}, {{0, 0, 1, -1}, {0, 1, 0, -1}, {1, 1, -1, 1}, {1, 0, 0, -1}});
}

// player-2 vertex v2 with a bad self-loop in front of two_loops
inline empg::GameStructure
trap()
{
    return make({1, 1, 2}, {{0, 0, 1, -1}, {0, 1, 0, -1}, {1, 1, -1, 3}, {1, 0, 0, -1}, {2, 2, 0, -1}, {2, 0, 0, 0}}, 2);
}

inline empg::ObjectiveSpec
spec(empg::MpKind k, empg::Cmp c, empg::Rational t = 0)
{
    empg::ObjectiveSpec s;
    s.kind = k;
    s.cmp = c;
    s.threshold = t;
    return s;
}

inline const empg::ObjectiveSpec strict = spec(empg::MpKind::Inf, empg::Cmp::Strict);
inline const empg::ObjectiveSpec nonstrict = spec(empg::MpKind::Inf, empg::Cmp::NonStrict);

inline std::vector<empg::ObjectiveSpec>
all_specs()
{
    using namespace empg;
    return {spec(MpKind::Inf, Cmp::Strict), spec(MpKind::Sup, Cmp::Strict), spec(MpKind::Inf, Cmp::NonStrict),
            spec(MpKind::Sup, Cmp::NonStrict)};
}

} // namespace fixtures

#endif
