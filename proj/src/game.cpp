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

#include "empg/game.hpp"

#include <algorithm>
#include <limits>

namespace empg {

std::string
to_string(const Integer &z)
{
    return z.get_str();
}

std::string
to_string(const Rational &q)
{
    return q.get_str();
}

Rational
parse_rational(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
        throw GameError("malformed rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::int64_t
to_int64(const Integer &z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

GameStructure::GameStructure(std::vector<VertexSpec> vertices, std::vector<Edge> edges, std::size_t initial)
    : edges_(std::move(edges)), initial_(initial)
{
    const std::size_t n = vertices.size();
    if (n == 0) throw GameError("game has no vertices");
    ids_.reserve(n);
    owners_.reserve(n);
    for (std::size_t v = 0; v < n; v++) {
        if (vertices[v].owner != Player::One && vertices[v].owner != Player::Two) {
            throw GameError("vertex '" + vertices[v].id + "' has invalid owner");
        }
        if (!index_.emplace(vertices[v].id, v).second) {
            throw GameError("duplicate vertex id '" + vertices[v].id + "'");
        }
        ids_.push_back(std::move(vertices[v].id));
        owners_.push_back(vertices[v].owner);
    }
    if (initial_ >= n) throw GameError("initial vertex out of range");
    out_.assign(n, {});
    in_.assign(n, {});
    max_abs_ = 0;
    for (std::size_t e = 0; e < edges_.size(); e++) {
        const Edge &ed = edges_[e];
        if (ed.from >= n || ed.to >= n) throw GameError("edge endpoint out of range");
        for (std::size_t f : out_[ed.from]) {
            if (edges_[f].to == ed.to) {
                throw GameError("duplicate edge " + ids_[ed.from] + " -> " + ids_[ed.to]);
            }
        }
        out_[ed.from].push_back(e);
        in_[ed.to].push_back(e);
        max_abs_ = std::max(max_abs_, Integer(abs(ed.weight.w1)));
        max_abs_ = std::max(max_abs_, Integer(abs(ed.weight.w2)));
    }
    for (std::size_t v = 0; v < n; v++) {
        if (out_[v].empty()) throw GameError("vertex '" + ids_[v] + "' has no outgoing edge");
    }
}

std::optional<std::size_t>
GameStructure::find(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t
GameStructure::vertex(std::string_view id) const
{
    auto v = find(id);
    if (!v) throw GameError("unknown vertex '" + std::string(id) + "'");
    return *v;
}

std::optional<std::size_t>
GameStructure::find_edge(std::size_t from, std::size_t to) const
{
    for (std::size_t e : out_[from]) {
        if (edges_[e].to == to) return e;
    }
    return std::nullopt;
}

bool
GameStructure::one_player() const
{
    return std::all_of(owners_.begin(), owners_.end(), [](Player p) { return p == Player::One; });
}

std::vector<VertexSpec>
GameStructure::vertex_specs() const
{
    std::vector<VertexSpec> res;
    res.reserve(ids_.size());
    for (std::size_t v = 0; v < ids_.size(); v++) res.push_back({ids_[v], owners_[v]});
    return res;
}

GameStructure
GameStructure::with_initial(std::size_t v) const
{
    if (v >= num_vertices()) throw GameError("initial vertex out of range");
    GameStructure g = *this;
    g.initial_ = v;
    return g;
}

std::string
to_string(const ObjectiveSpec &spec)
{
    std::string s = spec.kind == MpKind::Inf ? "MP-inf" : "MP-sup";
    s += spec.cmp == Cmp::Strict ? " > " : " >= ";
    return s + spec.threshold.get_str();
}

std::pair<GameStructure, ObjectiveSpec>
normalize_threshold(const GameStructure &g, const ObjectiveSpec &spec, int dim)
{
    if (dim != 1 && dim != 2) throw GameError("dimension must be 1 or 2");
    Rational t = spec.threshold;
    t.canonicalize();
    const Integer a = t.get_num();
    const Integer b = t.get_den();
    std::vector<Edge> edges = g.edges();
    for (Edge &e : edges) {
        Integer &w = dim == 1 ? e.weight.w1 : e.weight.w2;
        w = b * w - a;
    }
    ObjectiveSpec out = spec;
    out.threshold = 0;
    return {GameStructure(g.vertex_specs(), std::move(edges), g.initial()), out};
}

PlayPrefix::PlayPrefix(const GameStructure &g, std::vector<std::size_t> vertices)
    : vertices_(std::move(vertices))
{
    if (vertices_.empty()) throw GameError("empty play prefix");
    for (std::size_t v : vertices_) {
        if (v >= g.num_vertices()) throw GameError("play vertex out of range");
    }
    sum1_.reserve(vertices_.size());
    sum2_.reserve(vertices_.size());
    sum1_.emplace_back(0);
    sum2_.emplace_back(0);
    for (std::size_t k = 0; k + 1 < vertices_.size(); k++) {
        auto e = g.find_edge(vertices_[k], vertices_[k + 1]);
        if (!e) throw GameError("no edge " + g.id(vertices_[k]) + " -> " + g.id(vertices_[k + 1]));
        edges_.push_back(*e);
        sum1_.push_back(sum1_.back() + g.edge(*e).weight.w1);
        sum2_.push_back(sum2_.back() + g.edge(*e).weight.w2);
    }
}

const Integer &
PlayPrefix::level(int dim, std::size_t k) const
{
    if (k > edges_.size()) throw std::out_of_range("prefix index out of range");
    if (dim != 1 && dim != 2) throw std::out_of_range("dimension must be 1 or 2");
    return dim == 1 ? sum1_[k] : sum2_[k];
}

Integer
energy_level(const PlayPrefix &p, int dim, std::size_t k)
{
    return p.level(dim, k);
}

Rational
running_average(const PlayPrefix &p, int dim, std::size_t k)
{
    if (k == 0) throw std::out_of_range("running average needs k >= 1");
    Rational q(p.level(dim, k), Integer(static_cast<unsigned long>(k)));
    q.canonicalize();
    return q;
}

Weight2
weight_of(const GameStructure &g, const std::vector<std::size_t> &edges)
{
    Weight2 w(0, 0);
    for (std::size_t e : edges) w += g.edge(e).weight;
    return w;
}

Cycle
rotate_at(const Cycle &c, std::size_t pos)
{
    Cycle r;
    const std::size_t k = c.length();
    for (std::size_t j = 0; j < k; j++) {
        r.vertices.push_back(c.vertices[(pos + j) % k]);
        r.edges.push_back(c.edges[(pos + j) % k]);
    }
    return r;
}

Cycle
rotate_to(const Cycle &c, std::size_t v)
{
    auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
    if (it == c.vertices.end()) throw GameError("vertex not on cycle");
    return rotate_at(c, static_cast<std::size_t>(it - c.vertices.begin()));
}

CycleDecomposition
cycle_decomposition(const PlayPrefix &p)
{
    // stack of vertices with the edges between them; pos maps a vertex to its stack slot
    CycleDecomposition res;
    std::unordered_map<std::size_t, std::size_t> pos;
    auto &sv = res.stack.vertices;
    auto &se = res.stack.edges;
    const auto &vs = p.vertices();
    sv.push_back(vs[0]);
    pos[vs[0]] = 0;
    for (std::size_t k = 1; k < vs.size(); k++) {
        const std::size_t v = vs[k];
        se.push_back(p.edges()[k - 1]);
        auto it = pos.find(v);
        if (it == pos.end()) {
            pos[v] = sv.size();
            sv.push_back(v);
            continue;
        }
        const std::size_t at = it->second;
        Cycle c;
        c.vertices.assign(sv.begin() + static_cast<std::ptrdiff_t>(at), sv.end());
        c.edges.assign(se.begin() + static_cast<std::ptrdiff_t>(at), se.end());
        for (std::size_t j = at + 1; j < sv.size(); j++) pos.erase(sv[j]);
        sv.resize(at + 1);
        se.resize(at);
        res.cycles.push_back(std::move(c));
    }
    return res;
}

} // namespace empg
