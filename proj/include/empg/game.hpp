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

#ifndef EMPG_GAME_HPP
#define EMPG_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace empg {

using Integer = mpz_class;
using Rational = mpq_class;

constexpr std::size_t npos = static_cast<std::size_t>(-1);

class GameError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const Integer &z);
std::string to_string(const Rational &q);
Rational parse_rational(std::string_view text);
// throws std::overflow_error when z does not fit
std::int64_t to_int64(const Integer &z);

enum class Player : std::uint8_t { One = 1, Two = 2 };

constexpr Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }

struct Weight2
{
    Integer w1;
    Integer w2;

    Weight2() = default;
    Weight2(Integer a, Integer b) : w1(std::move(a)), w2(std::move(b)) {}

    const Integer &operator[](int dim) const { return dim == 1 ? w1 : w2; }

    Weight2 &operator+=(const Weight2 &o) { w1 += o.w1; w2 += o.w2; return *this; }
    friend Weight2 operator+(Weight2 a, const Weight2 &b) { a += b; return a; }
    friend Weight2 operator*(const Integer &k, const Weight2 &a) { return Weight2(k * a.w1, k * a.w2); }
    friend bool operator==(const Weight2 &a, const Weight2 &b) { return a.w1 == b.w1 && a.w2 == b.w2; }
};

struct Edge
{
    std::size_t from;
    std::size_t to;
    Weight2 weight;
};

struct VertexSpec
{
    std::string id;
    Player owner;
};

/**
 * Weighted game graph with dense vertex indices.
 * Edges form a set: at most one edge per ordered vertex pair.
 */
class GameStructure
{
public:
    GameStructure() = default;
    GameStructure(std::vector<VertexSpec> vertices, std::vector<Edge> edges, std::size_t initial = 0);

    std::size_t num_vertices() const { return ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const Integer &max_abs_weight() const { return max_abs_; }

    const std::string &id(std::size_t v) const { return ids_[v]; }
    Player owner(std::size_t v) const { return owners_[v]; }
    std::size_t initial() const { return initial_; }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::size_t> &out(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t> &in(std::size_t v) const { return in_[v]; }

    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t vertex(std::string_view id) const; // throws GameError
    std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;

    bool one_player() const;
    std::vector<VertexSpec> vertex_specs() const;
    GameStructure with_initial(std::size_t v) const;

private:
    std::vector<std::string> ids_;
    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::unordered_map<std::string, std::size_t> index_;
    Integer max_abs_;
    std::size_t initial_ = 0;
};

enum class MpKind : std::uint8_t { Inf, Sup };
enum class Cmp : std::uint8_t { Strict, NonStrict };

struct ObjectiveSpec
{
    MpKind kind = MpKind::Inf;
    Cmp cmp = Cmp::Strict;
    Rational threshold = 0;

    bool strict() const { return cmp == Cmp::Strict; }
};

std::string to_string(const ObjectiveSpec &spec);

/**
 * Replaces the weight on dimension dim by b*w - a where a/b is the
 * threshold in lowest terms. Returns the game and the spec with threshold 0.
 */
std::pair<GameStructure, ObjectiveSpec> normalize_threshold(const GameStructure &g, const ObjectiveSpec &spec, int dim = 2);

/**
 * Finite play prefix with cached running sums.
 */
class PlayPrefix
{
public:
    PlayPrefix(const GameStructure &g, std::vector<std::size_t> vertices);

    std::size_t length() const { return edges_.size(); }
    const std::vector<std::size_t> &vertices() const { return vertices_; }
    const std::vector<std::size_t> &edges() const { return edges_; }
    const Integer &level(int dim, std::size_t k) const;

private:
    std::vector<std::size_t> vertices_;
    std::vector<std::size_t> edges_;
    std::vector<Integer> sum1_, sum2_;
};

Integer energy_level(const PlayPrefix &p, int dim, std::size_t k);
Rational running_average(const PlayPrefix &p, int dim, std::size_t k);

/**
 * Simple cycle given by its vertices v_0 .. v_{k-1} and edges, edge j
 * leading from vertices[j] to vertices[(j+1) % k].
 */
struct Cycle
{
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    std::size_t length() const { return edges.size(); }
    bool operator==(const Cycle &) const = default;
};

/**
 * Path given by its vertices and the edges between consecutive vertices.
 * An empty path has one vertex and no edges.
 */
struct Path
{
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    std::size_t length() const { return edges.size(); }
    std::size_t source() const { return vertices.front(); }
    std::size_t target() const { return vertices.back(); }
};

Weight2 weight_of(const GameStructure &g, const std::vector<std::size_t> &edges);
inline Weight2 weight_of(const GameStructure &g, const Cycle &c) { return weight_of(g, c.edges); }
inline Weight2 weight_of(const GameStructure &g, const Path &p) { return weight_of(g, p.edges); }

// rotate so that the cycle starts at vertex v (which must lie on it)
Cycle rotate_to(const Cycle &c, std::size_t v);
Cycle rotate_at(const Cycle &c, std::size_t pos);

struct CycleDecomposition
{
    std::vector<Cycle> cycles;
    Path stack;
};

CycleDecomposition cycle_decomposition(const PlayPrefix &p);

} // namespace empg

#endif
