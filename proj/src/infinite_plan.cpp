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


#include "empg/infinite_plan.hpp"

#include <algorithm>
#include <limits>

#include "empg/multi_energy.hpp"
#include "empg/reduction.hpp"
#include "empg/two_player.hpp"

namespace empg {

namespace {

Integer
from_i128(__int128 x)
{
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

std::int64_t
checked(const Integer &z, const char *what)
{
    if (!z.fits_slong_p()) throw GameError(std::string(what) + " does not fit in 64 bits");
    return z.get_si();
}

} // namespace

struct InfiniteStrategyPlan::Data
{
    ObjectiveSpec spec;
    PlanOptions options;
    std::size_t v0 = npos; // original index
    std::vector<bool> win;
    std::vector<std::size_t> to_original, from_original;
    GameStructure base; // region game, threshold moved to 0
    Integer W = 1, W1 = 1;
    // dense weight tables over region indices
    std::vector<std::int64_t> w1, w2;
    std::vector<char> has;
    std::vector<PlanLevel> levels; // levels[i-1]
    Integer kappa, gamma, d0;

    std::size_t n() const { return to_original.size(); }
    const PlanLevel &get(int i);
    PlanLevel solve_energy2(int i) const;
    PlanLevel solve_gadget(int i) const;
};

PlanLevel
InfiniteStrategyPlan::Data::solve_energy2(int i) const
{
    // energy on 2^(i+lead) * w2 + 1 keeps every cycle average at or above -1/2^(i+lead)
    if (options.lead < 1) throw GameError("the energy route needs a positive lead");
    const std::size_t nn = n();
    std::vector<MultiEdge> es;
    Integer Wi = 1;
    for (const Edge &ed : base.edges()) {
        const Integer w2 = (Integer(1) << (i + options.lead)) * ed.weight.w2 + 1;
        Wi = std::max<Integer>(Wi, abs(w2));
        es.push_back({ed.from, ed.to, {checked(ed.weight.w1, "weight"), checked(w2, "level weight")}});
    }
    const MultiEnergyGame meg(base.vertex_specs(), std::move(es), 2, base.initial());
    const GraphView gv = meg.graph_view();
    for (int t = 0; t < options.max_attempts; t++) {
        const Vec cap{checked(nn * W1 * (Integer(1) << (t / 2)), "cap"), checked(Wi * (Integer(1) << t), "cap")};
        EnergySolution sol = solve_unknown_credit(meg, cap);
        if (!std::all_of(sol.winning.begin(), sol.winning.end(), [](bool b) { return b; })) continue;
        PlanLevel L;
        L.index = i;
        L.cap = cap;
        for (std::size_t v = 0; v < nn; v++) {
            L.credit.emplace_back(static_cast<long>(*sol.credits.min_first(v)));
            L.strategy.push_back(sol.strategy.trimmed(gv, v).minimized());
        }
        return L;
    }
    throw GameError("level " + std::to_string(i) + " not solved within " + std::to_string(options.max_attempts) +
                    " attempts");
}

PlanLevel
InfiniteStrategyPlan::Data::solve_gadget(int i) const
{
    std::vector<Edge> es = base.edges();
    for (Edge &e : es) e.weight.w2 = (Integer(1) << (i + options.lead)) * e.weight.w2 + 1;
    const GameStructure gi(base.vertex_specs(), std::move(es), base.initial());
    auto [meg, map] = to_energy4(gi);
    for (int t = 0; t < options.max_attempts; t++) {
        const std::int64_t cap = std::int64_t(1) << t;
        EnergySolution sol = solve_unknown_credit(meg, cap);
        bool all = true;
        for (std::size_t v = 0; v < n(); v++) all = all && sol.winning[v];
        if (!all) continue;
        PlanLevel L;
        L.index = i;
        L.cap.assign(4, cap);
        for (std::size_t v = 0; v < n(); v++) {
            L.credit.emplace_back(static_cast<long>(*sol.credits.min_first(v)));
            L.strategy.push_back(pull_back_strategy(sol.strategy, gi, map, v));
        }
        return L;
    }
    throw GameError("level " + std::to_string(i) + " not solved within " + std::to_string(options.max_attempts) +
                    " attempts");
}

const PlanLevel &
InfiniteStrategyPlan::Data::get(int i)
{
    if (i < 1) throw GameError("levels start at 1");
    if (i > options.max_level) throw GameError("level " + std::to_string(i) + " exceeds the level limit");
    while (static_cast<int>(levels.size()) < i) {
        const int k = static_cast<int>(levels.size()) + 1;
        PlanLevel L = options.route == LevelRoute::Gadget ? solve_gadget(k) : solve_energy2(k);
        for (const MooreStrategy &s : L.strategy) {
            L.memory.push_back(s.memory_size());
            L.product_size.push_back(n() * s.memory_size());
        }
        levels.push_back(std::move(L));
    }
    return levels[i - 1];
}

InfiniteStrategyPlan
InfiniteStrategyPlan::build(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec, PlanOptions options)
{
    if (spec.strict()) throw GameError("infinite plans are built for the non-strict variants");
    return build(g, v0, spec, winning_region(g, spec), options);
}

InfiniteStrategyPlan
InfiniteStrategyPlan::build(const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec,
                            const std::vector<bool> &win, PlanOptions options)
{
    if (spec.strict()) throw GameError("infinite plans are built for the non-strict variants");
    if (v0 >= g.num_vertices() || win.size() != g.num_vertices()) throw GameError("bad start vertex or region");
    if (!win[v0]) throw GameError("player 1 does not win from " + g.id(v0));

    InfiniteStrategyPlan p;
    auto d = std::make_shared<Data>();
    d->spec = spec;
    d->options = options;
    d->v0 = v0;
    d->win = win;
    Subgraph sub = induced_subgraph(g, win, v0);
    if (!sub.game) throw GameError("winning region has vertices without successors");
    d->to_original = sub.to_original;
    d->from_original = sub.from_original;
    d->base = normalize_threshold(*sub.game, spec).first;

    const std::size_t nn = d->n();
    d->w1.assign(nn * nn, 0);
    d->w2.assign(nn * nn, 0);
    d->has.assign(nn * nn, 0);
    for (const Edge &e : d->base.edges()) {
        d->w1[e.from * nn + e.to] = checked(e.weight.w1, "weight");
        d->w2[e.from * nn + e.to] = checked(e.weight.w2, "weight");
        d->has[e.from * nn + e.to] = 1;
        d->W = std::max<Integer>(d->W, abs(e.weight.w2));
        d->W1 = std::max<Integer>(d->W1, abs(e.weight.w1));
    }

    // kappa: first level after which no credit changes
    int kappa = 0;
    for (int i = 1; i <= options.max_kappa_level; i++) {
        if (d->get(i).credit == d->get(i + 1).credit) {
            kappa = i;
            break;
        }
    }
    if (kappa == 0)
        throw GameError("credits did not settle by level " + std::to_string(options.max_kappa_level));
    d->kappa = kappa;
    d->gamma = 0;
    for (int i = 1; i < kappa; i++) {
        for (std::size_t v = 0; v < nn; v++)
            d->gamma = std::max<Integer>(d->gamma, d->get(i + 1).credit[v] - d->get(i).credit[v]);
    }
    d->d0 = d->kappa * d->gamma + d->get(1).credit[d->from_original[v0]];
    p.data_ = std::move(d);
    return p;
}

const std::vector<bool> &InfiniteStrategyPlan::winning_set() const { return data_->win; }
std::size_t InfiniteStrategyPlan::initial() const { return data_->v0; }
const Integer &InfiniteStrategyPlan::kappa() const { return data_->kappa; }
const Integer &InfiniteStrategyPlan::gamma() const { return data_->gamma; }
const Integer &InfiniteStrategyPlan::d0() const { return data_->d0; }
const ObjectiveSpec &InfiniteStrategyPlan::objective() const { return data_->spec; }
const PlanOptions &InfiniteStrategyPlan::options() const { return data_->options; }
const PlanLevel &InfiniteStrategyPlan::level(int i) const { return data_->get(i); }
int InfiniteStrategyPlan::levels_computed() const { return static_cast<int>(data_->levels.size()); }
const Integer &InfiniteStrategyPlan::weight_bound() const { return data_->W; }

void
InfiniteStrategyPlan::note(const std::string &msg)
{
    if (messages_.size() < 16) messages_.push_back(msg);
}

void
InfiniteStrategyPlan::reset(const GameStructure &g, std::size_t start)
{
    if (g.num_vertices() != data_->win.size()) throw GameError("plan belongs to a different game");
    if (start >= g.num_vertices() || !data_->win[start]) throw GameError("plan started outside its winning region");
    g_ = &g;
    level_ = 1;
    seg_ = data_->from_original[start];
    m_ = data_->get(1).strategy[seg_].initial();
    len_ = 0;
    w2_ = 0;
    delta_ = data_->kappa * data_->gamma;
    energy_ = delta_ + data_->get(1).credit[seg_];
    switches_.clear();
    staircase_bad_ = delta_bad_ = 0;
    messages_.clear();
    slack_.reset();
    stuck_ = false;
}

std::size_t
InfiniteStrategyPlan::choose(std::size_t v)
{
    const std::size_t x = data_->from_original[v];
    if (x == npos) throw GameError("play left the winning region at " + g_->id(v));
    const std::size_t y = data_->get(level_).strategy[seg_].next(m_, x);
    if (y == npos) throw GameError("plan has no move at " + g_->id(v));
    return data_->to_original[y];
}

void
InfiniteStrategyPlan::observe(std::size_t from, std::size_t to)
{
    Data &d = *data_;
    const std::size_t x = d.from_original[from], y = d.from_original[to];
    if (x == npos || y == npos) throw GameError("play left the winning region at " + g_->id(to));
    const std::size_t nn = d.n();
    if (!d.has[x * nn + y]) throw GameError("no edge " + g_->id(from) + " -> " + g_->id(to));
    m_ = d.get(level_).strategy[seg_].update(m_, x);
    len_++;
    w2_ += d.w2[x * nn + y];
    energy_ += d.w1[x * nn + y];

    const __int128 len = len_;
    const __int128 W = checked(d.W, "weight bound");
    const auto pw = [](int k) { return static_cast<__int128>(1) << k; };

    // running average on dimension 2
    if (level_ >= 2) {
        const __int128 s = pw(level_ - 1) * w2_ + len;
        if (!slack_ || from_i128(s) < *slack_) slack_ = from_i128(s);
        if (s < 0) {
            staircase_bad_++;
            note("average below -1/2^" + std::to_string(level_ - 1) + " at step " + std::to_string(len_));
        }
    } else {
        const __int128 N = d.get(1).product_size[d.from_original[d.v0]];
        if (2 * w2_ <= -2 * N * W - len) {
            staircase_bad_++;
            note("level-1 prefix below its bound at step " + std::to_string(len_));
        }
    }

    // switching: the region size bounds every product size from below
    if (level_ >= d.options.max_level) return;
    const int i = level_;
    if (pw(i) * w2_ <= pw(i) * static_cast<__int128>(nn) * W - len) return;
    if (stuck_) return;
    const PlanLevel *np = nullptr;
    try {
        np = &d.get(i + 1);
    } catch (const GameError &e) {
        // stay on the current level for the rest of the play
        stuck_ = true;
        note(e.what());
        return;
    }
    const PlanLevel &next = *np;
    const __int128 N = next.product_size[y];
    if (pw(i) * w2_ <= pw(i) * N * W - len) return;

    const Integer &ci = d.get(i).credit[y];
    const Integer &cn = next.credit[y];
    delta_ -= cn - ci;
    if (delta_ < 0 || energy_ < cn + delta_) {
        delta_bad_++;
        note("credit bookkeeping fails entering level " + std::to_string(i + 1) + " at step " + std::to_string(len_));
    }
    level_ = i + 1;
    seg_ = y;
    m_ = next.strategy[y].initial();
    switches_.push_back({len_, level_, to, delta_, energy_});
}

} // namespace empg
