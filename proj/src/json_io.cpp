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


#include "empg/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace empg {

namespace {

std::string
position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json &
field(const Json &j, const char *key, const std::string &where)
{
    if (!j.is_object()) throw GameError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw GameError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string
string_field(const Json &j, const char *key, const std::string &where)
{
    const Json &f = field(j, key, where);
    if (!f.is_string()) throw GameError(where + "." + key + ": expected a string");
    return f.get<std::string>();
}

std::size_t
vertex_of(const GameStructure &g, const Json &j, const std::string &where)
{
    if (!j.is_string()) throw GameError(where + ": expected a vertex id");
    auto v = g.find(j.get<std::string>());
    if (!v) throw GameError(where + ": unknown vertex '" + j.get<std::string>() + "'");
    return *v;
}

Json
ids(const GameStructure &g, const std::vector<std::size_t> &vs)
{
    Json a = Json::array();
    for (std::size_t v : vs) a.push_back(g.id(v));
    return a;
}

Json
weight_json(const Weight2 &w)
{
    return Json::array({integer_json(w.w1), integer_json(w.w2)});
}

Json
cycle_json(const Cycle &c, const GameStructure &g)
{
    return Json{{"vertices", ids(g, c.vertices)}, {"weight", weight_json(weight_of(g, c))}};
}

Json
path_json(const Path &p, const GameStructure &g)
{
    return ids(g, p.vertices);
}

Path
path_from_json(const Json &j, const GameStructure &g, const std::string &where)
{
    if (!j.is_array() || j.empty()) throw GameError(where + ": expected a non-empty vertex list");
    Path p;
    for (std::size_t k = 0; k < j.size(); k++) {
        p.vertices.push_back(vertex_of(g, j[k], where + "[" + std::to_string(k) + "]"));
        if (k == 0) continue;
        auto e = g.find_edge(p.vertices[k - 1], p.vertices[k]);
        if (!e) throw GameError(where + ": no edge " + g.id(p.vertices[k - 1]) + " -> " + g.id(p.vertices[k]));
        p.edges.push_back(*e);
    }
    return p;
}

Cycle
cycle_from_json(const Json &j, const GameStructure &g, const std::string &where)
{
    const Json &vs = field(j, "vertices", where);
    if (!vs.is_array() || vs.empty()) throw GameError(where + ".vertices: expected a non-empty vertex list");
    Cycle c;
    for (std::size_t k = 0; k < vs.size(); k++) c.vertices.push_back(vertex_of(g, vs[k], where + ".vertices[" + std::to_string(k) + "]"));
    for (std::size_t k = 0; k < c.vertices.size(); k++) {
        const std::size_t a = c.vertices[k], b = c.vertices[(k + 1) % c.vertices.size()];
        auto e = g.find_edge(a, b);
        if (!e) throw GameError(where + ": no edge " + g.id(a) + " -> " + g.id(b));
        c.edges.push_back(*e);
    }
    return c;
}

std::string
mp_name(MpKind k)
{
    return k == MpKind::Inf ? "inf" : "sup";
}

std::string
cmp_name(Cmp c)
{
    return c == Cmp::Strict ? "gt" : "ge";
}

} // namespace

Json
parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        std::string what = e.what();
        // drop the library prefix "[json.exception.parse_error.101] parse error at line 1, column 2: "
        auto colon = what.find(": ");
        if (colon != std::string::npos) what = what.substr(colon + 2);
        throw GameError("invalid JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
    }
}

Json
load_json(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GameError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const GameError &e) {
        throw GameError(path + ": " + e.what());
    }
}

std::string
dump(const Json &j)
{
    return j.dump(2) + "\n";
}

void
save_json(const std::string &path, const Json &j)
{
    if (path == "-") {
        std::cout << dump(j);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GameError("cannot write " + path);
    out << dump(j);
    if (!out) throw GameError("write failed for " + path);
}

Json
integer_json(const Integer &z)
{
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Integer
integer_from_json(const Json &j, const std::string &where)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        Integer z;
        std::size_t k = s.size() > 1 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool digits = k < s.size();
        for (std::size_t i = k; i < s.size(); i++) digits = digits && s[i] >= '0' && s[i] <= '9';
        if (!digits || z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw GameError(where + ": malformed integer '" + s + "'");
        return z;
    }
    throw GameError(where + ": expected an integer");
}

Json
rational_json(const Rational &q)
{
    return Json(to_string(q));
}

GameStructure
game_from_json(const Json &j)
{
    if (!j.is_object()) throw GameError("game: expected an object");
    const Json &jv = field(j, "vertices", "game");
    if (!jv.is_array()) throw GameError("vertices: expected an array");
    std::vector<VertexSpec> vs;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < jv.size(); k++) {
        const std::string where = "vertices[" + std::to_string(k) + "]";
        const std::string id = string_field(jv[k], "id", where);
        const Json &o = field(jv[k], "owner", where);
        if (!o.is_number_integer() || (o.get<std::int64_t>() != 1 && o.get<std::int64_t>() != 2)) {
            throw GameError(where + ".owner: expected 1 or 2");
        }
        if (!index.emplace(id, k).second) throw GameError(where + ": duplicate vertex id '" + id + "'");
        vs.push_back({id, o.get<std::int64_t>() == 1 ? Player::One : Player::Two});
    }
    const Json &je = field(j, "edges", "game");
    if (!je.is_array()) throw GameError("edges: expected an array");
    std::vector<Edge> es;
    for (std::size_t k = 0; k < je.size(); k++) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        auto endpoint = [&](const char *key) {
            const std::string id = string_field(je[k], key, where);
            auto it = index.find(id);
            if (it == index.end()) throw GameError(where + "." + key + ": unknown vertex '" + id + "'");
            return it->second;
        };
        const std::size_t a = endpoint("from"), b = endpoint("to");
        const Json &w = field(je[k], "w", where);
        if (!w.is_array() || w.size() != 2) throw GameError(where + ".w: expected two weights");
        es.push_back({a, b, Weight2(integer_from_json(w[0], where + ".w[0]"), integer_from_json(w[1], where + ".w[1]"))});
    }
    std::size_t initial = 0;
    if (j.contains("initial")) {
        const std::string id = string_field(j, "initial", "game");
        auto it = index.find(id);
        if (it == index.end()) throw GameError("initial: unknown vertex '" + id + "'");
        initial = it->second;
    }
    return GameStructure(std::move(vs), std::move(es), initial);
}

GameStructure
parse_game(std::string_view text)
{
    return game_from_json(parse_json(text));
}

GameStructure
load_game(const std::string &path)
{
    const Json j = load_json(path);
    try {
        return game_from_json(j);
    } catch (const GameError &e) {
        throw GameError(path + ": " + e.what());
    }
}

Json
game_to_json(const GameStructure &g)
{
    Json vs = Json::array(), es = Json::array();
    for (std::size_t v = 0; v < g.num_vertices(); v++) vs.push_back({{"id", g.id(v)}, {"owner", static_cast<int>(g.owner(v))}});
    for (const Edge &e : g.edges()) es.push_back({{"from", g.id(e.from)}, {"to", g.id(e.to)}, {"w", weight_json(e.weight)}});
    return Json{{"vertices", vs}, {"edges", es}, {"initial", g.id(g.initial())}};
}

Json
energy_game_to_json(const MultiEnergyGame &meg, const std::string &route)
{
    Json vs = Json::array(), es = Json::array();
    for (std::size_t v = 0; v < meg.num_vertices(); v++) vs.push_back({{"id", meg.id(v)}, {"owner", static_cast<int>(meg.owner(v))}});
    for (const MultiEdge &e : meg.edges()) es.push_back({{"from", meg.id(e.from)}, {"to", meg.id(e.to)}, {"w", e.weight}});
    return Json{{"route", route}, {"dim", meg.dim()}, {"vertices", vs}, {"edges", es}, {"initial", meg.id(meg.initial())}};
}

Json
gadget_map_to_json(const GadgetMap &map, const GameStructure &g, const MultiEnergyGame &meg)
{
    static const char *roles[] = {"enter", "r-s", "s-loop", "s-r", "exit"};
    Json vs = Json::array(), es = Json::array();
    for (std::size_t x = map.num_vertices; x < meg.num_vertices(); x++) {
        const std::size_t e = map.edge_of_vertex(x);
        vs.push_back({{"id", meg.id(x)}, {"edge", e}, {"role", x == map.r(e) ? "r" : "s"}});
    }
    for (std::size_t ge = 0; ge < meg.num_edges(); ge++) {
        const std::size_t e = map.edge_of_gadget_edge(ge);
        es.push_back({{"gadget_edge", ge}, {"edge", e}, {"from", g.id(g.edge(e).from)}, {"to", g.id(g.edge(e).to)},
                      {"role", roles[map.role(ge)]}});
    }
    return Json{{"route", "reduction/gadget"},
                {"original_vertices", map.num_vertices},
                {"original_edges", map.num_edges},
                {"gadget_vertices", vs},
                {"gadget_edges", es}};
}

Json
objective_json(const ObjectiveSpec &spec)
{
    return Json{{"mp", mp_name(spec.kind)}, {"cmp", cmp_name(spec.cmp)}, {"threshold", rational_json(spec.threshold)}};
}

ObjectiveSpec
objective_from_json(const Json &j)
{
    ObjectiveSpec s;
    const std::string mp = string_field(j, "mp", "objective"), cmp = string_field(j, "cmp", "objective");
    if (mp != "inf" && mp != "sup") throw GameError("objective.mp: expected inf or sup");
    if (cmp != "gt" && cmp != "ge") throw GameError("objective.cmp: expected gt or ge");
    s.kind = mp == "inf" ? MpKind::Inf : MpKind::Sup;
    s.cmp = cmp == "gt" ? Cmp::Strict : Cmp::NonStrict;
    if (j.contains("threshold")) {
        const Json &t = j["threshold"];
        if (t.is_string()) {
            s.threshold = parse_rational(t.get<std::string>());
        } else {
            s.threshold = Rational(integer_from_json(t, "objective.threshold"));
        }
    }
    return s;
}

Json
strategy_to_json(const MooreStrategy &s, const GameStructure &g, const std::string &route)
{
    Json states = Json::array();
    for (std::size_t m = 0; m < s.memory_size(); m++) {
        Json upd = Json::object(), nxt = Json::object();
        for (std::size_t v = 0; v < g.num_vertices(); v++) {
            upd[g.id(v)] = s.update(m, v);
            if (g.owner(v) == s.player() && s.next(m, v) != npos) nxt[g.id(v)] = g.id(s.next(m, v));
        }
        states.push_back({{"update", upd}, {"next", nxt}});
    }
    return Json{{"route", route},
                {"kind", "moore"},
                {"player", static_cast<int>(s.player())},
                {"memory", s.memory_size()},
                {"initial", s.initial()},
                {"states", states}};
}

MooreStrategy
strategy_from_json(const Json &j, const GameStructure &g)
{
    if (string_field(j, "kind", "strategy") != "moore") throw GameError("strategy.kind: expected moore");
    const Json &p = field(j, "player", "strategy");
    if (!p.is_number_integer() || (p.get<int>() != 1 && p.get<int>() != 2)) throw GameError("strategy.player: expected 1 or 2");
    const Player player = p.get<int>() == 1 ? Player::One : Player::Two;
    const Json &st = field(j, "states", "strategy");
    if (!st.is_array() || st.empty()) throw GameError("strategy.states: expected a non-empty array");
    const std::size_t ns = st.size();
    std::size_t init = 0;
    if (j.contains("initial")) {
        if (!j["initial"].is_number_unsigned() || j["initial"].get<std::size_t>() >= ns) throw GameError("strategy.initial: bad state");
        init = j["initial"].get<std::size_t>();
    }
    MooreStrategy s(player, g.num_vertices(), ns, init);
    for (std::size_t m = 0; m < ns; m++) {
        const std::string where = "strategy.states[" + std::to_string(m) + "]";
        const Json &upd = field(st[m], "update", where);
        for (std::size_t v = 0; v < g.num_vertices(); v++) {
            auto it = upd.find(g.id(v));
            if (it == upd.end()) {
                s.set_update(m, v, m);
                continue;
            }
            if (!it->is_number_unsigned() || it->get<std::size_t>() >= ns) throw GameError(where + ".update." + g.id(v) + ": bad state");
            s.set_update(m, v, it->get<std::size_t>());
        }
        const Json nxt = st[m].contains("next") ? st[m]["next"] : Json::object();
        for (std::size_t v = 0; v < g.num_vertices(); v++) {
            if (g.owner(v) != player) continue;
            auto it = nxt.find(g.id(v));
            if (it == nxt.end()) throw GameError(where + ".next: no move at " + g.id(v));
            s.set_next(m, v, vertex_of(g, *it, where + ".next." + g.id(v)));
        }
    }
    s.validate(g);
    return s;
}

Json
cycle_witness_to_json(const CycleWitness &w, const GameStructure &g)
{
    if (w.kind == CycleWitness::Kind::SimpleGood) return Json{{"kind", "good-cycle"}, {"cycle", cycle_json(w.first, g)}};
    return Json{{"kind", "two-cycle"},
                {"first", cycle_json(w.first, g)},
                {"second", cycle_json(w.second, g)},
                {"to_second", path_json(w.to_second, g)},
                {"to_first", path_json(w.to_first, g)},
                {"a", integer_json(w.a)},
                {"b", integer_json(w.b)},
                {"alpha", integer_json(w.alpha)},
                {"beta", integer_json(w.beta)}};
}

Json
multicycle_witness_to_json(const MulticycleWitness &w, const GameStructure &g)
{
    static const char *kinds[] = {"single-cycle", "two-cycle", "flow"};
    Json cs = Json::array();
    for (std::size_t k = 0; k < w.cycles.size(); k++) {
        Json c = cycle_json(w.cycles[k], g);
        c["multiplicity"] = integer_json(w.multiplicity[k]);
        cs.push_back(c);
    }
    Weight2 total(0, 0);
    for (std::size_t k = 0; k < w.cycles.size(); k++) total += w.multiplicity[k] * weight_of(g, w.cycles[k]);
    return Json{{"kind", kinds[static_cast<int>(w.kind)]}, {"cycles", cs}, {"total", weight_json(total)}};
}

Json
verdict_to_json(const Verdict &v, const GameStructure &g, std::size_t v0, const ObjectiveSpec &spec)
{
    Json j{{"route", v.route},
           {"answer", to_string(v.answer)},
           {"objective", objective_json(spec)},
           {"initial", g.id(v0)},
           {"initial_credit", v.initial_credit ? integer_json(*v.initial_credit) : Json(nullptr)}};
    if (!v.note.empty()) j["note"] = v.note;
    if (auto *c = std::get_if<CycleWitness>(&v.certificate)) {
        j["certificate"] = cycle_witness_to_json(*c, g);
    } else if (auto *m = std::get_if<MulticycleWitness>(&v.certificate)) {
        j["certificate"] = multicycle_witness_to_json(*m, g);
    } else if (auto *s = std::get_if<MooreStrategy>(&v.certificate)) {
        j["certificate"] = strategy_to_json(*s, g, v.route);
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

Json
schedule_to_json(const ScheduleStrategy &s, const GameStructure &g, const std::string &route)
{
    Json j{{"route", route}, {"kind", "schedule"}, {"degenerate", s.degenerate}, {"access", path_json(s.access, g)}};
    j["cp"] = cycle_json(s.cp, g);
    if (!s.degenerate) {
        j["c"] = cycle_json(s.c, g);
        j["to_c"] = path_json(s.to_c, g);
        j["to_cp"] = path_json(s.to_cp, g);
    }
    j["alpha"] = integer_json(s.alpha);
    j["beta"] = integer_json(s.beta);
    j["gamma"] = integer_json(s.gamma);
    j["credit"] = integer_json(s.credit);
    return j;
}

ScheduleStrategy
schedule_from_json(const Json &j, const GameStructure &g)
{
    if (string_field(j, "kind", "schedule") != "schedule") throw GameError("schedule.kind: expected schedule");
    ScheduleStrategy s;
    const Json &deg = field(j, "degenerate", "schedule");
    if (!deg.is_boolean()) throw GameError("schedule.degenerate: expected a boolean");
    s.degenerate = deg.get<bool>();
    s.access = path_from_json(field(j, "access", "schedule"), g, "schedule.access");
    s.cp = cycle_from_json(field(j, "cp", "schedule"), g, "schedule.cp");
    if (!s.degenerate) {
        s.c = cycle_from_json(field(j, "c", "schedule"), g, "schedule.c");
        s.to_c = path_from_json(field(j, "to_c", "schedule"), g, "schedule.to_c");
        s.to_cp = path_from_json(field(j, "to_cp", "schedule"), g, "schedule.to_cp");
    }
    s.alpha = integer_from_json(field(j, "alpha", "schedule"), "schedule.alpha");
    s.beta = integer_from_json(field(j, "beta", "schedule"), "schedule.beta");
    s.gamma = integer_from_json(field(j, "gamma", "schedule"), "schedule.gamma");
    s.credit = integer_from_json(field(j, "credit", "schedule"), "schedule.credit");
    return s;
}

Json
plan_to_json(const InfiniteStrategyPlan &p, const GameStructure &g, bool with_strategies)
{
    std::vector<std::size_t> win;
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (p.winning_set()[v]) win.push_back(v);
    }
    // region games are indexed in increasing original order
    GameStructure region;
    {
        std::vector<VertexSpec> vs;
        std::vector<std::size_t> local(g.num_vertices(), npos);
        for (std::size_t v : win) {
            local[v] = vs.size();
            vs.push_back({g.id(v), g.owner(v)});
        }
        std::vector<Edge> es;
        for (const Edge &e : g.edges()) {
            if (local[e.from] != npos && local[e.to] != npos) es.push_back({local[e.from], local[e.to], e.weight});
        }
        region = GameStructure(std::move(vs), std::move(es), local[p.initial()]);
    }
    Json levels = Json::array();
    for (int i = 1; i <= p.levels_computed(); i++) {
        const PlanLevel &L = p.level(i);
        Json credit = Json::object(), memory = Json::object(), size = Json::object(), strategies = Json::object();
        for (std::size_t k = 0; k < win.size(); k++) {
            const std::string &id = g.id(win[k]);
            credit[id] = integer_json(L.credit[k]);
            memory[id] = L.memory[k];
            size[id] = L.product_size[k];
            if (with_strategies) strategies[id] = strategy_to_json(L.strategy[k], region, "infinite-plan/level");
        }
        Json lj{{"index", i}, {"cap", L.cap}, {"credit", credit}, {"memory", memory}, {"product_size", size}};
        if (with_strategies) lj["strategies"] = strategies;
        levels.push_back(lj);
    }
    const char *route = p.options().route == LevelRoute::Gadget ? "infinite-plan/gadget-levels" : "infinite-plan/energy-levels";
    return Json{{"route", route},
                {"kind", "infinite-plan"},
                {"objective", objective_json(p.objective())},
                {"initial", g.id(p.initial())},
                {"winning", ids(g, win)},
                {"kappa", integer_json(p.kappa())},
                {"gamma", integer_json(p.gamma())},
                {"d0", integer_json(p.d0())},
                {"lead", p.options().lead},
                {"weight_bound", integer_json(p.weight_bound())},
                {"levels", levels}};
}

Json
plan_run_to_json(const InfiniteStrategyPlan &p, const GameStructure &g)
{
    Json sw = Json::array();
    for (const PlanSwitch &s : p.switches()) {
        sw.push_back({{"step", s.step}, {"level", s.level}, {"vertex", g.id(s.vertex)}, {"delta", integer_json(s.delta)},
                      {"energy", integer_json(s.energy)}});
    }
    return Json{{"level", p.current_level()},
                {"switches", sw},
                {"staircase_violations", p.staircase_violations()},
                {"delta_violations", p.delta_violations()},
                {"stuck", p.stuck()},
                {"messages", p.violations()}};
}

Json
trace_to_json(const TraceReport &r, const GameStructure &g)
{
    Json j{{"route", "simulate"}, {"start", g.id(r.start)}, {"steps", r.steps}, {"credit", integer_json(r.credit)}};
    if (!r.vertices.empty()) j["vertices"] = ids(g, r.vertices);
    if (!r.energy.empty()) {
        Json e = Json::array();
        for (const Integer &z : r.energy) e.push_back(integer_json(z));
        j["energy"] = e;
    }
    Json av = Json::array();
    for (const auto &[k, q] : r.averages) av.push_back({{"step", k}, {"average", rational_json(q)}});
    j["averages"] = av;
    j["total"] = weight_json(r.total);
    j["min_energy"] = integer_json(r.min_energy);
    j["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
    j["violation_count"] = r.violation_count;
    Json vs = Json::array();
    for (const TraceViolation &v : r.violations) vs.push_back({{"step", v.step}, {"what", v.what}});
    j["violations"] = vs;
    if (r.lasso) {
        j["lasso"] = {{"prefix", r.lasso->prefix},
                      {"period", r.lasso->period},
                      {"cycle_weight", weight_json(r.lasso->cycle_weight)},
                      {"average", rational_json(r.lasso->average)}};
    } else {
        j["lasso"] = nullptr;
    }
    return j;
}

} // namespace empg
