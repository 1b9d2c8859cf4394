/*
 * Copyright 2026 the mgsolve authors
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

#include "mg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mg {

namespace {

using Kind = ValuationSpec::Kind;

bool contains(const std::vector<Color>& w, const Color& c)
{
    return std::find(w.begin(), w.end(), c) != w.end();
}

std::vector<Color> without_eps(const std::vector<Color>& w)
{
    std::vector<Color> out;
    for (const Color& c : w)
        if (!c.is_eps()) out.push_back(c);
    return out;
}

long long max_prefix_sum(const std::vector<Color>& w)
{
    long long sum = 0, best = 0; // the empty prefix contributes 0
    for (const Color& c : w) {
        if (c.is_eps()) continue;
        sum += c.num();
        best = std::max(best, sum);
    }
    return best;
}

long long compose_at_zero(const std::vector<Color>& w)
{
    long long x = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (!it->is_eps()) x = it->apply(x);
    return x;
}

/// max over nonempty prefixes q of w of q applied to 0 (innermost last)
long long max_prefix_composition(const std::vector<Color>& w)
{
    long long best = 0;
    for (size_t k = 0; k < w.size(); k++) {
        std::vector<Color> prefix(w.begin(), w.begin() + k + 1);
        best = std::max(best, compose_at_zero(prefix));
    }
    return best;
}

/// Best value achievable after the stem: the all-eps-cycle case.
Value best_after(const ValuationSpec& spec, const std::vector<Color>& stem)
{
    switch (spec.kind()) {
    case Kind::safety:
        return contains(stem, Color::symbol(Sym::bad)) ? Value::lose() : Value::win();
    case Kind::imm_variant:
        if (stem.empty()) return Value::win();
        if (!stem.front().is_symbol(Sym::imm)) return Value::lose();
        return contains(stem, Color::symbol(Sym::bad)) ? Value::lose() : Value::win();
    case Kind::bounded: {
        long long counter = 0;
        for (const Color& c : stem) {
            counter = c.apply(counter);
            if (counter > spec.bound()) return Value::lose();
        }
        return Value::win();
    }
    case Kind::energy: return Value::number(max_prefix_sum(stem));
    case Kind::backward_sup: return Value::number(max_prefix_composition(stem));
    default:
        // the prefix-invariant objectives and reachability can always be
        // won from here
        return Value::win();
    }
}

Value eval_infinite(const ValuationSpec& spec, const std::vector<Color>& stem,
                    const std::vector<Color>& cycle)
{
    switch (spec.kind()) {
    case Kind::safety:
        return contains(stem, Color::symbol(Sym::bad)) ||
                       contains(cycle, Color::symbol(Sym::bad))
                   ? Value::lose()
                   : Value::win();
    case Kind::imm_variant: {
        const Color& head = stem.empty() ? cycle.front() : stem.front();
        if (!head.is_symbol(Sym::imm)) return Value::lose();
        return contains(stem, Color::symbol(Sym::bad)) ||
                       contains(cycle, Color::symbol(Sym::bad))
                   ? Value::lose()
                   : Value::win();
    }
    case Kind::reachability:
        return contains(stem, Color::symbol(Sym::good)) ||
                       contains(cycle, Color::symbol(Sym::good))
                   ? Value::win()
                   : Value::lose();
    case Kind::buchi:
        return contains(cycle, Color::symbol(Sym::good)) ? Value::win() : Value::lose();
    case Kind::cobuchi:
        return contains(cycle, Color::symbol(Sym::bad)) ? Value::lose() : Value::win();
    case Kind::parity: {
        long long limsup = 0;
        for (const Color& c : cycle) limsup = std::max(limsup, c.num());
        return limsup % 2 == 0 ? Value::win() : Value::lose();
    }
    case Kind::prio_cobuchi:
        return contains(cycle, Color::number(2 * spec.prio_index() + 1)) ? Value::lose()
                                                                         : Value::win();
    case Kind::energy: {
        long long cycle_sum = 0;
        for (const Color& c : cycle) cycle_sum += c.num();
        if (cycle_sum > 0) return Value::infinity();
        std::vector<Color> word = stem;
        word.insert(word.end(), cycle.begin(), cycle.end());
        word.insert(word.end(), cycle.begin(), cycle.end());
        return Value::number(max_prefix_sum(word));
    }
    case Kind::backward_sup: {
        long long best = max_prefix_composition(stem);
        // prefixes reaching into lap j at offset i evaluate to
        // stem(g^j(c_i)) with g the one-lap composition; monotone maps
        // on a finite chain have monotone orbits, so following each
        // orbit to its fixed point reaches the supremum
        auto lap = [&](long long x) {
            for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) x = it->apply(x);
            return x;
        };
        for (size_t i = 0; i < cycle.size(); i++) {
            std::vector<Color> head(cycle.begin(), cycle.begin() + i + 1);
            long long y = compose_at_zero(head);
            long long orbit_max = y;
            while (true) {
                long long next = lap(y);
                if (next == y) break;
                y = next;
                orbit_max = std::max(orbit_max, y);
            }
            std::vector<Color> word = stem;
            long long x = orbit_max;
            for (auto it = word.rbegin(); it != word.rend(); ++it) x = it->apply(x);
            best = std::max(best, x);
        }
        return Value::number(best);
    }
    case Kind::bounded: {
        long long counter = 0;
        for (const Color& c : stem) {
            counter = c.apply(counter);
            if (counter > spec.bound()) return Value::lose();
        }
        std::set<long long> seen;
        while (seen.insert(counter).second) {
            for (const Color& c : cycle) {
                counter = c.apply(counter);
                if (counter > spec.bound()) return Value::lose();
            }
        }
        return Value::win();
    }
    case Kind::lex_product: {
        const ValuationSpec& s1 = spec.first();
        const ValuationSpec& s2 = spec.second();
        std::vector<Color> stem1, stem2, cycle1, cycle2;
        for (const Color& c : stem) (s2.admits(c) ? stem2 : stem1).push_back(c);
        for (const Color& c : cycle) (s2.admits(c) ? cycle2 : cycle1).push_back(c);
        if (!cycle2.empty()) return eval_infinite(s2, stem2, cycle2);
        return eval_infinite(s1, stem1, cycle1);
    }
    }
    throw std::logic_error("eval_lasso: unhandled kind");
}

} // namespace

Value eval_lasso(const ValuationSpec& spec, const Lasso& w)
{
    if (w.cycle.empty()) throw std::invalid_argument("eval_lasso: empty cycle");
    for (const Color& c : w.stem)
        if (!spec.admits(c))
            throw std::invalid_argument("eval_lasso: color " + c.str() +
                                        " outside alphabet of " + spec.str());
    for (const Color& c : w.cycle)
        if (!spec.admits(c))
            throw std::invalid_argument("eval_lasso: color " + c.str() +
                                        " outside alphabet of " + spec.str());

    std::vector<Color> stem = without_eps(w.stem);
    std::vector<Color> cycle = without_eps(w.cycle);
    if (cycle.empty()) return best_after(spec, stem);
    return eval_infinite(spec, stem, cycle);
}

namespace {

// vertices from which an infinite play exists (all, unless pregraph)
std::vector<bool> live_vertices(const ColoredGraph& g)
{
    std::vector<bool> live(g.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.size(); v++) {
            if (!live[v]) continue;
            bool has = false;
            for (const Edge& e : g.out(v))
                if (live[e.dst]) has = true;
            if (!has) {
                live[v] = false;
                changed = true;
            }
        }
    }
    return live;
}

std::vector<std::vector<bool>> reachability(const ColoredGraph& g)
{
    size_t n = g.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; v++) {
        std::deque<Vertex> queue{v};
        reach[v][v] = true;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (const Edge& e : g.out(x))
                if (!reach[v][e.dst]) {
                    reach[v][e.dst] = true;
                    queue.push_back(e.dst);
                }
        }
    }
    return reach;
}

unsigned stem_bound(const ColoredGraph& g, const OracleBudget& b)
{
    unsigned n = (unsigned)g.size();
    unsigned cap = n == 0 ? 0 : n - 1;
    return b.max_stem_len ? std::min(b.max_stem_len, cap) : cap;
}

unsigned cycle_bound(const ColoredGraph& g, const OracleBudget& b)
{
    unsigned n = (unsigned)g.size();
    return b.max_cycle_len ? std::min(b.max_cycle_len, n) : n;
}

/// Enumerates simple cycles starting at x; words passed to the sink.
template <typename F>
void for_each_simple_cycle(const ColoredGraph& g, Vertex x, unsigned max_len, F&& emit)
{
    std::vector<Color> word;
    std::vector<bool> interior(g.size(), false);
    auto dfs = [&](auto&& self, Vertex cur) -> void {
        for (const Edge& e : g.out(cur)) {
            word.push_back(e.color);
            if (e.dst == x) {
                emit(word);
            } else if (!interior[e.dst] && word.size() < max_len) {
                interior[e.dst] = true;
                self(self, e.dst);
                interior[e.dst] = false;
            }
            word.pop_back();
        }
    };
    dfs(dfs, x);
}

Value lasso_sup_from(const ColoredGraph& g, Vertex start, const LassoEval& eval,
                     const Value& bottom, const Value& top, const OracleBudget& budget)
{
    Value best = bottom;
    unsigned max_stem = stem_bound(g, budget);
    unsigned max_cycle = cycle_bound(g, budget);
    std::vector<Color> stem;
    std::vector<bool> on_stem(g.size(), false);
    bool saturated = false;

    auto try_cycles = [&](Vertex x) {
        for_each_simple_cycle(g, x, max_cycle, [&](const std::vector<Color>& cycle) {
            if (saturated) return;
            Value v = eval(Lasso(stem, cycle));
            best = value_max(best, v);
            if (best == top) saturated = true;
        });
    };

    auto dfs = [&](auto&& self, Vertex cur) -> void {
        if (saturated) return;
        try_cycles(cur);
        if (stem.size() >= max_stem) return;
        for (const Edge& e : g.out(cur)) {
            if (on_stem[e.dst] || saturated) continue;
            on_stem[e.dst] = true;
            stem.push_back(e.color);
            self(self, e.dst);
            stem.pop_back();
            on_stem[e.dst] = false;
        }
    };
    on_stem[start] = true;
    dfs(dfs, start);
    return best;
}

std::vector<Value> counter_values(const ColoredGraph& g, const ValuationSpec& spec)
{
    size_t n = g.size();
    std::vector<bool> live = live_vertices(g);

    if (spec.kind() == Kind::bounded) {
        long long bound = spec.bound();
        std::vector<Value> out;
        for (Vertex v = 0; v < n; v++) {
            if (!live[v]) {
                out.push_back(Value::win());
                continue;
            }
            // forward counter reachability from (v, 0) over live vertices
            std::vector<std::vector<bool>> seen(n,
                                                std::vector<bool>(bound + 1, false));
            std::deque<std::pair<Vertex, long long>> queue{{v, 0}};
            seen[v][0] = true;
            bool lost = false;
            while (!queue.empty() && !lost) {
                auto [x, c] = queue.front();
                queue.pop_front();
                for (const Edge& e : g.out(x)) {
                    if (!live[e.dst]) continue;
                    long long c2 = e.color.is_eps() ? c : e.color.apply(c);
                    if (c2 > bound) {
                        lost = true;
                        break;
                    }
                    if (!seen[e.dst][c2]) {
                        seen[e.dst][c2] = true;
                        queue.push_back({e.dst, c2});
                    }
                }
            }
            out.push_back(lost ? Value::lose() : Value::win());
        }
        return out;
    }

    // backward_sup: walk the reversed graph applying maps forward; the
    // value of v is the largest counter reachable at v from (u, 0)
    long long cap = spec.map_cap();
    std::vector<std::vector<Vertex>> incoming(n);
    std::vector<std::vector<Color>> incoming_color(n);
    for (const Edge& e : g.edges()) {
        if (!live[e.src] || !live[e.dst]) continue;
        incoming[e.dst].push_back(e.src);
        incoming_color[e.dst].push_back(e.color);
    }
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(cap + 1, false));
    std::deque<std::pair<Vertex, long long>> queue;
    for (Vertex u = 0; u < n; u++)
        if (live[u]) {
            seen[u][0] = true;
            queue.push_back({u, 0});
        }
    while (!queue.empty()) {
        auto [w, c] = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < incoming[w].size(); i++) {
            Vertex u = incoming[w][i];
            const Color& col = incoming_color[w][i];
            long long c2 = col.is_eps() ? c : col.apply(c);
            if (c2 <= cap && !seen[u][c2]) {
                seen[u][c2] = true;
                queue.push_back({u, c2});
            }
        }
    }
    std::vector<Value> out;
    for (Vertex v = 0; v < n; v++) {
        long long best = 0;
        for (long long c = cap; c >= 0; c--)
            if (seen[v][c]) {
                best = c;
                break;
            }
        out.push_back(Value::number(best));
    }
    return out;
}

std::vector<Value> invariant_objective_values(const ColoredGraph& g,
                                              const ValuationSpec& spec,
                                              const OracleBudget& budget)
{
    size_t n = g.size();
    unsigned max_cycle = cycle_bound(g, budget);
    std::vector<bool> losing_cycle_at(n, false);
    for (Vertex x = 0; x < n; x++)
        for_each_simple_cycle(g, x, max_cycle, [&](const std::vector<Color>& cycle) {
            if (losing_cycle_at[x]) return;
            if (eval_lasso(spec, Lasso({}, cycle)) == Value::lose())
                losing_cycle_at[x] = true;
        });
    auto reach = reachability(g);
    std::vector<Value> out;
    for (Vertex v = 0; v < n; v++) {
        bool lose = false;
        for (Vertex x = 0; x < n; x++)
            if (reach[v][x] && losing_cycle_at[x]) lose = true;
        out.push_back(lose ? Value::lose() : Value::win());
    }
    return out;
}

} // namespace

std::vector<Value> graph_value(const ColoredGraph& g, const ValuationSpec& spec,
                               const OracleBudget& budget)
{
    for (const Color& c : g.alphabet())
        if (!spec.admits(c))
            throw std::invalid_argument("graph_value: color " + c.str() +
                                        " outside alphabet of " + spec.str());
    if (spec.counter_based()) return counter_values(g, spec);
    if (spec.qualitative() && spec.prefix_invariant())
        return invariant_objective_values(g, spec, budget);

    std::vector<Value> out;
    LassoEval eval = [&](const Lasso& w) { return eval_lasso(spec, w); };
    for (Vertex v = 0; v < g.size(); v++)
        out.push_back(lasso_sup_from(g, v, eval, spec.bottom_value(), spec.top_value(),
                                     budget));
    return out;
}

std::vector<Value> graph_value_custom(const ColoredGraph& g, const LassoEval& eval,
                                      const OracleBudget& budget)
{
    // no saturation cutoff: the custom evaluator's top is unknown
    std::vector<Value> out;
    for (Vertex v = 0; v < g.size(); v++) {
        std::optional<Value> best;
        unsigned max_stem = stem_bound(g, budget);
        unsigned max_cycle = cycle_bound(g, budget);
        std::vector<Color> stem;
        std::vector<bool> on_stem(g.size(), false);
        auto dfs = [&](auto&& self, Vertex cur) -> void {
            for_each_simple_cycle(g, cur, max_cycle, [&](const std::vector<Color>& cyc) {
                Value val = eval(Lasso(stem, cyc));
                best = best ? value_max(*best, val) : val;
            });
            if (stem.size() >= max_stem) return;
            for (const Edge& e : g.out(cur)) {
                if (on_stem[e.dst]) continue;
                on_stem[e.dst] = true;
                stem.push_back(e.color);
                self(self, e.dst);
                stem.pop_back();
                on_stem[e.dst] = false;
            }
        };
        on_stem[v] = true;
        dfs(dfs, v);
        if (!best)
            throw std::invalid_argument("graph_value_custom: no lasso from vertex " +
                                        std::to_string(v));
        out.push_back(*best);
    }
    return out;
}

namespace {

struct StrategySpace {
    std::vector<Vertex> eves;          // Eve vertices with at least one edge
    std::vector<uint32_t> base;        // first edge index of each
    std::vector<uint32_t> degree;
    uint64_t count = 1;
};

StrategySpace strategy_space(const Arena& a, uint64_t max_strategies)
{
    StrategySpace s;
    for (Vertex v = 0; v < a.size(); v++) {
        if (!a.eve_owns(v) || a.graph().out_degree(v) == 0) continue;
        s.eves.push_back(v);
        s.base.push_back(
            (uint32_t)(a.graph().out(v).data() - a.graph().edges().data()));
        s.degree.push_back((uint32_t)a.graph().out_degree(v));
        s.count *= a.graph().out_degree(v);
        if (s.count > max_strategies)
            throw std::runtime_error("brute_force_solve: strategy count exceeds budget");
    }
    return s;
}

template <typename F>
void for_each_strategy(const StrategySpace& s, F&& visit)
{
    std::vector<uint32_t> choice(s.eves.size(), 0);
    while (true) {
        if (!visit(choice)) return;
        size_t i = 0;
        while (i < choice.size()) {
            if (++choice[i] < s.degree[i]) break;
            choice[i] = 0;
            i++;
        }
        if (i == choice.size() && !choice.empty()) return;
        if (choice.empty()) return;
    }
}

ColoredGraph choice_subgraph(const Arena& a, const StrategySpace& s,
                             const std::vector<uint32_t>& choice)
{
    std::vector<Edge> edges;
    std::vector<bool> restricted(a.size(), false);
    for (size_t i = 0; i < s.eves.size(); i++) {
        restricted[s.eves[i]] = true;
        edges.push_back(a.graph().edges()[s.base[i] + choice[i]]);
    }
    for (Vertex v = 0; v < a.size(); v++)
        if (!restricted[v])
            for (const Edge& e : a.graph().out(v)) edges.push_back(e);
    return ColoredGraph(a.size(), std::move(edges), a.graph().is_pregraph(),
                        a.graph().names());
}

BruteForceResult brute_force_impl(const Arena& a,
                                  const std::function<std::vector<Value>(
                                      const ColoredGraph&)>& value_fn,
                                  const OracleBudget& budget)
{
    StrategySpace space = strategy_space(a, budget.max_strategies);
    BruteForceResult result;

    bool first = true;
    for_each_strategy(space, [&](const std::vector<uint32_t>& choice) {
        std::vector<Value> vals = value_fn(choice_subgraph(a, space, choice));
        if (first) {
            result.values = vals;
            first = false;
        } else {
            for (size_t v = 0; v < vals.size(); v++)
                result.values[v] = value_min(result.values[v], vals[v]);
        }
        return true;
    });

    // second pass: first strategy (lexicographic in choice order)
    // attaining the minimum everywhere, if any
    for_each_strategy(space, [&](const std::vector<uint32_t>& choice) {
        std::vector<Value> vals = value_fn(choice_subgraph(a, space, choice));
        if (vals == result.values) {
            result.has_uniform_witness = true;
            result.witness.clear();
            for (size_t i = 0; i < choice.size(); i++)
                result.witness.push_back(space.base[i] + choice[i]);
            return false;
        }
        return true;
    });
    return result;
}

} // namespace

BruteForceResult brute_force_solve(const Arena& a, const OracleBudget& budget)
{
    return brute_force_impl(
        a, [&](const ColoredGraph& g) { return graph_value(g, a.valuation(), budget); },
        budget);
}

BruteForceResult brute_force_solve_custom(const Arena& a, const LassoEval& eval,
                                          const OracleBudget& budget)
{
    return brute_force_impl(
        a, [&](const ColoredGraph& g) { return graph_value_custom(g, eval, budget); },
        budget);
}

ColoredGraph single_choice_subgraph(const Arena& a, const std::vector<uint32_t>& witness)
{
    std::vector<Edge> edges;
    std::vector<bool> restricted(a.size(), false);
    for (uint32_t idx : witness) {
        const Edge& e = a.graph().edges().at(idx);
        restricted[e.src] = true;
        edges.push_back(e);
    }
    for (Vertex v = 0; v < a.size(); v++)
        if (!restricted[v])
            for (const Edge& e : a.graph().out(v)) edges.push_back(e);
    return ColoredGraph(a.size(), std::move(edges), a.graph().is_pregraph(),
                        a.graph().names());
}

VertexMap least_morphism(const ColoredGraph& g, const MonotoneGraph& l)
{
    size_t n = g.size();
    std::vector<size_t> color_of_edge;
    color_of_edge.reserve(g.edges().size());
    for (const Edge& e : g.edges()) color_of_edge.push_back(l.color_index(e.color));

    std::vector<std::vector<Vertex>> preds(n);
    for (const Edge& e : g.edges()) preds[e.dst].push_back(e.src);

    VertexMap phi(n, 0);
    std::deque<Vertex> queue;
    std::vector<bool> queued(n, true);
    for (Vertex v = 0; v < n; v++) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        queued[v] = false;
        Rank r = 0;
        auto edges = g.out(v);
        size_t base = edges.data() - g.edges().data();
        for (size_t i = 0; i < edges.size(); i++)
            r = std::max(r, l.rho(color_of_edge[base + i], phi[edges[i].dst]));
        if (r > phi[v]) {
            phi[v] = r;
            for (Vertex p : preds[v])
                if (!queued[p]) {
                    queued[p] = true;
                    queue.push_back(p);
                }
        }
    }
    return phi;
}

MorphismReport find_min_morphism(const ColoredGraph& g, const MonotoneGraph& l,
                                 const ValuationSpec& spec, const OracleBudget& budget)
{
    MorphismReport report;
    report.map = least_morphism(g, l);
    std::vector<Value> vals = graph_value(g, spec, budget);
    report.val_preserving = true;
    for (Vertex v = 0; v < g.size(); v++)
        if (l.level_value(report.map[v]) != vals[v]) report.val_preserving = false;
    return report;
}

std::vector<ColoredGraph> enumerate_graphs(unsigned n, const std::vector<Color>& colors)
{
    size_t m = (size_t)n * colors.size(); // possible edges per vertex
    if (m > 20) throw std::invalid_argument("enumerate_graphs: alphabet too large");
    uint64_t per_vertex = (1ull << m) - 1;
    double total = 1;
    for (unsigned v = 0; v < n; v++) total *= (double)per_vertex;
    if (total > 5e8) throw std::invalid_argument("enumerate_graphs: too many graphs");

    std::vector<ColoredGraph> out;
    std::set<std::string> seen;
    std::vector<uint64_t> mask(n, 1);
    while (true) {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; v++)
            for (size_t bit = 0; bit < m; bit++)
                if (mask[v] >> bit & 1)
                    edges.push_back({v, colors[bit % colors.size()],
                                     (Vertex)(bit / colors.size())});
        ColoredGraph g(n, std::move(edges));
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));

        size_t i = 0;
        while (i < n) {
            if (++mask[i] <= per_vertex) break;
            mask[i] = 1;
            i++;
        }
        if (i == n) break;
    }
    return out;
}

ColoredGraph random_graph(unsigned n, const std::vector<Color>& colors,
                          unsigned max_out_degree, std::mt19937_64& rng)
{
    size_t m = (size_t)n * colors.size();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; v++) {
        unsigned deg = 1 + (unsigned)(rng() % std::min<size_t>(max_out_degree, m));
        std::set<uint64_t> picked;
        while (picked.size() < deg) picked.insert(rng() % m);
        for (uint64_t bit : picked)
            edges.push_back(
                {v, colors[bit % colors.size()], (Vertex)(bit / colors.size())});
    }
    return ColoredGraph(n, std::move(edges));
}

UniversalityReport universality_check(const MonotoneGraph& l, const ValuationSpec& spec,
                                      const OracleBudget& budget, UniversalityMode mode,
                                      std::vector<Color> colors)
{
    if (colors.empty()) {
        colors = spec.alphabet();
        if (colors.empty())
            throw std::invalid_argument(
                "universality_check: supply colors for open-alphabet specs");
    }

    if (mode == UniversalityMode::prefix_increasing && !spec.qualitative())
        throw std::invalid_argument(
            "universality_check: prefix-increasing mode needs an objective");

    UniversalityReport report;
    auto consider = [&](const ColoredGraph& g) -> bool {
        if (mode == UniversalityMode::prefix_increasing) {
            std::vector<Value> vals = graph_value(g, spec, budget);
            bool satisfies = std::all_of(vals.begin(), vals.end(),
                                         [](const Value& v) { return v.is_win(); });
            if (!satisfies) return true; // outside the embedding obligation
            VertexMap phi = least_morphism(g, l);
            for (Vertex v = 0; v < g.size(); v++)
                if (!l.level_value(phi[v]).is_win()) {
                    report.pass = false;
                    report.counterexample = g;
                    return false;
                }
        } else {
            if (!find_min_morphism(g, l, spec, budget).val_preserving) {
                report.pass = false;
                report.counterexample = g;
                return false;
            }
        }
        report.graphs_checked++;
        return true;
    };

    report.exhaustive = budget.max_vertices <= 3 && colors.size() <= 2;
    if (report.exhaustive) {
        for (unsigned n = 1; n <= budget.max_vertices; n++)
            for (const ColoredGraph& g : enumerate_graphs(n, colors))
                if (!consider(g)) return report;
    } else {
        std::mt19937_64 rng(budget.seed);
        for (unsigned i = 0; i < budget.sample_count; i++) {
            unsigned n = 1 + (unsigned)(rng() % budget.max_vertices);
            if (!consider(random_graph(n, colors, 3, rng))) return report;
        }
    }
    return report;
}

Arena random_arena(const ValuationSpec& spec, const RandomArenaParams& params,
                   std::mt19937_64& rng)
{
    std::vector<Color> palette;
    if (spec.has_closed_alphabet()) {
        palette = spec.alphabet();
    } else if (spec.counter_based()) {
        palette = params.map_pool;
        if (palette.empty()) {
            long long cap = spec.map_cap();
            palette = {Color::map(1, 0, cap), Color::map(1, 1, cap),
                       Color::map(0, 0, cap), Color::map(0, 2, cap),
                       Color::map(2, 1, cap)};
        }
        if (spec.eps()) palette.push_back(Color::eps());
    }

    unsigned span = params.max_vertices - params.min_vertices + 1;
    unsigned n = params.min_vertices + (unsigned)(rng() % span);
    std::vector<bool> eve(n);
    for (unsigned v = 0; v < n; v++) eve[v] = rng() % 2 == 0;

    auto pick_color = [&]() -> Color {
        if (!palette.empty()) return palette[rng() % palette.size()];
        // energy: weights in the configured window (plus eps if extended)
        if (spec.eps() && rng() % 8 == 0) return Color::eps();
        long long w = params.weight_min +
                      (long long)(rng() % (uint64_t)(params.weight_max -
                                                     params.weight_min + 1));
        return Color::number(w);
    };

    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; v++) {
        unsigned deg = 1 + (unsigned)(rng() % params.max_out_degree);
        for (unsigned i = 0; i < deg; i++)
            edges.push_back({v, pick_color(), (Vertex)(rng() % n)});
    }
    return Arena(ColoredGraph(n, std::move(edges)), std::move(eve), spec);
}

} // namespace mg
