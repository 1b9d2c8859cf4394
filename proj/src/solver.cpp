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

#include "mg/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mg {

namespace {

Rank upd_at(const Arena& a, const MonotoneGraph& l,
            const std::vector<size_t>& color_of_edge, const ProgressMeasure& phi,
            Vertex v)
{
    auto edges = a.graph().out(v);
    bool eve = a.eve_owns(v);
    Rank acc = eve ? l.top() : 0;
    size_t base = edges.data() - a.graph().edges().data();
    for (size_t i = 0; i < edges.size(); i++) {
        Rank r = l.rho(color_of_edge[base + i], phi[edges[i].dst]);
        if (eve) acc = std::min(acc, r);
        else acc = std::max(acc, r);
    }
    return acc;
}

std::vector<size_t> index_colors(const Arena& a, const MonotoneGraph& l)
{
    std::vector<size_t> color_of_edge;
    color_of_edge.reserve(a.graph().edges().size());
    for (const Edge& e : a.graph().edges())
        color_of_edge.push_back(l.color_index(e.color));
    return color_of_edge;
}

} // namespace

ProgressMeasure upd(const Arena& a, const MonotoneGraph& l, const ProgressMeasure& phi)
{
    if (phi.size() != a.size()) throw std::invalid_argument("upd: measure size mismatch");
    auto colors = index_colors(a, l);
    ProgressMeasure out(a.size());
    for (Vertex v = 0; v < a.size(); v++) out[v] = upd_at(a, l, colors, phi, v);
    return out;
}

ProgressMeasure least_progress_measure(const Arena& a, const MonotoneGraph& l,
                                       const ProgressMeasure* start)
{
    size_t n = a.size();
    ProgressMeasure phi(n, 0);
    if (start) {
        if (start->size() != n)
            throw std::invalid_argument("least_progress_measure: start size mismatch");
        phi = *start;
    }
    auto colors = index_colors(a, l);

    std::vector<std::vector<Vertex>> preds(n);
    for (const Edge& e : a.graph().edges()) preds[e.dst].push_back(e.src);
    for (auto& ps : preds) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    }

    std::deque<Vertex> queue;
    std::vector<bool> queued(n, true);
    for (Vertex v = 0; v < n; v++) queue.push_back(v);

    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        queued[v] = false;
        Rank r = upd_at(a, l, colors, phi, v);
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

PositionalStrategy extract_strategy(const Arena& a, const MonotoneGraph& l,
                                    const ProgressMeasure& phi)
{
    ProgressMeasure lifted = upd(a, l, phi);
    for (Vertex v = 0; v < a.size(); v++)
        if (lifted[v] > phi[v])
            throw std::invalid_argument("extract_strategy: measure is not a prefixpoint");

    auto colors = index_colors(a, l);
    PositionalStrategy s;
    s.chosen.resize(a.size());
    for (Vertex v = 0; v < a.size(); v++) {
        if (!a.eve_owns(v)) continue;
        auto edges = a.graph().out(v);
        size_t base = edges.data() - a.graph().edges().data();
        Rank best = l.top();
        for (size_t i = 0; i < edges.size(); i++)
            best = std::min(best, l.rho(colors[base + i], phi[edges[i].dst]));
        for (size_t i = 0; i < edges.size(); i++)
            if (l.rho(colors[base + i], phi[edges[i].dst]) == best)
                s.chosen[v].push_back((uint32_t)(base + i));
    }
    return s;
}

ColoredGraph strategy_subgraph(const Arena& a, const PositionalStrategy& s)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < a.size(); v++) {
        if (a.eve_owns(v)) {
            for (uint32_t idx : s.chosen[v]) edges.push_back(a.graph().edges()[idx]);
        } else {
            for (const Edge& e : a.graph().out(v)) edges.push_back(e);
        }
    }
    std::vector<std::string> names(a.graph().names());
    return ColoredGraph(a.size(), std::move(edges), a.graph().is_pregraph(),
                        std::move(names));
}

MonotoneGraph build_for_arena(const Arena& a)
{
    unsigned alpha = (unsigned)a.size() + 1;
    const ValuationSpec& spec = a.valuation();

    std::vector<Color> payload;
    for (const Color& c : a.graph().alphabet())
        if (c.kind() != Color::Kind::symbol) payload.push_back(c);

    if (spec.kind() == ValuationSpec::Kind::energy) {
        long long maxw = 0;
        for (const Color& c : payload) maxw = std::max(maxw, std::llabs(c.num()));
        long long cap = std::max<long long>(1, (long long)a.size() * maxw);
        ValuationSpec sized = ValuationSpec::energy(cap);
        if (spec.eps()) sized = sized.with_eps();
        return build(sized, alpha, payload);
    }
    return build(spec, alpha, payload);
}

SolveResult solve(const Arena& a)
{
    if (a.graph().is_pregraph())
        throw std::invalid_argument("solve: arena graph must be sink-free");
    MonotoneGraph l = build_for_arena(a);
    ProgressMeasure phi = least_progress_measure(a, l);
    PositionalStrategy s = extract_strategy(a, l, phi);
    std::vector<Value> values;
    values.reserve(a.size());
    for (Vertex v = 0; v < a.size(); v++) values.push_back(l.level_value(phi[v]));
    return SolveResult{std::move(l), std::move(phi), std::move(values), std::move(s)};
}

} // namespace mg
