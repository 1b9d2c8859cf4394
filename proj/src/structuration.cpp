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

#include "mg/structuration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mg {

Vertex subset_vertex(const ColoredGraph& g, uint64_t mask)
{
    if (mask == 0 || mask >= (1ull << g.size()))
        throw std::invalid_argument("subset_vertex: bad mask");
    return (Vertex)(g.size() + mask - 1);
}

Arena powerset_game(const ColoredGraph& g, const ValuationSpec& spec,
                    unsigned max_vertices)
{
    if (!spec.eps())
        throw std::invalid_argument("powerset_game: valuation must carry eps");
    if (g.size() > max_vertices)
        throw std::invalid_argument("powerset_game: size cap exceeded");
    if (g.is_pregraph())
        throw std::invalid_argument("powerset_game: input must be sink-free");

    size_t n = g.size();
    uint64_t subsets = (1ull << n) - 1;
    std::vector<Edge> edges(g.edges());
    for (uint64_t mask = 1; mask <= subsets; mask++) {
        Vertex a = subset_vertex(g, mask);
        for (size_t v = 0; v < n; v++)
            if (mask >> v & 1) {
                edges.push_back({(Vertex)v, Color::eps(), a});
                edges.push_back({a, Color::eps(), (Vertex)v});
            }
    }

    std::vector<bool> eve(n + subsets, true);
    for (size_t v = 0; v < n; v++) eve[v] = false; // Adam walks the graph

    std::vector<std::string> names(n + subsets);
    for (size_t v = 0; v < n; v++)
        names[v] = g.name(v).empty() ? "v" + std::to_string(v) : g.name(v);
    for (uint64_t mask = 1; mask <= subsets; mask++) {
        std::string s = "{";
        for (size_t v = 0; v < n; v++)
            if (mask >> v & 1) {
                if (s.size() > 1) s += ",";
                s += names[v];
            }
        names[subset_vertex(g, mask)] = s + "}";
    }

    return Arena(ColoredGraph(n + subsets, std::move(edges), false, std::move(names)),
                 std::move(eve), spec);
}

EpsEnrichedGraph enrich_eps(const ColoredGraph& g, const Arena& powerset,
                            const std::vector<uint32_t>& witness)
{
    size_t n = g.size();
    std::vector<Edge> added;
    for (uint32_t idx : witness) {
        const Edge& e = powerset.graph().edges().at(idx);
        if (e.src < n) continue; // only subset choices matter
        if (!e.color.is_eps() || e.dst >= n)
            throw std::invalid_argument("enrich_eps: witness edge is not a handover");
        uint64_t mask = (uint64_t)(e.src - n) + 1;
        for (size_t v = 0; v < n; v++)
            if (mask >> v & 1) added.push_back({(Vertex)v, Color::eps(), e.dst});
    }

    std::vector<Edge> edges(g.edges());
    edges.insert(edges.end(), added.begin(), added.end());
    EpsEnrichedGraph out{ColoredGraph(n, std::move(edges), g.is_pregraph(), g.names()),
                         std::move(added)};
    if (!has_sufficient_eps(out.base))
        throw std::runtime_error("enrich_eps: result lacks sufficient eps-edges");
    return out;
}

bool has_sufficient_eps(const ColoredGraph& g)
{
    size_t n = g.size();
    if (n > 20) throw std::invalid_argument("has_sufficient_eps: graph too large");
    std::vector<std::vector<bool>> eps(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges())
        if (e.color.is_eps()) eps[e.src][e.dst] = true;
    for (uint64_t mask = 1; mask < (1ull << n); mask++) {
        bool found = false;
        for (size_t v = 0; v < n && !found; v++) {
            if (!(mask >> v & 1)) continue;
            bool all = true;
            for (size_t u = 0; u < n; u++)
                if ((mask >> u & 1) && !eps[u][v]) all = false;
            found = all;
        }
        if (!found) return false;
    }
    return true;
}

ColoredGraph eps_closure(const ColoredGraph& g)
{
    size_t n = g.size();
    // reflexive-transitive eps-reachability
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (size_t v = 0; v < n; v++) reach[v][v] = true;
    for (const Edge& e : g.edges())
        if (e.color.is_eps()) reach[e.src][e.dst] = true;
    for (size_t k = 0; k < n; k++)
        for (size_t i = 0; i < n; i++)
            if (reach[i][k])
                for (size_t j = 0; j < n; j++)
                    if (reach[k][j]) reach[i][j] = true;

    std::vector<Edge> closed;
    for (const Edge& e : g.edges())
        for (Vertex v = 0; v < n; v++)
            if (reach[v][e.src])
                for (Vertex w = 0; w < n; w++)
                    if (reach[e.dst][w]) closed.push_back({v, e.color, w});
    return ColoredGraph(n, std::move(closed), g.is_pregraph(), g.names());
}

QuotientResult quotient_and_complete(const ColoredGraph& g1, const ValuationSpec& spec,
                                     const OracleBudget& budget)
{
    size_t n = g1.size();
    std::vector<std::vector<bool>> eps(n, std::vector<bool>(n, false));
    for (const Edge& e : g1.edges())
        if (e.color.is_eps()) eps[e.src][e.dst] = true;

    // classes of mutual eps-reachability
    std::vector<int> cls(n, -1);
    std::vector<Vertex> rep;
    for (Vertex v = 0; v < n; v++) {
        if (cls[v] >= 0) continue;
        cls[v] = (int)rep.size();
        for (Vertex w = v + 1; w < n; w++)
            if (eps[v][w] && eps[w][v]) cls[w] = cls[v];
        rep.push_back(v);
    }
    size_t k = rep.size();

    // the eps-order on classes must be total (and is then a well-order)
    for (size_t a = 0; a < k; a++)
        for (size_t b = 0; b < k; b++)
            if (a != b && !eps[rep[a]][rep[b]] && !eps[rep[b]][rep[a]])
                throw std::runtime_error(
                    "quotient_and_complete: eps-order on classes is not total "
                    "(insufficient eps-edges)");

    // ascending: x is below y when y eps-reaches x
    std::vector<size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (a == b) return false;
        bool ab = eps[rep[a]][rep[b]], ba = eps[rep[b]][rep[a]];
        return ba && !ab;
    });
    std::vector<Rank> rank_of_class(k);
    for (size_t i = 0; i < k; i++) rank_of_class[order[i]] = (Rank)i;

    // class edges, checked well-defined across members
    std::set<std::tuple<Rank, Color, Rank>> class_edges;
    for (const Edge& e : g1.edges())
        class_edges.insert({rank_of_class[cls[e.src]], e.color,
                            rank_of_class[cls[e.dst]]});
    for (const Edge& e : g1.edges())
        for (Vertex v = 0; v < n; v++)
            if (cls[v] == cls[e.src] &&
                !g1.has_edge(v, e.color, (Vertex)e.dst))
                throw std::runtime_error(
                    "quotient_and_complete: quotient edges not well-defined "
                    "(input not eps-closed)");

    // quotient graph for oracle valuation
    std::vector<Edge> qedges;
    for (const auto& [r, c, t] : class_edges) qedges.push_back({r, c, t});
    std::vector<std::string> qnames(k);
    for (Vertex v = 0; v < n; v++) {
        std::string& s = qnames[rank_of_class[cls[v]]];
        if (!s.empty()) s += "~";
        s += g1.name(v).empty() ? "v" + std::to_string(v) : g1.name(v);
    }
    ColoredGraph quotient(k, qedges, g1.is_pregraph(), qnames);
    std::vector<Value> qvals = graph_value(quotient, spec, budget);

    MonotoneCore core;
    core.levels = (Rank)k;
    core.alphabet = quotient.alphabet();
    core.rho.assign(core.alphabet.size(),
                    std::vector<std::optional<Rank>>(k, std::nullopt));
    for (size_t c = 0; c < core.alphabet.size(); c++)
        for (Rank t = 0; t < k; t++) {
            // min predecessor; the predecessor set must be upward closed
            // for the table to represent the quotient relation
            std::optional<Rank> min;
            for (Rank r = 0; r < k; r++)
                if (class_edges.count({r, core.alphabet[c], t})) {
                    min = r;
                    break;
                }
            if (min)
                for (Rank r = *min; r < k; r++)
                    if (!class_edges.count({r, core.alphabet[c], t}))
                        throw std::runtime_error(
                            "quotient_and_complete: predecessors not upward closed "
                            "(left-composition fails)");
            core.rho[c][t] = min;
        }
    core.level_value.resize(k, spec.bottom_value());
    core.label = qnames;
    for (Rank r = 0; r < k; r++) core.level_value[r] = qvals[r];

    QuotientResult out{complete(core, spec.top_value()), VertexMap(n)};
    for (Vertex v = 0; v < n; v++) out.map[v] = rank_of_class[cls[v]];
    return out;
}

QuotientResult structurate(const ColoredGraph& g, const ValuationSpec& spec,
                           const OracleBudget& budget)
{
    Arena game = powerset_game(g, spec);
    BruteForceResult bf = brute_force_solve(game, budget);
    if (!bf.has_uniform_witness)
        throw std::runtime_error(
            "structurate: the powerset game has no uniform optimal positional "
            "strategy; this contradicts positionality of " + spec.str() +
            " at this scale");
    EpsEnrichedGraph enriched = enrich_eps(g, game, bf.witness);
    ColoredGraph closed = eps_closure(enriched.base);
    return quotient_and_complete(closed, spec, budget);
}

} // namespace mg
