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

#include "mg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mg {

ColoredGraph::ColoredGraph(size_t num_vertices, std::vector<Edge> edges, bool pregraph,
                           std::vector<std::string> names)
    : n_(num_vertices), edges_(std::move(edges)), pregraph_(pregraph),
      names_(std::move(names))
{
    for (const Edge& e : edges_)
        if (e.src >= n_ || e.dst >= n_)
            throw std::invalid_argument("ColoredGraph: edge endpoint out of range");

    // parallel (src, color, dst) duplicates are merged
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    first_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) first_[e.src + 1]++;
    for (size_t v = 0; v < n_; v++) first_[v + 1] += first_[v];
}

std::span<const Edge> ColoredGraph::out(Vertex v) const
{
    if (v >= n_) throw std::out_of_range("ColoredGraph::out");
    return {edges_.data() + first_[v], edges_.data() + first_[v + 1]};
}

bool ColoredGraph::has_edge(Vertex src, const Color& c, Vertex dst) const
{
    Edge e{src, c, dst};
    auto o = out(src);
    return std::binary_search(o.begin(), o.end(), e);
}

const std::string& ColoredGraph::name(Vertex v) const
{
    static const std::string empty;
    if (v < names_.size() && !names_[v].empty()) return names_[v];
    return empty;
}

std::vector<Color> ColoredGraph::alphabet() const
{
    std::vector<Color> cs;
    for (const Edge& e : edges_) cs.push_back(e.color);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

std::string ColoredGraph::encode() const
{
    std::string s = std::to_string(n_);
    s += pregraph_ ? "p" : "g";
    for (const Edge& e : edges_) {
        s += '|';
        s += std::to_string(e.src);
        s += ' ';
        s += e.color.str();
        s += ' ';
        s += std::to_string(e.dst);
    }
    return s;
}

std::vector<std::string> validate_graph(const ColoredGraph& g)
{
    std::vector<std::string> violations;
    if (!g.is_pregraph())
        for (Vertex v = 0; v < g.size(); v++)
            if (g.out_degree(v) == 0) {
                std::string id = g.name(v).empty() ? std::to_string(v) : g.name(v);
                violations.push_back("sink at " + id);
            }
    return violations;
}

bool check_morphism(const ColoredGraph& g, const ColoredGraph& h, const VertexMap& phi)
{
    if (phi.size() != g.size())
        throw std::invalid_argument("check_morphism: map not total over the source");
    for (Vertex img : phi)
        if (img >= h.size())
            throw std::invalid_argument("check_morphism: image vertex out of range");
    for (const Edge& e : g.edges())
        if (!h.has_edge(phi[e.src], e.color, phi[e.dst])) return false;
    return true;
}

ColoredGraph permute_graph(const ColoredGraph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.src], e.color, perm[e.dst]});
    return ColoredGraph(g.size(), std::move(edges), g.is_pregraph());
}

std::string canonical_form(const ColoredGraph& g)
{
    std::vector<Vertex> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = g.encode();
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string s = permute_graph(g, perm).encode();
        if (s < best) best = std::move(s);
    }
    return best;
}

} // namespace mg
