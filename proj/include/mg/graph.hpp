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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mg/color.hpp"

namespace mg {

using Vertex = uint32_t;

struct Edge {
    Vertex src;
    Color color;
    Vertex dst;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A total map from the vertices of a source graph into some target
/// graph (or into the ranks of a monotonic graph).
using VertexMap = std::vector<Vertex>;

/**
 * A finite directed graph with colored edges. Sink-free unless
 * explicitly flagged as a pregraph. Vertices are dense indices with an
 * optional name table; edge triples are kept sorted and deduplicated,
 * and the structure is immutable after construction.
 */
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(size_t num_vertices, std::vector<Edge> edges, bool pregraph = false,
                 std::vector<std::string> names = {});

    size_t size() const { return n_; }
    bool is_pregraph() const { return pregraph_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Edge> out(Vertex v) const;
    size_t out_degree(Vertex v) const { return out(v).size(); }
    bool has_edge(Vertex src, const Color& c, Vertex dst) const;

    const std::string& name(Vertex v) const;
    const std::vector<std::string>& names() const { return names_; }

    /// Distinct colors, ascending.
    std::vector<Color> alphabet() const;

    /// Key invariant under vertex relabeling; minimal over all
    /// permutations it is a canonical form (used to dedup enumerations).
    std::string encode() const;

private:
    size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint32_t> first_; // CSR offsets into edges_, size n_+1
    bool pregraph_ = false;
    std::vector<std::string> names_;
};

/**
 * Checks graph well-formedness. Returns an empty list iff the graph is
 * legal (or a legal pregraph when flagged); each violation names the
 * offending vertex or edge.
 */
std::vector<std::string> validate_graph(const ColoredGraph& g);

/**
 * True iff phi maps every edge v -c-> v' of g onto an edge
 * phi(v) -c-> phi(v') of h. Throws if phi is not total from g into h.
 */
bool check_morphism(const ColoredGraph& g, const ColoredGraph& h, const VertexMap& phi);

/// Same graph with vertices renamed by perm (perm[v] = new index).
ColoredGraph permute_graph(const ColoredGraph& g, const std::vector<Vertex>& perm);

/// Minimal encode() over all vertex permutations; only sensible for
/// small graphs (enumeration dedup).
std::string canonical_form(const ColoredGraph& g);

} // namespace mg
