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

#include "mg/arena.hpp"
#include "mg/monotone.hpp"
#include "mg/oracle.hpp"

namespace mg {

/**
 * From a graph and an eps-extended positional valuation, produces a
 * completely well-monotonic graph together with a val-preserving map,
 * by the pipeline
 *
 *   powerset game -> uniform optimal positional strategy (brute force)
 *   -> eps-edge enrichment -> eps-closure -> quotient by mutual
 *   eps-reachability -> completion.
 *
 * Desk scale only: the powerset game grows exponentially with the
 * input, so inputs are capped at 4 vertices.
 */

/// A graph together with the eps-edges contributed by enrichment.
struct EpsEnrichedGraph {
    ColoredGraph base;           // original edges plus added_eps
    std::vector<Edge> added_eps;
};

/**
 * The game where Adam walks the original graph but may at any point
 * hand a subset containing the current vertex to Eve, who picks any of
 * its members; both handovers read the neutral color. Vertices are the
 * original ones (Adam) followed by the 2^n - 1 nonempty subsets (Eve).
 * The valuation must carry eps. Throws when |V| exceeds max_vertices.
 */
Arena powerset_game(const ColoredGraph& g, const ValuationSpec& spec_with_eps,
                    unsigned max_vertices = 4);

/// Subset vertex ids of the powerset game: subset mask s (nonempty) is
/// vertex g.size() + s - 1.
Vertex subset_vertex(const ColoredGraph& g, uint64_t mask);

/**
 * Adds v -eps-> v' for every subset A with v in A whose chosen
 * successor under the witness strategy is v'. The witness is
 * brute_force_solve's uniform-witness edge list for the powerset game.
 * The result has sufficiently many eps-edges (checked).
 */
EpsEnrichedGraph enrich_eps(const ColoredGraph& g, const Arena& powerset,
                            const std::vector<uint32_t>& witness);

/// Every nonempty vertex subset has a member that all members reach by
/// a single eps-edge (checked exhaustively; feasible for small graphs).
bool has_sufficient_eps(const ColoredGraph& g);

/**
 * Closes edges around eps: v -c-> v' iff some u, u' with eps-walks
 * v ~> u and u' ~> v' have u -c-> u'. Computed from reflexive-
 * transitive eps-reachability; idempotent.
 */
ColoredGraph eps_closure(const ColoredGraph& g);

struct QuotientResult {
    MonotoneGraph graph;
    VertexMap map; // vertex -> rank of its class
};

/**
 * Quotients an eps-closed graph by mutual eps-reachability, orders the
 * classes by their eps-edges (total and well-founded when the input
 * has sufficiently many eps-edges; throws otherwise), annotates each
 * class with its oracle value, and completes. The spec values the
 * quotient classes.
 */
QuotientResult quotient_and_complete(const ColoredGraph& g1, const ValuationSpec& spec,
                                     const OracleBudget& budget = {});

/**
 * The whole pipeline. Throws (prominently) if the powerset game has no
 * uniform optimal positional single-choice strategy, which would
 * contradict positionality of the valuation at this scale.
 */
QuotientResult structurate(const ColoredGraph& g, const ValuationSpec& spec_with_eps,
                           const OracleBudget& budget = {});

} // namespace mg
