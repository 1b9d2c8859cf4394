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

#include <vector>

#include "mg/arena.hpp"
#include "mg/monotone.hpp"

namespace mg {

/// A map from arena vertices to ranks; after solving, a prefixpoint of
/// the update operator.
using ProgressMeasure = std::vector<Rank>;

/**
 * A positional strategy: for each Eve vertex a nonempty set of kept
 * outgoing edges (indices into the arena's edge list); Adam vertices
 * implicitly keep all edges. Ties keep every minimizing edge.
 */
struct PositionalStrategy {
    std::vector<std::vector<uint32_t>> chosen; // per vertex; empty for Adam
};

struct SolveResult {
    MonotoneGraph graph;
    ProgressMeasure measure;
    std::vector<Value> values;
    PositionalStrategy strategy;
};

/**
 * One application of the update operator: at Eve vertices the minimum
 * over outgoing edges of rho_c(phi(dst)), at Adam vertices the maximum.
 * Arenas are finite, so Adam's supremum is always attained; infinitely
 * branching games, where it need not be, are out of scope. On pregraph
 * arenas a sink contributes the bottom rank for Adam and the top rank
 * for Eve (min/max over an empty set).
 */
ProgressMeasure upd(const Arena& a, const MonotoneGraph& l, const ProgressMeasure& phi);

/**
 * The pointwise-least prefixpoint of the update operator, computed by a
 * FIFO worklist seeded with all vertices; a vertex is re-examined when
 * a successor's measure rises. start, when given, lifts from an
 * arbitrary measure instead of bottom (yielding the least prefixpoint
 * above it).
 */
ProgressMeasure least_progress_measure(const Arena& a, const MonotoneGraph& l,
                                       const ProgressMeasure* start = nullptr);

/**
 * Keeps, at each Eve vertex, exactly the outgoing edges meeting the
 * update minimum. phi must be a prefixpoint (checked; throws
 * std::invalid_argument otherwise).
 */
PositionalStrategy extract_strategy(const Arena& a, const MonotoneGraph& l,
                                    const ProgressMeasure& phi);

/// The one-player graph where Eve keeps her chosen edges and Adam
/// keeps everything.
ColoredGraph strategy_subgraph(const Arena& a, const PositionalStrategy& s);

/**
 * Sizes the universal graph to the arena: alpha = |V|+1 for
 * reachability, Buchi, co-Buchi and each parity/product factor;
 * cap = max(1, |V| * max|weight|) for energy; the counter kinds take
 * the cap from their spec. The arena's own colors supply the weight /
 * map alphabet.
 */
MonotoneGraph build_for_arena(const Arena& a);

/// build_for_arena + least_progress_measure + extract_strategy, with
/// values read off as level_value(phi(v)).
SolveResult solve(const Arena& a);

} // namespace mg
