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

#include <functional>
#include <optional>
#include <random>

#include "mg/arena.hpp"
#include "mg/monotone.hpp"

namespace mg {

/// Finite stand-in for "all graphs below some cardinal": enumeration
/// and sampling bounds for the oracle-side checks.
struct OracleBudget {
    unsigned max_vertices = 3;
    unsigned max_stem_len = 0;    // 0: simple stems up to |V|-1 edges
    unsigned max_cycle_len = 0;   // 0: simple cycles up to |V| edges
    unsigned sample_count = 200;  // sampled tier of universality checks
    uint64_t seed = 1;
    uint64_t max_strategies = 1u << 20;
};

/**
 * Exact value of the ultimately periodic word stem.cycle^omega under
 * the valuation. Neutral-color handling: eps occurrences are deleted;
 * a word with an all-eps cycle denotes stem.eps^omega and evaluates to
 * the best value achievable after the stem (win for the
 * prefix-invariant objectives, win iff the stem is unharmed for
 * safety / immvar / bounded, the running maximum for energy and
 * backward counters). Throws on colors outside the spec's alphabet.
 */
Value eval_lasso(const ValuationSpec& spec, const Lasso& w);

/**
 * Per-vertex values of a graph seen as a one-player game: the supremum
 * of eval_lasso over lassos from each vertex.
 *
 * Realization: for the prefix-invariant objectives the value is
 * decided by the reachable simple cycles; for the remaining
 * lasso-evaluable kinds all lassos with a simple stem and a simple
 * cycle at the stem's end are enumerated (exact: any witness path
 * decomposes at its first repeated vertex). The counter valuations are
 * instead computed by exact product-state reachability over
 * (vertex, counter) pairs, as bounded cycle enumeration cannot reach
 * their suprema. Pregraph sinks have the bottom value (no infinite
 * play).
 */
std::vector<Value> graph_value(const ColoredGraph& g, const ValuationSpec& spec,
                               const OracleBudget& budget = {});

/// User-supplied lasso valuation, for objectives outside the built-ins.
using LassoEval = std::function<Value(const Lasso&)>;

/// graph_value with a custom evaluator; always enumerates lassos.
std::vector<Value> graph_value_custom(const ColoredGraph& g, const LassoEval& eval,
                                      const OracleBudget& budget = {});

struct BruteForceResult {
    std::vector<Value> values;       // pointwise minimum over Eve strategies
    bool has_uniform_witness = false;
    std::vector<uint32_t> witness;   // per Eve vertex: the chosen edge index
};

/**
 * Enumerates every single-choice positional strategy of Eve, values
 * the induced one-player graph, and returns the pointwise minimum,
 * together with the first strategy (in lexicographic choice order)
 * attaining that minimum at every vertex simultaneously, if any.
 * Throws when the strategy count exceeds budget.max_strategies.
 */
BruteForceResult brute_force_solve(const Arena& a, const OracleBudget& budget = {});
BruteForceResult brute_force_solve_custom(const Arena& a, const LassoEval& eval,
                                          const OracleBudget& budget = {});

/// The one-player graph induced by a single-choice strategy.
ColoredGraph single_choice_subgraph(const Arena& a, const std::vector<uint32_t>& witness);

/**
 * The pointwise-least graph morphism from g (graph or pregraph) into
 * the edge relation of l, computed by lifting: the least map with
 * phi(v) >= rho_c(phi(v')) for every edge v -c-> v'. Throws if g uses
 * a color outside l's alphabet.
 */
VertexMap least_morphism(const ColoredGraph& g, const MonotoneGraph& l);

struct MorphismReport {
    VertexMap map;
    bool val_preserving = false;
};

/// least_morphism plus the val-preservation flag:
/// level_value(map(v)) equals the oracle value of v for every vertex.
MorphismReport find_min_morphism(const ColoredGraph& g, const MonotoneGraph& l,
                                 const ValuationSpec& spec,
                                 const OracleBudget& budget = {});

enum class UniversalityMode {
    general,           // mode A: every graph embeds val-preservingly
    prefix_increasing, // mode B: every graph satisfying W embeds in the winning core
};

struct UniversalityReport {
    bool pass = true;
    uint64_t graphs_checked = 0;
    bool exhaustive = false;
    std::optional<ColoredGraph> counterexample;
};

/**
 * Checks universality of l against small graphs over the given colors
 * (defaults to the spec's alphabet): exhaustively up to isomorphism
 * for <= 3 vertices over <= 2 colors, by seeded sampling otherwise.
 * Returns the first counterexample found.
 */
UniversalityReport universality_check(const MonotoneGraph& l, const ValuationSpec& spec,
                                      const OracleBudget& budget, UniversalityMode mode,
                                      std::vector<Color> colors = {});

/// All sink-free graphs on exactly n vertices over the given colors,
/// up to isomorphism. Feasible only for tiny n / alphabets.
std::vector<ColoredGraph> enumerate_graphs(unsigned n, const std::vector<Color>& colors);

/// Seeded random sink-free graph over the given colors.
ColoredGraph random_graph(unsigned n, const std::vector<Color>& colors,
                          unsigned max_out_degree, std::mt19937_64& rng);

struct RandomArenaParams {
    unsigned min_vertices = 1;
    unsigned max_vertices = 5;
    unsigned max_out_degree = 3;
    long long weight_min = -2; // energy weights
    long long weight_max = 2;
    std::vector<Color> map_pool; // counter colors; small default when empty
};

/// Seeded random arena matching the spec's alphabet.
Arena random_arena(const ValuationSpec& spec, const RandomArenaParams& params,
                   std::mt19937_64& rng);

} // namespace mg
