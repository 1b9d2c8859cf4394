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

#include <optional>
#include <string>
#include <vector>

#include "mg/graph.hpp"
#include "mg/valuation.hpp"
#include "mg/value.hpp"

namespace mg {

using Rank = uint32_t;

/**
 * A completely well-monotonic graph, stored as its min-predecessor
 * table: ranks 0..core-1 ascending in the lattice order (lower is
 * better for Eve) plus the distinguished top rank = core, and for each
 * color c a monotone map rho_c from ranks to ranks. The induced edge
 * relation is r -c-> r' iff r >= rho_c(r').
 *
 * Each rank carries the game value it represents and a human-readable
 * label. Immutable after construction; safe to share across threads.
 */
class MonotoneGraph {
public:
    MonotoneGraph(std::vector<Color> alphabet, std::vector<std::vector<Rank>> rho,
                  std::vector<Value> level_value, std::vector<std::string> label);

    Rank top() const { return (Rank)(level_value_.size() - 1); }
    Rank core() const { return top(); }
    Rank levels() const { return (Rank)level_value_.size(); }

    const std::vector<Color>& alphabet() const { return alphabet_; }
    size_t color_index(const Color& c) const; // throws on unknown color
    bool has_color(const Color& c) const;

    Rank rho(size_t color_index, Rank r) const { return rho_[color_index][r]; }
    Rank rho(const Color& c, Rank r) const { return rho_[color_index(c)][r]; }
    bool has_edge(Rank r, const Color& c, Rank t) const { return r >= rho(c, t); }

    const Value& level_value(Rank r) const { return level_value_.at(r); }
    const std::string& label(Rank r) const { return label_.at(r); }

private:
    std::vector<Color> alphabet_;            // sorted, unique
    std::vector<std::vector<Rank>> rho_;     // [color][rank], size levels()
    std::vector<Value> level_value_;         // size levels()
    std::vector<std::string> label_;         // size levels()
};

/**
 * A monotonic graph under construction: min-predecessor entries may be
 * missing where a color has no predecessor. complete() turns it into a
 * MonotoneGraph by appending the absorbing top rank.
 */
struct MonotoneCore {
    std::vector<Color> alphabet;
    Rank levels = 0;
    std::vector<std::vector<std::optional<Rank>>> rho; // [color][rank]
    std::vector<Value> level_value;
    std::vector<std::string> label;
};

/**
 * Appends the completion element: a fresh top rank with all outgoing
 * edges (rho_c(top) = top for every c), and rho_c(r') = top wherever no
 * predecessor existed. Validates rho- and value-monotonicity of the
 * core. top_value defaults to the worst value of the core's kind.
 */
MonotoneGraph complete(const MonotoneCore& core,
                       std::optional<Value> top_value = std::nullopt,
                       std::string top_label = "top");

/// Re-completion of an already complete graph; adds a redundant top
/// above the old one. Completion is not idempotent.
MonotoneGraph complete(const MonotoneGraph& l);

/**
 * Builds the completed universal graph for a built-in valuation:
 *
 *   safety        1 core rank, rho_safe(0)=0
 *   immvar        core {0,1} over {imm,safe,bad}, rank 2 is top
 *   reach         core [0,alpha], rho_wait(x)=min(x+1,alpha), rho_good=0
 *   buchi         core [0,alpha), edges: good, or strict decrease
 *   cobuchi       core [0,alpha), bad decreases strictly, safe weakly
 *   parity:h      lexicographic product of h co-Buchi factors
 *   energy:cap    core [0,cap], rho_t(x)=max(0,x+t), top on overflow
 *   backsup:cap   core [0,cap], rho_f(x)=f(x), top on overflow
 *   bounded:N     core ranks are counter values in reverse order
 *
 * size_budget supplies alpha for reach/buchi/cobuchi/parity (must be
 * >= 1); the quantitative kinds take their size from the spec itself.
 * payload supplies the weight / map alphabet for the open-alphabet
 * kinds (a small default set is used when empty). A spec with eps gets
 * the neutral color with rho_eps = identity.
 */
MonotoneGraph build(const ValuationSpec& spec, unsigned size_budget,
                    const std::vector<Color>& payload = {});

/**
 * Materializes the induced edge relation {(r,c,r') | r >= rho_c(r')}
 * as a ColoredGraph on ranks (flagged pregraph in the degenerate case
 * where some rank has no outgoing edge over the stored alphabet).
 */
ColoredGraph edges_from_table(const MonotoneGraph& l);

/**
 * Checks the two composition axioms on an explicit colored graph whose
 * vertex indices are taken in ascending lattice order:
 *   l >= l' -c-> l''  implies  l -c-> l''   (left-composition)
 *   l -c-> l' >= l''  implies  l -c-> l''   (right-composition)
 */
bool check_axioms(const ColoredGraph& g);

/// True iff every rho_c is monotone over all rank pairs.
bool check_rho_monotone(const MonotoneGraph& l);

/// Adds the neutral color with rho_eps = identity.
MonotoneGraph add_eps(const MonotoneGraph& l);

/// Bijective color renaming (used to relabel parity factors).
MonotoneGraph rename_colors(const MonotoneGraph& l,
                            const std::vector<std::pair<Color, Color>>& mapping);

/// Textual dump: a levels header, one rank line per level, one rho line
/// per (color, target) pair.
std::string dump(const MonotoneGraph& l);
MonotoneGraph parse_dump(const std::string& text);

/// DOT rendering of edges_from_table for inspection.
std::string to_dot(const MonotoneGraph& l);

} // namespace mg
