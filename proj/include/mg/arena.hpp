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

#include <string>
#include <vector>

#include "mg/graph.hpp"
#include "mg/valuation.hpp"

namespace mg {

/**
 * A game: colored graph, ownership partition, valuation. Eve (the
 * minimizer) owns the vertices in eve; Adam owns the complement.
 * Immutable after construction.
 */
class Arena {
public:
    Arena(ColoredGraph graph, std::vector<bool> eve, ValuationSpec valuation);

    const ColoredGraph& graph() const { return graph_; }
    const ValuationSpec& valuation() const { return valuation_; }
    bool eve_owns(Vertex v) const { return eve_.at(v); }
    const std::vector<bool>& eve() const { return eve_; }
    size_t size() const { return graph_.size(); }

private:
    ColoredGraph graph_;
    std::vector<bool> eve_;
    ValuationSpec valuation_;
};

/**
 * Parses the line-oriented game-file format:
 *
 *   # comment
 *   val <spec>
 *   pregraph            (optional; allows sinks)
 *   v <id> <Eve|Adam>
 *   edge <src> <color> <dst>
 *
 * Color lexemes: safe bad good wait imm eps, signed decimal integers
 * (energy weights, parity priorities), f:<a>,<b> for the capped affine
 * map n |-> min(cap, a*n+b); the cap comes from the declared valuation.
 * Vertex indices are assigned in declaration order. Errors carry the
 * line number.
 */
Arena parse_arena(const std::string& text);

/// Canonical text for the arena; parse(serialize(a)) reproduces a.
std::string serialize_arena(const Arena& a);

/// Parses a single color token under the given valuation.
Color parse_color(const std::string& token, const ValuationSpec& spec);

} // namespace mg
