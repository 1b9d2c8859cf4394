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

#include "mg/monotone.hpp"
#include "mg/valuation.hpp"

namespace mg {

class MonotoneGraph;

/**
 * Lexicographic product of two completely well-monotonic graphs over
 * disjoint alphabets, second factor dominant. Core ranks are the pairs
 * of factor core ranks, ordered lexicographically ((l1,l2) >= (l1',l2')
 * iff l2 > l2', or l2 = l2' and l1 >= l1'); a fresh top sits above all
 * pairs. Edges:
 *
 *   (l1,l2) -c2-> (l1',l2')  iff  l2 -c2-> l2' in the second factor
 *   (l1,l2) -c1-> (l1',l2')  iff  l2 > l2', or l2 = l2' and
 *                                 l1 -c1-> l1' in the first factor
 *
 * Factors must be objectives whose core ranks all carry the value win
 * (which holds for every qualitative builder here); throws on alphabet
 * collision or unsuitable factors.
 */
MonotoneGraph lex_product_graphs(const MonotoneGraph& first, const MonotoneGraph& second);

/**
 * Lexicographic product of two objectives over disjoint alphabets,
 * second factor dominant: a word wins iff its second-alphabet
 * restriction is infinite and wins the second objective, or is finite
 * and the first-alphabet restriction wins the first. Factors must be
 * prefix-invariant objectives; throws otherwise.
 */
ValuationSpec lex_product_objectives(ValuationSpec first, ValuationSpec second);

/**
 * The universal graph for parity over priorities [2, 2h+1]: the
 * lexicographic product of h co-Buchi graphs, factor i renamed to
 * colors {2i, 2i+1} (safe |-> 2i, bad |-> 2i+1), higher factors
 * dominant, each factor built with alpha levels.
 */
MonotoneGraph parity_graph(int h, unsigned alpha);

} // namespace mg
