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

#include "mg/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace mg {

MonotoneGraph lex_product_graphs(const MonotoneGraph& first, const MonotoneGraph& second)
{
    for (const Color& c : first.alphabet())
        if (second.has_color(c))
            throw std::invalid_argument("lex_product_graphs: alphabet collision on " +
                                        c.str());
    for (Rank r = 0; r < first.core(); r++)
        if (first.level_value(r) != Value::win())
            throw std::invalid_argument("lex_product_graphs: first factor core must win");
    for (Rank r = 0; r < second.core(); r++)
        if (second.level_value(r) != Value::win())
            throw std::invalid_argument("lex_product_graphs: second factor core must win");

    Rank c1 = first.core(), c2 = second.core();
    auto pair_rank = [&](Rank l1, Rank l2) { return (Rank)(l2 * c1 + l1); };

    MonotoneCore core;
    core.levels = (Rank)(c1 * c2);
    core.alphabet.reserve(first.alphabet().size() + second.alphabet().size());
    for (const Color& c : first.alphabet()) core.alphabet.push_back(c);
    for (const Color& c : second.alphabet()) core.alphabet.push_back(c);
    core.rho.assign(core.alphabet.size(),
                    std::vector<std::optional<Rank>>(core.levels, std::nullopt));

    size_t n1 = first.alphabet().size();
    for (size_t c = 0; c < core.alphabet.size(); c++) {
        bool from_first = c < n1;
        for (Rank l2 = 0; l2 < c2; l2++)
            for (Rank l1 = 0; l1 < c1; l1++) {
                Rank target = pair_rank(l1, l2);
                std::optional<Rank> pred;
                if (from_first) {
                    Rank p1 = first.rho(c, l1);
                    if (p1 < first.top()) pred = pair_rank(p1, l2);
                    else if (l2 + 1 < c2) pred = pair_rank(0, l2 + 1);
                } else {
                    Rank p2 = second.rho(c - n1, l2);
                    if (p2 < second.top()) pred = pair_rank(0, p2);
                }
                core.rho[c][target] = pred;
            }
    }

    core.level_value.assign(core.levels, Value::win());
    core.label.resize(core.levels);
    for (Rank l2 = 0; l2 < c2; l2++)
        for (Rank l1 = 0; l1 < c1; l1++)
            core.label[pair_rank(l1, l2)] =
                "(" + first.label(l1) + "," + second.label(l2) + ")";
    return complete(core);
}

ValuationSpec lex_product_objectives(ValuationSpec first, ValuationSpec second)
{
    return ValuationSpec::lex_product(std::move(first), std::move(second));
}

MonotoneGraph parity_graph(int h, unsigned alpha)
{
    if (h < 1) throw std::invalid_argument("parity_graph: h must be >= 1");
    auto factor = [&](int i) {
        return build(ValuationSpec::prio_cobuchi(i), alpha);
    };
    MonotoneGraph l = factor(1);
    for (int i = 2; i <= h; i++) l = lex_product_graphs(l, factor(i));
    return l;
}

} // namespace mg
