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

#include "mg/monotone.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mg/products.hpp"

namespace mg {

MonotoneGraph::MonotoneGraph(std::vector<Color> alphabet,
                             std::vector<std::vector<Rank>> rho,
                             std::vector<Value> level_value,
                             std::vector<std::string> label)
    : alphabet_(std::move(alphabet)), rho_(std::move(rho)),
      level_value_(std::move(level_value)), label_(std::move(label))
{
    size_t n = level_value_.size();
    if (n == 0) throw std::invalid_argument("MonotoneGraph: no levels");
    if (label_.size() != n || rho_.size() != alphabet_.size())
        throw std::invalid_argument("MonotoneGraph: size mismatch");
    if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
        std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
        throw std::invalid_argument("MonotoneGraph: alphabet not sorted/unique");
    Rank t = top();
    for (const auto& row : rho_) {
        if (row.size() != n) throw std::invalid_argument("MonotoneGraph: rho row size");
        if (row[t] != t)
            throw std::invalid_argument("MonotoneGraph: top must absorb (rho(top)=top)");
        for (Rank r = 0; r + 1 < n; r++)
            if (row[r] > row[r + 1])
                throw std::invalid_argument("MonotoneGraph: rho not monotone");
    }
    for (Rank r = 0; r + 1 < n; r++)
        if (level_value_[r + 1] < level_value_[r])
            throw std::invalid_argument("MonotoneGraph: level_value not monotone");
}

size_t MonotoneGraph::color_index(const Color& c) const
{
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end() || *it != c)
        throw std::invalid_argument("MonotoneGraph: unknown color " + c.str());
    return (size_t)(it - alphabet_.begin());
}

bool MonotoneGraph::has_color(const Color& c) const
{
    return std::binary_search(alphabet_.begin(), alphabet_.end(), c);
}

MonotoneGraph complete(const MonotoneCore& core, std::optional<Value> top_value,
                       std::string top_label)
{
    if (core.levels == 0) throw std::invalid_argument("complete: empty core");
    if (core.level_value.size() != core.levels || core.label.size() != core.levels ||
        core.rho.size() != core.alphabet.size())
        throw std::invalid_argument("complete: size mismatch");

    Rank t = core.levels;
    Value tv = top_value ? *top_value
                         : (core.level_value[0].is_qualitative() ? Value::lose()
                                                                 : Value::infinity());

    // sort alphabet, carrying rho rows along
    std::vector<size_t> order(core.alphabet.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return core.alphabet[a] < core.alphabet[b]; });

    std::vector<Color> alphabet;
    std::vector<std::vector<Rank>> rho;
    for (size_t i : order) {
        alphabet.push_back(core.alphabet[i]);
        const auto& src = core.rho[i];
        if (src.size() != core.levels)
            throw std::invalid_argument("complete: rho row size");
        std::vector<Rank> row(core.levels + 1, t);
        for (Rank r = 0; r < core.levels; r++)
            if (src[r]) {
                if (*src[r] >= core.levels)
                    throw std::invalid_argument("complete: rho entry out of range");
                row[r] = *src[r];
            }
        rho.push_back(std::move(row));
    }

    std::vector<Value> values = core.level_value;
    values.push_back(tv);
    std::vector<std::string> labels = core.label;
    labels.push_back(std::move(top_label));
    return MonotoneGraph(std::move(alphabet), std::move(rho), std::move(values),
                         std::move(labels));
}

MonotoneGraph complete(const MonotoneGraph& l)
{
    MonotoneCore core;
    core.alphabet = l.alphabet();
    core.levels = l.levels();
    core.level_value.assign(l.levels(), l.level_value(0));
    core.label.resize(l.levels());
    for (Rank r = 0; r < l.levels(); r++) {
        core.level_value[r] = l.level_value(r);
        core.label[r] = l.label(r);
    }
    core.rho.resize(core.alphabet.size());
    for (size_t c = 0; c < core.alphabet.size(); c++) {
        core.rho[c].resize(core.levels);
        for (Rank r = 0; r < core.levels; r++) core.rho[c][r] = l.rho(c, r);
    }
    return complete(core, l.level_value(l.top()), l.label(l.top()) + "'");
}

namespace {

MonotoneCore qualitative_core(Rank levels, std::vector<Color> alphabet)
{
    MonotoneCore core;
    core.levels = levels;
    core.alphabet = std::move(alphabet);
    core.rho.assign(core.alphabet.size(),
                    std::vector<std::optional<Rank>>(levels, std::nullopt));
    core.level_value.assign(levels, Value::win());
    core.label.resize(levels);
    for (Rank r = 0; r < levels; r++) core.label[r] = std::to_string(r);
    return core;
}

MonotoneGraph build_safety()
{
    MonotoneCore core = qualitative_core(1, {Color::symbol(Sym::safe),
                                             Color::symbol(Sym::bad)});
    core.rho[0][0] = 0; // safe
    return complete(core);
}

// Core {0,1} over {imm,safe,bad}; 0 collects the vertices whose every
// outgoing edge is imm and which never reach bad, 1 those that never
// reach bad, and the completion top everything else. Validated by the
// axiom and universality tests.
MonotoneGraph build_imm_variant()
{
    MonotoneCore core = qualitative_core(2, {Color::symbol(Sym::imm),
                                             Color::symbol(Sym::safe),
                                             Color::symbol(Sym::bad)});
    core.level_value[1] = Value::lose(); // 1 does not satisfy the objective
    core.rho[0][0] = 0;                  // imm: predecessors of 0 are {0,1}
    core.rho[0][1] = 0;                  // imm: predecessors of 1 are {0,1}
    core.rho[1][0] = 1;                  // safe: predecessors of 0 are {1}
    core.rho[1][1] = 1;                  // safe: predecessors of 1 are {1}
    return complete(core);
}

MonotoneGraph build_reachability(Rank alpha)
{
    MonotoneCore core = qualitative_core(alpha + 1, {Color::symbol(Sym::wait),
                                                     Color::symbol(Sym::good)});
    core.level_value[alpha] = Value::lose();
    for (Rank r = 0; r <= alpha; r++) {
        core.rho[0][r] = std::min<Rank>(r + 1, alpha); // wait
        core.rho[1][r] = 0;                            // good
    }
    return complete(core);
}

MonotoneGraph build_buchi(Rank alpha)
{
    MonotoneCore core = qualitative_core(alpha, {Color::symbol(Sym::wait),
                                                 Color::symbol(Sym::good)});
    for (Rank r = 0; r < alpha; r++) {
        if (r + 1 < alpha) core.rho[0][r] = r + 1; // wait: strict decrease
        core.rho[1][r] = 0;                        // good
    }
    return complete(core);
}

MonotoneGraph build_cobuchi(Rank alpha)
{
    MonotoneCore core = qualitative_core(alpha, {Color::symbol(Sym::safe),
                                                 Color::symbol(Sym::bad)});
    for (Rank r = 0; r < alpha; r++) {
        core.rho[0][r] = r;                        // safe: weak decrease
        if (r + 1 < alpha) core.rho[1][r] = r + 1; // bad: strict decrease
    }
    return complete(core);
}

MonotoneGraph build_energy(long long cap, const std::vector<Color>& payload)
{
    if (cap < 1)
        throw std::invalid_argument("energy build: unsized spec (use energy:<cap>)");
    std::vector<Color> weights = payload;
    if (weights.empty())
        for (long long t = -cap; t <= cap; t++) weights.push_back(Color::number(t));
    for (const Color& c : weights)
        if (c.kind() != Color::Kind::number)
            throw std::invalid_argument("energy build: weight alphabet expected");

    MonotoneCore core;
    core.levels = (Rank)(cap + 1);
    core.alphabet = weights;
    core.rho.assign(weights.size(),
                    std::vector<std::optional<Rank>>(core.levels, std::nullopt));
    for (size_t c = 0; c < weights.size(); c++) {
        long long t = weights[c].num();
        for (Rank r = 0; r < core.levels; r++) {
            long long pred = std::max<long long>(0, (long long)r + t);
            if (pred <= cap) core.rho[c][r] = (Rank)pred;
        }
    }
    core.level_value.clear();
    core.label.clear();
    for (Rank r = 0; r < core.levels; r++) {
        core.level_value.push_back(Value::number(r));
        core.label.push_back(std::to_string(r));
    }
    return complete(core);
}

std::vector<Color> default_maps(long long cap)
{
    return {Color::map(1, 0, cap), Color::map(1, 1, cap), Color::map(0, 0, cap),
            Color::map(2, 1, cap)};
}

MonotoneGraph build_backward_sup(long long cap, const std::vector<Color>& payload)
{
    std::vector<Color> maps = payload.empty() ? default_maps(cap) : payload;
    for (const Color& c : maps)
        if (c.kind() != Color::Kind::map)
            throw std::invalid_argument("backsup build: map alphabet expected");

    MonotoneCore core;
    core.levels = (Rank)(cap + 1);
    core.alphabet = maps;
    core.rho.assign(maps.size(),
                    std::vector<std::optional<Rank>>(core.levels, std::nullopt));
    for (size_t c = 0; c < maps.size(); c++)
        for (Rank r = 0; r < core.levels; r++) {
            long long pred = maps[c].apply(r);
            if (pred <= cap) core.rho[c][r] = (Rank)pred;
        }
    core.level_value.clear();
    core.label.clear();
    for (Rank r = 0; r < core.levels; r++) {
        core.level_value.push_back(Value::number(r));
        core.label.push_back(std::to_string(r));
    }
    return complete(core);
}

// Ranks are stored in lattice order; rank r encodes counter value N-r
// (rank 0, the best, tolerates a start at N). The semantic counter
// value is kept in the label.
MonotoneGraph build_bounded(long long n, const std::vector<Color>& payload)
{
    std::vector<Color> maps = payload.empty() ? default_maps(n + 1) : payload;
    for (const Color& c : maps)
        if (c.kind() != Color::Kind::map)
            throw std::invalid_argument("bounded build: map alphabet expected");

    MonotoneCore core;
    core.levels = (Rank)(n + 1);
    core.alphabet = maps;
    core.rho.assign(maps.size(),
                    std::vector<std::optional<Rank>>(core.levels, std::nullopt));
    for (size_t c = 0; c < maps.size(); c++)
        for (Rank rp = 0; rp < core.levels; rp++) {
            long long target_counter = n - rp;
            // least rank whose counter maps below the target, i.e. the
            // largest tolerated start max{l in [0,N] | f(l) <= target}
            std::optional<Rank> pred;
            for (long long l = n; l >= 0; l--)
                if (maps[c].apply(l) <= target_counter) {
                    pred = (Rank)(n - l);
                    break;
                }
            core.rho[c][rp] = pred;
        }
    core.level_value.assign(core.levels, Value::win());
    core.label.clear();
    for (Rank r = 0; r < core.levels; r++)
        core.label.push_back("counter=" + std::to_string(n - r));
    return complete(core, Value::lose(), "bot");
}

} // namespace

MonotoneGraph add_eps(const MonotoneGraph& l)
{
    if (l.has_color(Color::eps()))
        throw std::invalid_argument("add_eps: eps already present");
    MonotoneCore core;
    core.alphabet = l.alphabet();
    core.alphabet.push_back(Color::eps());
    core.levels = l.core();
    core.rho.resize(core.alphabet.size());
    for (size_t c = 0; c + 1 < core.alphabet.size(); c++) {
        core.rho[c].resize(core.levels);
        for (Rank r = 0; r < core.levels; r++) {
            Rank p = l.rho(c, r);
            core.rho[c][r] = p == l.top() ? std::nullopt : std::optional<Rank>(p);
        }
    }
    auto& eps_row = core.rho.back();
    eps_row.resize(core.levels);
    for (Rank r = 0; r < core.levels; r++) eps_row[r] = r;
    core.level_value.resize(core.levels, l.level_value(0));
    core.label.resize(core.levels);
    for (Rank r = 0; r < core.levels; r++) {
        core.level_value[r] = l.level_value(r);
        core.label[r] = l.label(r);
    }
    return complete(core, l.level_value(l.top()), l.label(l.top()));
}

MonotoneGraph rename_colors(const MonotoneGraph& l,
                            const std::vector<std::pair<Color, Color>>& mapping)
{
    auto renamed = [&](const Color& c) {
        for (const auto& [from, to] : mapping)
            if (c == from) return to;
        return c;
    };
    MonotoneCore core;
    core.levels = l.core();
    core.rho.resize(l.alphabet().size());
    for (size_t c = 0; c < l.alphabet().size(); c++) {
        core.alphabet.push_back(renamed(l.alphabet()[c]));
        core.rho[c].resize(core.levels);
        for (Rank r = 0; r < core.levels; r++) {
            Rank p = l.rho(c, r);
            core.rho[c][r] = p == l.top() ? std::nullopt : std::optional<Rank>(p);
        }
    }
    core.level_value.resize(core.levels, l.level_value(0));
    core.label.resize(core.levels);
    for (Rank r = 0; r < core.levels; r++) {
        core.level_value[r] = l.level_value(r);
        core.label[r] = l.label(r);
    }
    return complete(core, l.level_value(l.top()), l.label(l.top()));
}

MonotoneGraph build(const ValuationSpec& spec, unsigned size_budget,
                    const std::vector<Color>& payload)
{
    using Kind = ValuationSpec::Kind;
    if (size_budget < 1) throw std::invalid_argument("build: size budget must be >= 1");

    MonotoneGraph l = [&]() -> MonotoneGraph {
        switch (spec.kind()) {
        case Kind::safety: return build_safety();
        case Kind::imm_variant: return build_imm_variant();
        case Kind::reachability: return build_reachability(size_budget);
        case Kind::buchi: return build_buchi(size_budget);
        case Kind::cobuchi: return build_cobuchi(size_budget);
        case Kind::parity: return parity_graph(spec.half_priorities(), size_budget);
        case Kind::prio_cobuchi: {
            int i = spec.prio_index();
            return rename_colors(build_cobuchi(size_budget),
                                 {{Color::symbol(Sym::safe), Color::number(2 * i)},
                                  {Color::symbol(Sym::bad), Color::number(2 * i + 1)}});
        }
        case Kind::energy: return build_energy(spec.cap(), payload);
        case Kind::backward_sup: return build_backward_sup(spec.cap(), payload);
        case Kind::bounded: return build_bounded(spec.bound(), payload);
        case Kind::lex_product: {
            // factor specs never carry eps themselves (disjointness)
            MonotoneGraph a = build(spec.first(), size_budget, payload);
            MonotoneGraph b = build(spec.second(), size_budget, payload);
            return lex_product_graphs(a, b);
        }
        }
        throw std::invalid_argument("build: unsupported spec kind");
    }();

    return spec.eps() ? add_eps(l) : l;
}

ColoredGraph edges_from_table(const MonotoneGraph& l)
{
    std::vector<Edge> edges;
    for (size_t c = 0; c < l.alphabet().size(); c++)
        for (Rank t = 0; t < l.levels(); t++)
            for (Rank r = l.rho(c, t); r < l.levels(); r++)
                edges.push_back({r, l.alphabet()[c], t});

    std::vector<bool> has_out(l.levels(), false);
    for (const Edge& e : edges) has_out[e.src] = true;
    bool pregraph = false;
    for (bool b : has_out)
        if (!b) pregraph = true;

    std::vector<std::string> names;
    for (Rank r = 0; r < l.levels(); r++) names.push_back(l.label(r));
    return ColoredGraph(l.levels(), std::move(edges), pregraph, std::move(names));
}

bool check_axioms(const ColoredGraph& g)
{
    size_t n = g.size();
    for (const Color& c : g.alphabet()) {
        // successor sets per vertex, as bool matrix
        std::vector<std::vector<bool>> succ(n, std::vector<bool>(n, false));
        for (const Edge& e : g.edges())
            if (e.color == c) succ[e.src][e.dst] = true;
        // left-composition: larger vertices inherit all successors
        for (size_t v = 0; v + 1 < n; v++)
            for (size_t w = 0; w < n; w++)
                if (succ[v][w] && !succ[v + 1][w]) return false;
        // right-composition: successor sets are downward closed
        for (size_t v = 0; v < n; v++)
            for (size_t w = 0; w + 1 < n; w++)
                if (succ[v][w + 1] && !succ[v][w]) return false;
    }
    return true;
}

bool check_rho_monotone(const MonotoneGraph& l)
{
    for (size_t c = 0; c < l.alphabet().size(); c++)
        for (Rank r = 0; r < l.levels(); r++)
            for (Rank s = r; s < l.levels(); s++)
                if (l.rho(c, r) > l.rho(c, s)) return false;
    return true;
}

std::string dump(const MonotoneGraph& l)
{
    std::ostringstream os;
    os << "levels " << l.levels() << " top " << l.top() << "\n";
    for (Rank r = 0; r < l.levels(); r++)
        os << "rank " << r << " value " << l.level_value(r) << " label " << l.label(r)
           << "\n";
    for (size_t c = 0; c < l.alphabet().size(); c++)
        for (Rank r = 0; r < l.levels(); r++)
            os << "rho " << l.alphabet()[c].str() << " " << r << " -> " << l.rho(c, r)
               << "\n";
    return os.str();
}

namespace {

Color parse_dump_color(const std::string& token)
{
    if (token == "safe") return Color::symbol(Sym::safe);
    if (token == "bad") return Color::symbol(Sym::bad);
    if (token == "good") return Color::symbol(Sym::good);
    if (token == "wait") return Color::symbol(Sym::wait);
    if (token == "imm") return Color::symbol(Sym::imm);
    if (token == "eps") return Color::eps();
    if (token.rfind("f:", 0) == 0) {
        size_t comma = token.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("parse_dump: bad map color " + token);
        // caps are not serialized; axiom checking does not need them
        return Color::map(std::stoll(token.substr(2, comma - 2)),
                          std::stoll(token.substr(comma + 1)), 0);
    }
    return Color::number(std::stoll(token));
}

Value parse_dump_value(const std::string& token)
{
    if (token == "win") return Value::win();
    if (token == "lose") return Value::lose();
    if (token == "inf") return Value::infinity();
    return Value::number(std::stoll(token));
}

} // namespace

MonotoneGraph parse_dump(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    size_t levels = 0;
    std::vector<Value> values;
    std::vector<std::string> labels;
    std::map<Color, std::vector<Rank>> rho;

    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "levels") {
            std::string topkw;
            size_t top;
            if (!(ls >> levels >> topkw >> top) || topkw != "top" || top + 1 != levels)
                throw std::runtime_error("parse_dump: bad levels line");
            values.assign(levels, Value::win());
            labels.assign(levels, "");
        } else if (head == "rank") {
            size_t r;
            std::string kw1, vtoken, kw2;
            if (!(ls >> r >> kw1 >> vtoken >> kw2) || kw1 != "value" || kw2 != "label" ||
                r >= levels)
                throw std::runtime_error("parse_dump: bad rank line: " + line);
            values[r] = parse_dump_value(vtoken);
            std::string rest;
            std::getline(ls, rest);
            size_t start = rest.find_first_not_of(' ');
            labels[r] = start == std::string::npos ? "" : rest.substr(start);
        } else if (head == "rho") {
            std::string ctoken, arrow;
            size_t r, p;
            if (!(ls >> ctoken >> r >> arrow >> p) || arrow != "->" || r >= levels ||
                p >= levels)
                throw std::runtime_error("parse_dump: bad rho line: " + line);
            Color c = parse_dump_color(ctoken);
            auto& row = rho[c];
            row.resize(levels, (Rank)(levels - 1));
            row[r] = (Rank)p;
        } else {
            throw std::runtime_error("parse_dump: unknown directive " + head);
        }
    }
    if (levels == 0) throw std::runtime_error("parse_dump: missing levels line");

    std::vector<Color> alphabet;
    std::vector<std::vector<Rank>> rows;
    for (auto& [c, row] : rho) {
        alphabet.push_back(c);
        rows.push_back(std::move(row));
    }
    return MonotoneGraph(std::move(alphabet), std::move(rows), std::move(values),
                         std::move(labels));
}

std::string to_dot(const MonotoneGraph& l)
{
    std::ostringstream os;
    os << "digraph monotone {\n  rankdir=LR;\n";
    for (Rank r = 0; r < l.levels(); r++)
        os << "  n" << r << " [label=\"" << l.label(r) << "\\n" << l.level_value(r)
           << "\"];\n";
    for (size_t c = 0; c < l.alphabet().size(); c++)
        for (Rank t = 0; t < l.levels(); t++)
            for (Rank r = l.rho(c, t); r < l.levels(); r++)
                os << "  n" << r << " -> n" << t << " [label=\""
                   << l.alphabet()[c].str() << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace mg
