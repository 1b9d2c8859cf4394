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

#include "mg/arena.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mg {

Arena::Arena(ColoredGraph graph, std::vector<bool> eve, ValuationSpec valuation)
    : graph_(std::move(graph)), eve_(std::move(eve)), valuation_(std::move(valuation))
{
    if (eve_.size() != graph_.size())
        throw std::invalid_argument("Arena: ownership vector size mismatch");
    for (const Edge& e : graph_.edges())
        if (!valuation_.admits(e.color))
            throw std::invalid_argument("Arena: color " + e.color.str() +
                                        " not admitted by " + valuation_.str());
}

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& msg)
{
    throw std::runtime_error("parse_arena: line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

} // namespace

Color parse_color(const std::string& token, const ValuationSpec& spec)
{
    std::optional<Color> c;
    if (token == "safe") c = Color::symbol(Sym::safe);
    else if (token == "bad") c = Color::symbol(Sym::bad);
    else if (token == "good") c = Color::symbol(Sym::good);
    else if (token == "wait") c = Color::symbol(Sym::wait);
    else if (token == "imm") c = Color::symbol(Sym::imm);
    else if (token == "eps") c = Color::eps();
    else if (token.rfind("f:", 0) == 0) {
        size_t comma = token.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("bad map color '" + token + "'");
        long long a, b;
        try {
            a = std::stoll(token.substr(2, comma - 2));
            b = std::stoll(token.substr(comma + 1));
        } catch (const std::exception&) {
            throw std::runtime_error("bad map color '" + token + "'");
        }
        if (a < 0 || b < 0)
            throw std::runtime_error("map color needs a,b >= 0 in '" + token + "'");
        if (!spec.counter_based())
            throw std::runtime_error("map color '" + token + "' outside a counter game");
        c = Color::map(a, b, spec.map_cap());
    } else {
        try {
            size_t used = 0;
            long long n = std::stoll(token, &used);
            if (used == token.size()) c = Color::number(n);
        } catch (const std::exception&) {
        }
    }
    if (!c) throw std::runtime_error("unknown color '" + token + "'");
    if (!spec.admits(*c))
        throw std::runtime_error("color '" + token + "' not admitted by valuation " +
                                 spec.str());
    return *c;
}

Arena parse_arena(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;

    std::optional<ValuationSpec> spec;
    bool pregraph = false;
    std::vector<std::string> names;
    std::vector<bool> eve;
    std::map<std::string, Vertex> index;
    std::vector<std::tuple<size_t, std::string, std::string, std::string>> raw_edges;

    while (std::getline(is, line)) {
        lineno++;
        auto ts = tokens(line);
        if (ts.empty()) continue;
        const std::string& head = ts[0];
        if (head == "val") {
            if (ts.size() != 2) parse_fail(lineno, "expected: val <spec>");
            if (spec) parse_fail(lineno, "duplicate val line");
            try {
                spec = ValuationSpec::parse(ts[1]);
            } catch (const std::exception& e) {
                parse_fail(lineno, e.what());
            }
        } else if (head == "pregraph") {
            pregraph = true;
        } else if (head == "v") {
            if (ts.size() != 3 || (ts[2] != "Eve" && ts[2] != "Adam"))
                parse_fail(lineno, "expected: v <id> <Eve|Adam>");
            if (index.count(ts[1])) parse_fail(lineno, "duplicate vertex id " + ts[1]);
            index[ts[1]] = (Vertex)names.size();
            names.push_back(ts[1]);
            eve.push_back(ts[2] == "Eve");
        } else if (head == "edge") {
            if (ts.size() != 4) parse_fail(lineno, "expected: edge <src> <color> <dst>");
            raw_edges.emplace_back(lineno, ts[1], ts[2], ts[3]);
        } else {
            parse_fail(lineno, "unknown directive '" + head + "'");
        }
    }

    if (!spec) throw std::runtime_error("parse_arena: missing val line");

    std::vector<Edge> edges;
    for (const auto& [ln, src, col, dst] : raw_edges) {
        auto si = index.find(src);
        if (si == index.end()) parse_fail(ln, "undeclared vertex " + src);
        auto di = index.find(dst);
        if (di == index.end()) parse_fail(ln, "undeclared vertex " + dst);
        try {
            edges.push_back({si->second, parse_color(col, *spec), di->second});
        } catch (const std::exception& e) {
            parse_fail(ln, e.what());
        }
    }

    ColoredGraph g(names.size(), std::move(edges), pregraph, names);
    auto violations = validate_graph(g);
    if (!violations.empty())
        throw std::runtime_error("parse_arena: " + violations.front());
    return Arena(std::move(g), std::move(eve), std::move(*spec));
}

std::string serialize_arena(const Arena& a)
{
    std::ostringstream os;
    os << "val " << a.valuation().str() << "\n";
    if (a.graph().is_pregraph()) os << "pregraph\n";
    for (Vertex v = 0; v < a.size(); v++) {
        std::string id = a.graph().name(v).empty() ? "v" + std::to_string(v)
                                                   : a.graph().name(v);
        os << "v " << id << " " << (a.eve_owns(v) ? "Eve" : "Adam") << "\n";
    }
    auto id_of = [&](Vertex v) {
        return a.graph().name(v).empty() ? "v" + std::to_string(v) : a.graph().name(v);
    };
    for (const Edge& e : a.graph().edges())
        os << "edge " << id_of(e.src) << " " << e.color.str() << " " << id_of(e.dst)
           << "\n";
    return os.str();
}

} // namespace mg
