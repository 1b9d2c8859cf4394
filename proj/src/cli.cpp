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

#include "mg/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mg/arena.hpp"
#include "mg/monotone.hpp"
#include "mg/oracle.hpp"
#include "mg/products.hpp"
#include "mg/solver.hpp"
#include "mg/structuration.hpp"

namespace mg::cli {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string vertex_id(const Arena& a, Vertex v)
{
    const std::string& n = a.graph().name(v);
    return n.empty() ? "v" + std::to_string(v) : n;
}

void emit_solution(const Arena& a, const SolveResult& r, const std::string& format,
                   std::ostream& out)
{
    if (format == "json") {
        ordered_json doc;
        doc["vertices"] = ordered_json::array();
        for (Vertex v = 0; v < a.size(); v++) {
            ordered_json rec;
            rec["id"] = vertex_id(a, v);
            rec["rank"] = r.measure[v];
            rec["value"] = r.values[v].str();
            doc["vertices"].push_back(rec);
        }
        doc["strategy"] = ordered_json::array();
        for (Vertex v = 0; v < a.size(); v++)
            for (uint32_t idx : r.strategy.chosen[v]) {
                const Edge& e = a.graph().edges()[idx];
                ordered_json rec;
                rec["src"] = vertex_id(a, e.src);
                rec["color"] = e.color.str();
                rec["dst"] = vertex_id(a, e.dst);
                doc["strategy"].push_back(rec);
            }
        out << doc.dump(2) << "\n";
    } else if (format == "dot") {
        out << "digraph strategy {\n";
        for (Vertex v = 0; v < a.size(); v++)
            out << "  \"" << vertex_id(a, v) << "\" [shape="
                << (a.eve_owns(v) ? "ellipse" : "box") << ",label=\"" << vertex_id(a, v)
                << "\\n" << r.values[v] << "\"];\n";
        ColoredGraph sub = strategy_subgraph(a, r.strategy);
        for (const Edge& e : sub.edges())
            out << "  \"" << vertex_id(a, e.src) << "\" -> \"" << vertex_id(a, e.dst)
                << "\" [label=\"" << e.color.str() << "\"];\n";
        out << "}\n";
    } else {
        for (Vertex v = 0; v < a.size(); v++)
            out << "v " << vertex_id(a, v) << " rank " << r.measure[v] << " ("
                << r.graph.label(r.measure[v]) << ") value " << r.values[v] << "\n";
        for (Vertex v = 0; v < a.size(); v++)
            for (uint32_t idx : r.strategy.chosen[v]) {
                const Edge& e = a.graph().edges()[idx];
                out << "strategy " << vertex_id(a, e.src) << " " << e.color.str() << " "
                    << vertex_id(a, e.dst) << "\n";
            }
    }
}

std::string counterexample_file(const ColoredGraph& g, const ValuationSpec& spec)
{
    // all-Adam arena in the game-file format, ready to re-enter the pipeline
    std::ostringstream os;
    os << "val " << spec.str() << "\n";
    for (Vertex v = 0; v < g.size(); v++) os << "v v" << v << " Adam\n";
    for (const Edge& e : g.edges())
        os << "edge v" << e.src << " " << e.color.str() << " v" << e.dst << "\n";
    return os.str();
}

MonotoneGraph build_from_flags(const std::string& spec_text, unsigned levels)
{
    return build(ValuationSpec::parse(spec_text), levels);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"games on colored graphs via monotonic universal graphs"};
    app.require_subcommand(1);

    std::string input, spec_text, format = "text", mode = "b", out_path;
    unsigned levels = 4, max_vertices = 3, max_cycle = 0, samples = 200;
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json | dot")->envname("MG_FORMAT");
        cmd->add_option("--seed", seed, "rng seed")->envname("MG_SEED");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve a game file");
    solve_cmd->add_option("input", input)->required();
    add_common(solve_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force a game file");
    oracle_cmd->add_option("input", input)->required();
    oracle_cmd->add_option("--max-cycle", max_cycle)->envname("MG_MAX_CYCLE");
    add_common(oracle_cmd);

    auto* mono_cmd = app.add_subcommand("check-monotone",
                                        "check axioms of a dump or builder");
    mono_cmd->add_option("input", input, "monotone dump file");
    mono_cmd->add_option("--spec", spec_text)->envname("MG_SPEC");
    mono_cmd->add_option("--levels", levels)->envname("MG_LEVELS");
    add_common(mono_cmd);

    auto* univ_cmd = app.add_subcommand("check-universal",
                                        "search for universality counterexamples");
    univ_cmd->add_option("--spec", spec_text)->required()->envname("MG_SPEC");
    univ_cmd->add_option("--levels", levels)->envname("MG_LEVELS");
    univ_cmd->add_option("--max-vertices", max_vertices)->envname("MG_MAX_VERTICES");
    univ_cmd->add_option("--max-cycle", max_cycle)->envname("MG_MAX_CYCLE");
    univ_cmd->add_option("--samples", samples)->envname("MG_SAMPLES");
    univ_cmd->add_option("--mode", mode, "a (general) | b (prefix-increasing)")
        ->envname("MG_MODE");
    univ_cmd->add_option("--out", out_path, "write counterexample game file")
        ->envname("MG_OUT");
    add_common(univ_cmd);

    auto* prod_cmd = app.add_subcommand("product", "build and dump a monotonic graph");
    prod_cmd->add_option("--spec", spec_text)->required()->envname("MG_SPEC");
    prod_cmd->add_option("--levels", levels)->envname("MG_LEVELS");
    add_common(prod_cmd);

    auto* struct_cmd = app.add_subcommand("structurate",
                                          "monotonic graph from a game file");
    struct_cmd->add_option("input", input)->required();
    add_common(struct_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            Arena a = parse_arena(slurp(input));
            emit_solution(a, solve(a), format, out);
            return 0;
        }

        if (oracle_cmd->parsed()) {
            Arena a = parse_arena(slurp(input));
            OracleBudget budget;
            budget.max_cycle_len = max_cycle;
            budget.seed = seed;
            BruteForceResult r = brute_force_solve(a, budget);
            if (format == "json") {
                ordered_json doc;
                doc["vertices"] = ordered_json::array();
                for (Vertex v = 0; v < a.size(); v++) {
                    ordered_json rec;
                    rec["id"] = vertex_id(a, v);
                    rec["value"] = r.values[v].str();
                    doc["vertices"].push_back(rec);
                }
                doc["uniform_witness"] = r.has_uniform_witness;
                out << doc.dump(2) << "\n";
            } else {
                for (Vertex v = 0; v < a.size(); v++)
                    out << "v " << vertex_id(a, v) << " value " << r.values[v] << "\n";
                out << "uniform_witness " << (r.has_uniform_witness ? "yes" : "no")
                    << "\n";
            }
            return r.has_uniform_witness ? 0 : 1;
        }

        if (mono_cmd->parsed()) {
            MonotoneGraph l = input.empty() ? build_from_flags(spec_text, levels)
                                            : parse_dump(slurp(input));
            bool ok = check_rho_monotone(l) && check_axioms(edges_from_table(l));
            out << (ok ? "monotone: ok" : "monotone: axiom violation") << "\n";
            return ok ? 0 : 1;
        }

        if (univ_cmd->parsed()) {
            ValuationSpec spec = ValuationSpec::parse(spec_text);
            MonotoneGraph l = build(spec, levels);
            OracleBudget budget;
            budget.max_vertices = max_vertices;
            budget.max_cycle_len = max_cycle;
            budget.sample_count = samples;
            budget.seed = seed;
            UniversalityMode m = mode == "a" ? UniversalityMode::general
                                             : UniversalityMode::prefix_increasing;
            UniversalityReport report = universality_check(l, spec, budget, m);
            out << "checked " << report.graphs_checked << " graphs ("
                << (report.exhaustive ? "exhaustive" : "sampled") << ")\n";
            if (report.pass) {
                out << "universal: yes\n";
                return 0;
            }
            out << "universal: NO\n";
            std::string cex = counterexample_file(*report.counterexample, spec);
            if (!out_path.empty()) {
                std::ofstream of(out_path);
                of << cex;
                out << "counterexample written to " << out_path << "\n";
            } else {
                out << cex;
            }
            return 1;
        }

        if (prod_cmd->parsed()) {
            MonotoneGraph l = build_from_flags(spec_text, levels);
            out << (format == "dot" ? to_dot(l) : dump(l));
            return 0;
        }

        if (struct_cmd->parsed()) {
            Arena a = parse_arena(slurp(input));
            QuotientResult r = structurate(a.graph(), a.valuation());
            if (format == "dot") out << to_dot(r.graph);
            else out << dump(r.graph);
            for (Vertex v = 0; v < a.size(); v++)
                out << "map " << vertex_id(a, v) << " -> " << r.map[v] << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("parse") != std::string::npos ||
            what.find("cannot open") != std::string::npos ||
            what.find("valuation spec") != std::string::npos)
            return 2;
        return 1;
    }
    return 2;
}

} // namespace mg::cli
