#include <doctest.h>

#include <random>

#include "test_support.hpp"

#include "mg/oracle.hpp"
#include "mg/solver.hpp"

using namespace mg;
using namespace mgtest;

namespace {

Color prio(long long p) { return Color::number(p); }

} // namespace

TEST_CASE("graph values of small graphs")
{
    SUBCASE("safe loop wins")
    {
        auto vals = graph_value(graph(1, {{0, safe(), 0}}), ValuationSpec::safety());
        CHECK(vals[0] == Value::win());
    }
    SUBCASE("energy two-cycle")
    {
        // a -(-2)-> b -(+1)-> a: negative cycle, best prefix is empty
        ColoredGraph g(2, {{0, Color::number(-2), 1}, {1, Color::number(1), 0}});
        auto vals = graph_value(g, ValuationSpec::energy(0));
        CHECK(vals[0] == Value::number(0));
        CHECK(vals[1] == Value::number(1));
    }
    SUBCASE("reachable odd cycle loses parity")
    {
        ColoredGraph g(2, {{0, prio(2), 1}, {1, prio(3), 1}});
        auto vals = graph_value(g, ValuationSpec::parity(1));
        CHECK(vals[0] == Value::lose());
        CHECK(vals[1] == Value::lose());
    }
    SUBCASE("pregraph sinks have the bottom value")
    {
        ColoredGraph g(2, {{0, bad(), 1}}, true);
        auto vals = graph_value(g, ValuationSpec::safety());
        // only finite plays pass the bad edge; no infinite play sees it
        CHECK(vals[0] == Value::win());
        CHECK(vals[1] == Value::win());
    }
}

TEST_CASE("counter graph values")
{
    SUBCASE("backward counter saturation needs long cycles")
    {
        // two self-loops: doubling and the constant 5; the composition
        // 2^k * 5 climbs to the cap even though both simple cycles stay low
        long long cap = 100;
        Color dbl = Color::map(2, 0, cap);
        Color c5 = Color::map(0, 5, cap);
        ColoredGraph g(1, {{0, dbl, 0}, {0, c5, 0}});
        auto vals = graph_value(g, ValuationSpec::backward_sup(cap));
        CHECK(vals[0] == Value::number(cap));
    }
    SUBCASE("bounded counter with a reset stays winning")
    {
        ValuationSpec spec = ValuationSpec::bounded(2);
        Color inc = Color::map(1, 1, spec.map_cap());
        Color reset = Color::map(0, 0, spec.map_cap());
        ColoredGraph win_g(2, {{0, inc, 1}, {1, reset, 0}});
        CHECK(graph_value(win_g, spec)[0] == Value::win());
        ColoredGraph lose_g(1, {{0, inc, 0}});
        CHECK(graph_value(lose_g, spec)[0] == Value::lose());
    }
    SUBCASE("backward counter matches the lasso evaluator on a line")
    {
        ValuationSpec spec = ValuationSpec::backward_sup(9);
        Color plus2 = Color::map(1, 2, spec.map_cap());
        Color id = Color::map(1, 0, spec.map_cap());
        ColoredGraph g(2, {{0, plus2, 1}, {1, id, 1}});
        auto vals = graph_value(g, spec);
        CHECK(vals[0] == eval_lasso(spec, Lasso({plus2}, {id})));
        CHECK(vals[1] == Value::number(0));
    }
}

TEST_CASE("brute force on the safe/bad choice")
{
    Arena a = arena(1, {{0, safe(), 0}, {0, bad(), 0}}, {true},
                    ValuationSpec::safety());
    BruteForceResult r = brute_force_solve(a);
    CHECK(r.values[0] == Value::win());
    REQUIRE(r.has_uniform_witness);
    CHECK(a.graph().edges()[r.witness[0]].color == safe());
}

TEST_CASE("uniform witnesses exist for every small parity arena")
{
    // all arenas on <= 3 vertices with out-degree <= 2 over {2,3}
    std::vector<Color> colors = {prio(2), prio(3)};
    for (unsigned n = 1; n <= 3; n++) {
        std::vector<std::vector<Edge>> vertex_choices;
        std::vector<Edge> all;
        for (Vertex v = 0; v < n; v++)
            for (const Color& c : colors)
                for (Vertex w = 0; w < n; w++) all.push_back({v, c, w});

        // per-vertex nonempty out-sets of size <= 2
        std::vector<std::vector<std::vector<Edge>>> per_vertex(n);
        for (Vertex v = 0; v < n; v++) {
            std::vector<Edge> mine;
            for (const Edge& e : all)
                if (e.src == v) mine.push_back(e);
            for (size_t i = 0; i < mine.size(); i++) {
                per_vertex[v].push_back({mine[i]});
                for (size_t j = i + 1; j < mine.size(); j++)
                    per_vertex[v].push_back({mine[i], mine[j]});
            }
        }

        std::vector<size_t> pick(n, 0);
        while (true) {
            std::vector<Edge> edges;
            for (Vertex v = 0; v < n; v++)
                for (const Edge& e : per_vertex[v][pick[v]]) edges.push_back(e);
            for (uint64_t owners = 0; owners < (1ull << n); owners++) {
                std::vector<bool> eve(n);
                for (Vertex v = 0; v < n; v++) eve[v] = owners >> v & 1;
                Arena a = arena(n, edges, eve, ValuationSpec::parity(1));
                CHECK(brute_force_solve(a).has_uniform_witness);
            }
            size_t i = 0;
            while (i < n && ++pick[i] == per_vertex[i].size()) pick[i++] = 0;
            if (i == n) break;
        }
    }
}

TEST_CASE("negative control: intersection of two Buchi objectives")
{
    // win iff both colors recur; positional play on the two-loop vertex
    // cannot achieve what alternation achieves
    Color g1 = prio(2), g2 = prio(3);
    LassoEval both = [&](const Lasso& w) {
        bool has1 = std::find(w.cycle.begin(), w.cycle.end(), g1) != w.cycle.end();
        bool has2 = std::find(w.cycle.begin(), w.cycle.end(), g2) != w.cycle.end();
        return has1 && has2 ? Value::win() : Value::lose();
    };
    Arena a = arena(1, {{0, g1, 0}, {0, g2, 0}}, {true}, ValuationSpec::parity(1));
    BruteForceResult r = brute_force_solve_custom(a, both);
    CHECK(r.values[0] == Value::lose());
    // yet the alternating play wins, so no positional strategy is optimal
    CHECK(both(Lasso({}, {g1, g2})) == Value::win());
}

TEST_CASE("negative control: an objective without a uniform witness")
{
    // win iff the first two colors agree; the middle vertex must choose
    // differently depending on where the play started
    Color x = prio(2), y = prio(3);
    LassoEval first_two_equal = [&](const Lasso& w) {
        std::vector<Color> word = w.stem;
        word.insert(word.end(), w.cycle.begin(), w.cycle.end());
        word.insert(word.end(), w.cycle.begin(), w.cycle.end());
        return word[0] == word[1] ? Value::win() : Value::lose();
    };
    // a -x-> m, b -y-> m, Eve's m picks x or y into a terminal loop
    Arena a = arena(4,
                    {{0, x, 2}, {1, y, 2}, {2, x, 3}, {2, y, 3}, {3, x, 3}},
                    {false, false, true, false}, ValuationSpec::parity(1));
    BruteForceResult r = brute_force_solve_custom(a, first_two_equal);
    CHECK(r.values[0] == Value::win());
    CHECK(r.values[1] == Value::win());
    CHECK_FALSE(r.has_uniform_witness);
}

TEST_CASE("least morphisms into builder graphs")
{
    SUBCASE("the table graph embeds into itself identically")
    {
        for (const char* s : {"safety", "buchi"}) {
            ValuationSpec spec = ValuationSpec::parse(s);
            MonotoneGraph l = build(spec, 2);
            ColoredGraph g = edges_from_table(l);
            MorphismReport r = find_min_morphism(g, l, spec);
            CHECK(r.val_preserving);
            for (Rank v = 0; v < l.levels(); v++) CHECK(r.map[v] == v);
        }
    }
    SUBCASE("safe-only graphs collapse to the bottom rank")
    {
        MonotoneGraph l = build(ValuationSpec::safety(), 1);
        ColoredGraph g(3, {{0, safe(), 1}, {1, safe(), 2}, {2, safe(), 0}});
        MorphismReport r = find_min_morphism(g, l, ValuationSpec::safety());
        CHECK(r.val_preserving);
        CHECK(r.map == VertexMap{0, 0, 0});
    }
    SUBCASE("pregraphs embed through their live part")
    {
        // a sink imposes no constraint; the rest embeds as usual
        MonotoneGraph l = build(ValuationSpec::cobuchi(), 3);
        ColoredGraph g(3, {{0, bad(), 1}, {1, safe(), 1}}, true); // 2 is a sink
        MorphismReport r = find_min_morphism(g, l, ValuationSpec::cobuchi());
        CHECK(r.val_preserving);
        CHECK(r.map[2] == 0);
        CHECK(r.map[0] > r.map[1]);
        CHECK(maps_into_table(g, l, r.map));
    }
    SUBCASE("a three-step bad chain overflows co-Buchi at alpha 2")
    {
        MonotoneGraph l = build(ValuationSpec::cobuchi(), 2);
        ColoredGraph g(3, {{0, bad(), 1}, {1, bad(), 2}, {2, safe(), 2}});
        MorphismReport r = find_min_morphism(g, l, ValuationSpec::cobuchi());
        CHECK_FALSE(r.val_preserving);
        CHECK(r.map[0] == l.top());
        MonotoneGraph l3 = build(ValuationSpec::cobuchi(), 3);
        CHECK(find_min_morphism(g, l3, ValuationSpec::cobuchi()).val_preserving);
    }
}

TEST_CASE("no upward edges under prefix-increasing valuations")
{
    std::mt19937_64 rng(83);
    std::vector<ValuationSpec> specs = {ValuationSpec::safety(), ValuationSpec::buchi(),
                                        ValuationSpec::cobuchi(),
                                        ValuationSpec::parity(2),
                                        ValuationSpec::bounded(2)};
    for (const ValuationSpec& spec : specs) {
        CHECK(spec.prefix_increasing());
        std::vector<Color> colors = spec.alphabet();
        if (spec.counter_based())
            colors = {Color::map(1, 1, spec.map_cap()), Color::map(0, 0, spec.map_cap())};
        for (int i = 0; i < 80; i++) {
            ColoredGraph g = random_graph(1 + rng() % 4, colors, 3, rng);
            auto vals = graph_value(g, spec);
            for (const Edge& e : g.edges())
                CHECK_FALSE(vals[e.src] < vals[e.dst]);
        }
    }
    CHECK_FALSE(ValuationSpec::reachability().prefix_increasing());
    CHECK_FALSE(ValuationSpec::imm_variant().prefix_increasing());
    CHECK_FALSE(ValuationSpec::energy(0).prefix_increasing());
}

TEST_CASE("universality checks")
{
    SUBCASE("safety is universal for satisfying graphs")
    {
        MonotoneGraph l = build(ValuationSpec::safety(), 1);
        OracleBudget budget;
        UniversalityReport r = universality_check(l, ValuationSpec::safety(), budget,
                                                  UniversalityMode::prefix_increasing);
        CHECK(r.pass);
        CHECK(r.exhaustive);
    }
    SUBCASE("energy cap below the achievable value fails, a sized cap passes")
    {
        std::vector<Color> colors = {Color::number(-1), Color::number(2)};
        OracleBudget budget;
        budget.max_vertices = 2;
        MonotoneGraph small = build(ValuationSpec::energy(1), 1, colors);
        UniversalityReport bad_cap = universality_check(
            small, ValuationSpec::energy(1), budget, UniversalityMode::general, colors);
        CHECK_FALSE(bad_cap.pass);
        REQUIRE(bad_cap.counterexample);
        // the witness graph achieves a finite value above the cap
        auto vals = graph_value(*bad_cap.counterexample, ValuationSpec::energy(0));
        bool above = false;
        for (const Value& v : vals)
            if (!v.is_infinite() && v.finite() > 1) above = true;
        CHECK(above);

        MonotoneGraph sized = build(ValuationSpec::energy(4), 1, colors);
        UniversalityReport ok = universality_check(
            sized, ValuationSpec::energy(4), budget, UniversalityMode::general, colors);
        CHECK(ok.pass);
    }
}

TEST_CASE("solver and oracle agree on random arenas")
{
    std::mt19937_64 rng(89);
    RandomArenaParams params;
    for (const ValuationSpec& spec : builtin_specs()) {
        for (int i = 0; i < 50; i++) {
            Arena a = random_arena(spec, params, rng);
            SolveResult s = solve(a);
            BruteForceResult o = brute_force_solve(a);
            REQUIRE(s.values == o.values);

            // the extracted strategy's own value matches the report
            ColoredGraph sub = strategy_subgraph(a, s.strategy);
            CHECK(graph_value(sub, a.valuation()) == s.values);
        }
    }
}
