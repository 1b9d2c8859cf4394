#include <doctest.h>

#include "test_support.hpp"

#include "mg/monotone.hpp"
#include "mg/oracle.hpp"

using namespace mg;
using namespace mgtest;

namespace {

std::vector<Color> weight_window(long long lo, long long hi)
{
    std::vector<Color> out;
    for (long long t = lo; t <= hi; t++) out.push_back(Color::number(t));
    return out;
}

} // namespace

TEST_CASE("safety builder edge relation")
{
    MonotoneGraph l = build(ValuationSpec::safety(), 1);
    REQUIRE(l.levels() == 2);
    ColoredGraph g = edges_from_table(l);
    // exactly the safe loop at 0 plus all edges out of top
    CHECK(g.has_edge(0, safe(), 0));
    CHECK_FALSE(g.has_edge(0, bad(), 0));
    CHECK_FALSE(g.has_edge(0, safe(), 1));
    for (const Color& c : {safe(), bad()})
        for (Rank t = 0; t < 2; t++) CHECK(g.has_edge(1, c, t));
    CHECK(g.edges().size() == 5);
    CHECK_FALSE(g.is_pregraph());
}

TEST_CASE("energy edge arithmetic")
{
    MonotoneGraph l = build(ValuationSpec::energy(8), 1, weight_window(-2, 2));
    // 3 >= max(0, 5 - 2)
    CHECK(l.has_edge(3, Color::number(-2), 5));
    CHECK_FALSE(l.has_edge(2, Color::number(-2), 5));
    ColoredGraph g = edges_from_table(l);
    CHECK(g.has_edge(3, Color::number(-2), 5));
}

TEST_CASE("energy overflow goes to top")
{
    MonotoneGraph l = build(ValuationSpec::energy(4), 1, weight_window(-2, 2));
    REQUIRE(l.levels() == 6); // {0..4} plus top
    CHECK(l.rho(Color::number(2), 3) == l.top()); // 3 + 2 > 4
    CHECK(l.rho(Color::number(2), 2) == 4);
}

TEST_CASE("reachability builder")
{
    MonotoneGraph l = build(ValuationSpec::reachability(), 3);
    // core [0,3]; the completion adds a redundant absorbing rank
    REQUIRE(l.levels() == 5);
    CHECK(l.rho(wait(), 2) == 3);
    CHECK(l.rho(wait(), 3) == 3);
    CHECK(l.rho(good(), 3) == 0);
    ColoredGraph g = edges_from_table(l);
    for (Rank r = 0; r <= 3; r++) CHECK(g.has_edge(r, good(), 0));
    CHECK(l.level_value(2) == Value::win());
    CHECK(l.level_value(3) == Value::lose());
}

TEST_CASE("buchi completion overflows the wait table")
{
    MonotoneGraph l = build(ValuationSpec::buchi(), 3);
    REQUIRE(l.levels() == 4); // core {0,1,2} plus top
    CHECK(l.rho(wait(), 0) == 1);
    CHECK(l.rho(wait(), 1) == 2);
    CHECK(l.rho(wait(), 2) == l.top());
    CHECK(l.rho(good(), 2) == 0);
}

TEST_CASE("bounded builder takes the largest tolerated start")
{
    // counters live in reverse order: rank r encodes counter N - r
    ValuationSpec spec = ValuationSpec::bounded(2);
    Color f = Color::map(1, 1, spec.map_cap()); // n+1
    MonotoneGraph l = build(spec, 1, {f});
    REQUIRE(l.levels() == 4);
    // brute force of max{ l in [0,N] | f(l) <= target } over targets
    for (long long target = 0; target <= 2; target++) {
        std::optional<long long> expect;
        for (long long x = 0; x <= 2; x++)
            if (x + 1 <= target) expect = x;
        Rank target_rank = (Rank)(2 - target);
        Rank got = l.rho(f, target_rank);
        if (expect) CHECK(got == (Rank)(2 - *expect));
        else CHECK(got == l.top());
    }
    CHECK(l.rho(f, 2) == l.top()); // target counter 0 is unreachable under n+1
    CHECK(l.rho(f, 0) == 1);       // target counter 2 tolerates start 1
    CHECK(l.label(0) == "counter=2");
    CHECK(l.label(l.top()) == "bot");
}

TEST_CASE("imm variant reconstruction")
{
    MonotoneGraph l = build(ValuationSpec::imm_variant(), 1);
    REQUIRE(l.levels() == 3);
    ColoredGraph g = edges_from_table(l);
    CHECK(g.has_edge(0, imm(), 0));
    CHECK(g.has_edge(0, imm(), 1));
    CHECK_FALSE(g.has_edge(0, safe(), 0));
    CHECK_FALSE(g.has_edge(0, bad(), 0));
    CHECK(g.has_edge(1, imm(), 0));
    CHECK(g.has_edge(1, safe(), 0));
    CHECK(g.has_edge(1, safe(), 1));
    CHECK_FALSE(g.has_edge(1, bad(), 0));
    for (const Color& c : {imm(), safe(), bad()})
        for (Rank t = 0; t < 3; t++) CHECK(g.has_edge(2, c, t));
    CHECK(check_axioms(g));
    CHECK(l.level_value(0) == Value::win());
    CHECK(l.level_value(1) == Value::lose());
}

TEST_CASE("check_axioms rejects a missing right-composition edge")
{
    // 0 -c-> 1 without 0 -c-> 0
    ColoredGraph g(2, {{0, safe(), 1}, {1, safe(), 0}, {1, safe(), 1}});
    CHECK_FALSE(check_axioms(g));
    // adding the downward edge repairs it
    ColoredGraph h(2, {{0, safe(), 0}, {0, safe(), 1}, {1, safe(), 0}, {1, safe(), 1}});
    CHECK(check_axioms(h));
    // left-composition failure: 0 has an edge that 1 lacks
    ColoredGraph k(2, {{0, safe(), 0}, {1, bad(), 0}});
    CHECK_FALSE(check_axioms(k));
}

TEST_CASE("completion fills missing predecessors")
{
    MonotoneCore core;
    core.levels = 1;
    core.alphabet = {safe(), bad()};
    core.rho = {{0}, {std::nullopt}};
    core.level_value = {Value::win()};
    core.label = {"0"};
    MonotoneGraph l = complete(core);
    CHECK(l.levels() == 2);
    CHECK(l.rho(bad(), 0) == l.top());
    CHECK(l.rho(safe(), 0) == 0);
    CHECK(l.rho(safe(), l.top()) == l.top());
    CHECK(l.level_value(l.top()) == Value::lose());
}

TEST_CASE("re-completion stacks a redundant top")
{
    MonotoneGraph l = build(ValuationSpec::safety(), 1);
    MonotoneGraph ll = complete(l);
    CHECK(ll.levels() == l.levels() + 1);
    CHECK(check_axioms(edges_from_table(ll)));
    CHECK(check_rho_monotone(ll));
}

TEST_CASE("level values read back through the lasso oracle")
{
    SUBCASE("energy levels carry their own value")
    {
        MonotoneGraph l = build(ValuationSpec::energy(6), 1, weight_window(-6, 6));
        OracleBudget tight;
        tight.max_stem_len = 2;
        tight.max_cycle_len = 2;
        auto vals = graph_value(edges_from_table(l), ValuationSpec::energy(6), tight);
        for (Rank r = 0; r < l.core(); r++) {
            CHECK(l.level_value(r) == Value::number(r));
            CHECK(vals[r] == Value::number(r));
        }
        CHECK(vals[l.top()] == Value::infinity());
    }
    SUBCASE("qualitative tops lose")
    {
        for (const char* s : {"safety", "reach", "buchi", "cobuchi", "parity:2"}) {
            MonotoneGraph l = build(ValuationSpec::parse(s), 3);
            CHECK(l.level_value(l.top()) == Value::lose());
        }
    }
    SUBCASE("cobuchi core ranks win")
    {
        MonotoneGraph l = build(ValuationSpec::cobuchi(), 3);
        auto vals = graph_value(edges_from_table(l), ValuationSpec::cobuchi());
        CHECK(vals[2] == Value::win());
        CHECK(l.level_value(2) == Value::win());
        for (Rank r = 0; r < l.levels(); r++) CHECK(vals[r] == l.level_value(r));
    }
}

TEST_CASE("builders pass the axioms at several sizes")
{
    for (const ValuationSpec& spec : builtin_specs()) {
        for (unsigned budget : {2u, 4u, 8u}) {
            ValuationSpec sized = spec;
            if (spec.kind() == ValuationSpec::Kind::energy)
                sized = ValuationSpec::energy(budget);
            MonotoneGraph l = build(sized, budget);
            CHECK(check_rho_monotone(l));
            CHECK(check_axioms(edges_from_table(l)));
            MonotoneGraph le = build(sized.with_eps(), budget);
            CHECK(check_rho_monotone(le));
            CHECK(check_axioms(edges_from_table(le)));
        }
    }
}

TEST_CASE("no upward edges across the value order")
{
    // safety, co-Buchi and bounded at full granularity
    for (const char* s : {"safety", "cobuchi", "bounded:3"}) {
        MonotoneGraph l = build(ValuationSpec::parse(s), 4);
        ColoredGraph g = edges_from_table(l);
        for (const Edge& e : g.edges())
            CHECK_FALSE(l.level_value(e.src) < l.level_value(e.dst));
    }
    // energy at the finite/infinite granularity: nothing enters top
    MonotoneGraph l = build(ValuationSpec::energy(5), 1, weight_window(-2, 2));
    ColoredGraph table = edges_from_table(l);
    for (const Edge& e : table.edges())
        if (e.dst == l.top()) CHECK(e.src == l.top());
}

TEST_CASE("energy soundness at small caps")
{
    long long cap = 6;
    MonotoneGraph l = build(ValuationSpec::energy(cap), 1, weight_window(-cap, cap));
    OracleBudget tight;
    tight.max_stem_len = 2;
    tight.max_cycle_len = 2;
    auto vals = graph_value(edges_from_table(l), ValuationSpec::energy(cap), tight);
    for (Rank r = 0; r <= cap; r++) CHECK(vals[r] == Value::number(r));
}

TEST_CASE("eps extension is the identity table")
{
    MonotoneGraph l = build(ValuationSpec::buchi().with_eps(), 3);
    for (Rank r = 0; r < l.levels(); r++) CHECK(l.rho(eps(), r) == r);
    CHECK_THROWS_AS(add_eps(l), std::invalid_argument);
}

TEST_CASE("dump round-trips")
{
    for (const char* s : {"safety", "reach", "buchi", "energy:3", "bounded:2"}) {
        MonotoneGraph l = build(ValuationSpec::parse(s), 3);
        MonotoneGraph back = parse_dump(dump(l));
        CHECK(dump(back) == dump(l));
        CHECK(back.levels() == l.levels());
        CHECK(check_axioms(edges_from_table(back)));
    }
}

TEST_CASE("dot export mentions every rank")
{
    MonotoneGraph l = build(ValuationSpec::cobuchi(), 2);
    std::string dot = to_dot(l);
    for (Rank r = 0; r < l.levels(); r++)
        CHECK(dot.find("n" + std::to_string(r)) != std::string::npos);
}

TEST_CASE("build rejects nonsense")
{
    CHECK_THROWS_AS(build(ValuationSpec::buchi(), 0), std::invalid_argument);
    CHECK_THROWS_AS(build(ValuationSpec::energy(0), 4), std::invalid_argument);
    CHECK_THROWS_AS(build(ValuationSpec::energy(3), 4, {Color::map(1, 1, 3)}),
                    std::invalid_argument);
}
