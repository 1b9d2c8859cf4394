#include <doctest.h>

#include <random>

#include "test_support.hpp"

#include "mg/oracle.hpp"
#include "mg/products.hpp"

using namespace mg;
using namespace mgtest;

namespace {

Color prio(long long p) { return Color::number(p); }

} // namespace

TEST_CASE("product of two one-level graphs")
{
    // two safety-like single-level factors over disjoint alphabets
    MonotoneGraph a = rename_colors(build(ValuationSpec::safety(), 1),
                                    {{safe(), prio(10)}, {bad(), prio(11)}});
    MonotoneGraph b = build(ValuationSpec::safety(), 1);
    MonotoneGraph p = lex_product_graphs(a, b);
    REQUIRE(p.levels() == 2); // one core pair plus top
    CHECK(p.has_edge(0, prio(10), 0));
    CHECK(p.has_edge(0, safe(), 0));
    CHECK_FALSE(p.has_edge(0, prio(11), 0));
    CHECK_FALSE(p.has_edge(0, bad(), 0));
}

TEST_CASE("pair order is lexicographic with the second factor dominant")
{
    MonotoneGraph a = build(ValuationSpec::prio_cobuchi(1), 2);
    MonotoneGraph b = build(ValuationSpec::prio_cobuchi(2), 2);
    MonotoneGraph p = lex_product_graphs(a, b);
    REQUIRE(p.levels() == 5); // 4 core pairs plus top
    CHECK(p.label(0) == "(0,0)");
    CHECK(p.label(1) == "(1,0)");
    CHECK(p.label(2) == "(0,1)");
    CHECK(p.label(3) == "(1,1)");
}

TEST_CASE("product edges follow the definition")
{
    MonotoneGraph a = build(ValuationSpec::prio_cobuchi(1), 3);
    MonotoneGraph b = build(ValuationSpec::prio_cobuchi(2), 2);
    MonotoneGraph p = lex_product_graphs(a, b);
    Rank c1 = a.core(), c2 = b.core();
    auto pr = [&](Rank l1, Rank l2) { return (Rank)(l2 * c1 + l1); };
    for (Rank l1 = 0; l1 < c1; l1++)
        for (Rank l2 = 0; l2 < c2; l2++)
            for (Rank m1 = 0; m1 < c1; m1++)
                for (Rank m2 = 0; m2 < c2; m2++) {
                    for (const Color& c : a.alphabet()) {
                        bool expect = l2 > m2 || (l2 == m2 && a.has_edge(l1, c, m1));
                        CHECK(p.has_edge(pr(l1, l2), c, pr(m1, m2)) == expect);
                    }
                    for (const Color& c : b.alphabet()) {
                        bool expect = b.has_edge(l2, c, m2);
                        CHECK(p.has_edge(pr(l1, l2), c, pr(m1, m2)) == expect);
                    }
                }
}

TEST_CASE("parity with one half-priority is co-Buchi renamed")
{
    MonotoneGraph p = parity_graph(1, 3);
    MonotoneGraph c = rename_colors(build(ValuationSpec::cobuchi(), 3),
                                    {{safe(), prio(2)}, {bad(), prio(3)}});
    REQUIRE(p.levels() == c.levels());
    CHECK(p.alphabet() == c.alphabet());
    for (size_t ci = 0; ci < p.alphabet().size(); ci++)
        for (Rank r = 0; r < p.levels(); r++) CHECK(p.rho(ci, r) == c.rho(ci, r));
}

TEST_CASE("parity assembly equals the signature-tuple order")
{
    for (auto [h, alpha] : {std::pair<int, unsigned>{2, 2}, {2, 4}, {3, 2}}) {
        MonotoneGraph p = parity_graph(h, alpha);
        MonotoneGraph t = tuple_parity_graph(h, alpha);
        REQUIRE(p.levels() == t.levels());
        REQUIRE(p.alphabet() == t.alphabet());
        for (size_t ci = 0; ci < p.alphabet().size(); ci++)
            for (Rank r = 0; r < p.levels(); r++) CHECK(p.rho(ci, r) == t.rho(ci, r));
    }
    CHECK(parity_graph(2, 4).levels() == 17); // 16 core levels plus top
}

TEST_CASE("product objective evaluation")
{
    ValuationSpec w = lex_product_objectives(ValuationSpec::buchi(),
                                             ValuationSpec::cobuchi());
    // a winning second-factor cycle decides regardless of first content
    CHECK(eval_lasso(w, Lasso({}, {wait(), safe()})) == Value::win());
    CHECK(eval_lasso(w, Lasso({good(), bad()}, {wait(), safe()})) == Value::win());
    CHECK(eval_lasso(w, Lasso({}, {good(), bad()})) == Value::lose());
    // an all-first-factor cycle delegates to the first objective
    CHECK(eval_lasso(w, Lasso({bad()}, {good()})) == Value::win());
    CHECK(eval_lasso(w, Lasso({bad()}, {wait()})) == Value::lose());
}

TEST_CASE("parity agrees with its co-Buchi factorization on random lassos")
{
    for (int h : {2, 3}) {
        ValuationSpec product = ValuationSpec::prio_cobuchi(1);
        for (int i = 2; i <= h; i++)
            product = lex_product_objectives(product, ValuationSpec::prio_cobuchi(i));
        ValuationSpec parity = ValuationSpec::parity(h);

        std::mt19937_64 rng(61 + h);
        auto palette = parity.alphabet();
        for (int i = 0; i < 1000; i++) {
            std::vector<Color> stem, cycle;
            for (size_t k = 0, n = rng() % 4; k < n; k++)
                stem.push_back(palette[rng() % palette.size()]);
            for (size_t k = 0, n = 1 + rng() % 4; k < n; k++)
                cycle.push_back(palette[rng() % palette.size()]);
            Lasso w(stem, cycle);
            CHECK(eval_lasso(product, w) == eval_lasso(parity, w));
        }
    }
}

TEST_CASE("products are associative under pair flattening")
{
    MonotoneGraph l1 = build(ValuationSpec::prio_cobuchi(1), 2);
    MonotoneGraph l2 = build(ValuationSpec::prio_cobuchi(2), 3);
    MonotoneGraph l3 = build(ValuationSpec::prio_cobuchi(3), 2);
    MonotoneGraph left = lex_product_graphs(lex_product_graphs(l1, l2), l3);
    MonotoneGraph right = lex_product_graphs(l1, lex_product_graphs(l2, l3));
    REQUIRE(left.levels() == right.levels());
    REQUIRE(left.alphabet() == right.alphabet());
    // the flattening bijection is the identity on rank indices
    for (size_t ci = 0; ci < left.alphabet().size(); ci++)
        for (Rank r = 0; r < left.levels(); r++)
            CHECK(left.rho(ci, r) == right.rho(ci, r));
}

TEST_CASE("axioms survive products")
{
    MonotoneGraph b = rename_colors(build(ValuationSpec::buchi(), 3),
                                    {{wait(), prio(8)}, {good(), prio(9)}});
    MonotoneGraph c = build(ValuationSpec::cobuchi(), 2);
    MonotoneGraph p = lex_product_graphs(b, c);
    CHECK(check_rho_monotone(p));
    CHECK(check_axioms(edges_from_table(p)));
    MonotoneGraph q = lex_product_graphs(c, b);
    CHECK(check_axioms(edges_from_table(q)));
}

TEST_CASE("product universality at desk scale, sampled")
{
    // Buchi x co-Buchi over the 4-color union alphabet: graphs
    // satisfying the product objective embed into the product core
    ValuationSpec w = lex_product_objectives(ValuationSpec::buchi(),
                                             ValuationSpec::cobuchi());
    MonotoneGraph l = lex_product_graphs(build(ValuationSpec::buchi(), 3),
                                         build(ValuationSpec::cobuchi(), 3));
    OracleBudget budget;
    budget.max_vertices = 3;
    budget.sample_count = 400;
    budget.seed = 67;
    UniversalityReport report =
        universality_check(l, w, budget, UniversalityMode::prefix_increasing);
    CHECK(report.pass);
    CHECK_FALSE(report.exhaustive);
    CHECK(report.graphs_checked > 0);
}

TEST_CASE("pointwise minimum of two morphisms is a morphism")
{
    std::mt19937_64 rng(71);
    MonotoneGraph l = build(ValuationSpec::buchi(), 4);
    ValuationSpec spec = ValuationSpec::buchi();
    for (int i = 0; i < 60; i++) {
        ColoredGraph g = random_graph(1 + rng() % 4, spec.alphabet(), 3, rng);
        VertexMap phi = random_prefixpoint(g, l, spec, rng);
        VertexMap psi = random_prefixpoint(g, l, spec, rng);
        CHECK(maps_into_table(g, l, phi));
        CHECK(maps_into_table(g, l, psi));
        VertexMap min(g.size());
        for (Vertex v = 0; v < g.size(); v++) min[v] = std::min(phi[v], psi[v]);
        CHECK(maps_into_table(g, l, min));
    }
}

TEST_CASE("solving parity games through the product graph matches the oracle")
{
    std::mt19937_64 rng(73);
    RandomArenaParams params;
    for (int i = 0; i < 60; i++) {
        Arena a = random_arena(ValuationSpec::parity(2), params, rng);
        CHECK(solve(a).values == brute_force_solve(a).values);
    }
}

TEST_CASE("solving games under an explicit product valuation")
{
    ValuationSpec w = lex_product_objectives(ValuationSpec::buchi(),
                                             ValuationSpec::cobuchi());
    std::mt19937_64 rng(79);
    RandomArenaParams params;
    params.max_vertices = 4;
    for (int i = 0; i < 40; i++) {
        Arena a = random_arena(w, params, rng);
        CHECK(solve(a).values == brute_force_solve(a).values);
    }
}

TEST_CASE("bad products are rejected")
{
    CHECK_THROWS_AS(lex_product_objectives(ValuationSpec::buchi(),
                                           ValuationSpec::buchi()),
                    std::runtime_error); // alphabet collision
    CHECK_THROWS_AS(lex_product_objectives(ValuationSpec::safety(),
                                           ValuationSpec::buchi()),
                    std::runtime_error); // not prefix-invariant
    CHECK_THROWS_AS(lex_product_objectives(ValuationSpec::buchi(),
                                           ValuationSpec::energy(2)),
                    std::runtime_error); // not an objective
    CHECK_THROWS_AS(lex_product_objectives(ValuationSpec::buchi(),
                                           ValuationSpec::cobuchi().with_eps()),
                    std::runtime_error); // eps must sit in the first factor
    CHECK_NOTHROW(lex_product_objectives(ValuationSpec::buchi().with_eps(),
                                         ValuationSpec::cobuchi()));
    CHECK_THROWS_AS(lex_product_graphs(build(ValuationSpec::buchi(), 2),
                                       build(ValuationSpec::buchi(), 2)),
                    std::invalid_argument);
}

TEST_CASE("eps in the first factor stays neutral through the product")
{
    ValuationSpec w = lex_product_objectives(ValuationSpec::buchi().with_eps(),
                                             ValuationSpec::cobuchi());
    MonotoneGraph l = lex_product_graphs(build(ValuationSpec::buchi().with_eps(), 2),
                                         build(ValuationSpec::cobuchi(), 2));
    // the product's eps table is the identity, matching the product order
    for (Rank r = 0; r < l.levels(); r++) CHECK(l.rho(Color::eps(), r) == r);
    CHECK(check_axioms(edges_from_table(l)));

    std::mt19937_64 rng(131);
    auto palette = w.alphabet();
    for (int i = 0; i < 200; i++) {
        std::vector<Color> stem, cycle;
        for (size_t k = 0, n = rng() % 3; k < n; k++)
            stem.push_back(palette[rng() % palette.size()]);
        for (size_t k = 0, n = 1 + rng() % 3; k < n; k++)
            cycle.push_back(palette[rng() % palette.size()]);
        Lasso base(stem, cycle);
        Value v = eval_lasso(w, base);
        Lasso padded = base;
        padded.cycle.insert(padded.cycle.begin() + rng() % padded.cycle.size(),
                            Color::eps());
        CHECK(eval_lasso(w, padded) == v);
    }
}
