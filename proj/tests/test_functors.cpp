#include "doctest.h"
#include "gph/functors.hpp"
#include "gph/graph.hpp"
#include "support.hpp"

using namespace gph;

TEST_CASE("arc graph of the small standard graphs") {
    // Arcs of P(n) chain, so the arc graph is a path one shorter.
    for (unsigned n = 1; n <= 6; ++n) {
        auto iso = graph_iso(arc_graph(path_graph(n)), path_graph(n - 1));
        CHECK(iso.has_value());
    }
    // Cycles are fixed points.
    for (unsigned n = 1; n <= 6; ++n) {
        auto iso = graph_iso(arc_graph(cycle_graph(n)), cycle_graph(n));
        CHECK(iso.has_value());
    }
    // A bouquet of k loops turns into the complete graph on k nodes.
    for (unsigned k = 0; k <= 3; ++k) {
        auto iso = graph_iso(arc_graph(bouquet(k)), complete_graph(k));
        CHECK(iso.has_value());
    }
}

TEST_CASE("arc graph ids are the path ids") {
    Graph c3 = cycle_graph(3);
    Graph a1 = arc_graph(c3);
    CHECK(a1.node_count() == 3);
    CHECK(a1.has_node("(0,1)"));
    CHECK(a1.has_arc("(0,1)|(1,2)"));
    CHECK(a1.source("(0,1)|(1,2)") == "(0,1)");
    CHECK(a1.target("(0,1)|(1,2)") == "(1,2)");
    Graph a2 = arc_graph(a1);
    CHECK(a2.has_node("(0,1)|(1,2)"));
    CHECK(a2.has_arc("(0,1)|(1,2)|(2,0)"));
    CHECK(validate(a2).empty());
}

TEST_CASE("iterating one step at a time equals iterating at once") {
    std::mt19937 rng(20240815);
    for (int i = 0; i < 20; ++i) {
        Graph g = test_support::random_graph(rng, {}, "g" + std::to_string(i));
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned m = 0; m <= 2; ++m) {
                Graph lhs = arc_graph_n(arc_graph_n(g, m), n);
                Graph rhs = arc_graph_n(g, n + m);
                CHECK(lhs == rhs);
            }
    }
    CHECK(arc_graph_n(cycle_graph(3), 0) == cycle_graph(3));
}

TEST_CASE("arc graphs never have parallel arcs") {
    std::mt19937 rng(20240816);
    test_support::RandomGraphOptions opt;
    opt.out_cap = 0;  // allow heavy multigraphs
    opt.max_arcs = 12;
    for (int i = 0; i < 50; ++i) {
        Graph g = test_support::random_graph(rng, opt, "m" + std::to_string(i));
        CHECK(is_separated(arc_graph(g)));
    }
}

TEST_CASE("source truncations are morphisms and compose as expected") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 10; ++i) {
        Graph g = test_support::random_graph(rng, {}, "g" + std::to_string(i));
        GraphMorphism s10 = source_truncation(g, 1, 0);
        CHECK(validate_morphism(s10).empty());
        CHECK(s10.domain() == arc_graph(g));
        CHECK(s10.codomain() == g);
        // A node of the arc graph is an arc of g and truncates to its source.
        for (const auto& a : g.arcs()) CHECK(s10.node_image(a.id) == a.src);

        // s(0, n) is the identity.
        CHECK(morphisms_equal(source_truncation(g, 0, 0), identity_morphism(g)));

        // s(m+k, n) = s(m, n) after s(k, n+m): drop k steps, then m more.
        GraphMorphism lhs = source_truncation(g, 2, 0);
        GraphMorphism rhs = compose(source_truncation(g, 1, 0), source_truncation(g, 1, 1));
        CHECK(morphisms_equal(lhs, rhs));

        GraphMorphism lhs2 = source_truncation(g, 2, 1);
        GraphMorphism rhs2 = compose(source_truncation(g, 1, 1), source_truncation(g, 1, 2));
        CHECK(morphisms_equal(lhs2, rhs2));
    }
}

TEST_CASE("the arc graph acts on morphisms functorially") {
    Graph c4 = cycle_graph(4);
    Graph c2 = cycle_graph(2);
    std::unordered_map<std::string, std::string> nm, am;
    for (int i = 0; i < 4; ++i) nm[std::to_string(i)] = std::to_string(i % 2);
    am["(0,1)"] = "(0,1)";
    am["(1,2)"] = "(1,0)";
    am["(2,3)"] = "(0,1)";
    am["(3,0)"] = "(1,0)";
    GraphMorphism mod2("mod2", c4, c2, nm, am);
    REQUIRE(validate_morphism(mod2).empty());

    GraphMorphism a1 = arc_graph_of_morphism(mod2, 1);
    CHECK(validate_morphism(a1).empty());
    CHECK(a1.domain() == arc_graph(c4));
    CHECK(a1.codomain() == arc_graph(c2));
    CHECK(a1.node_image("(1,2)") == "(1,0)");

    // Identity goes to identity, composition to composition.
    GraphMorphism aid = arc_graph_of_morphism(identity_morphism(c4), 2);
    CHECK(morphisms_equal(aid, identity_morphism(arc_graph_n(c4, 2))));

    GraphMorphism rot("rot", c2, c2,
                      {{"0", "1"}, {"1", "0"}},
                      {{"(0,1)", "(1,0)"}, {"(1,0)", "(0,1)"}});
    REQUIRE(validate_morphism(rot).empty());
    GraphMorphism lhs = arc_graph_of_morphism(compose(rot, mod2), 1);
    GraphMorphism rhs = compose(arc_graph_of_morphism(rot, 1), arc_graph_of_morphism(mod2, 1));
    CHECK(morphisms_equal(lhs, rhs));

    // Truncation is natural: s(1,0) . A(f) = f . s(1,0).
    GraphMorphism nat_lhs = compose(source_truncation(c2, 1, 0), a1);
    GraphMorphism nat_rhs = compose(mod2, source_truncation(c4, 1, 0));
    CHECK(morphisms_equal(nat_lhs, nat_rhs));
}

TEST_CASE("dynamic graphs and finite self-maps are two views of one thing") {
    FiniteNSet s;
    s.name = "S";
    s.elements = {"p", "q", "r"};
    s.tau = {{"p", "q"}, {"q", "p"}, {"r", "r"}};
    CHECK(validate_nset(s).empty());

    Graph d = dynamic_from_nset(s);
    CHECK(validate(d).empty());
    CHECK(is_dynamic(d));
    CHECK(d.node_count() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.target("p") == "q");

    FiniteNSet back = nset_from_dynamic(d);
    CHECK(back.elements == s.elements);
    CHECK(back.tau == s.tau);

    CHECK(is_dynamic(cycle_graph(5)));
    CHECK_FALSE(is_dynamic(path_graph(2)));   // last node has no out-arc
    CHECK_FALSE(is_dynamic(bouquet(2)));      // two out-arcs
    CHECK(is_dynamic(initial_graph()));       // vacuously

    // Round trip from the dynamic-graph side is an isomorphism (arc ids may
    // differ, the shape may not).
    Graph c5 = cycle_graph(5);
    Graph reborn = dynamic_from_nset(nset_from_dynamic(c5));
    CHECK(graph_iso(reborn, c5).has_value());

    FiniteNSet broken;
    broken.elements = {"a"};
    broken.tau = {{"a", "zz"}};
    CHECK_FALSE(validate_nset(broken).empty());
    CHECK_THROWS_AS(dynamic_from_nset(broken), std::invalid_argument);
}

TEST_CASE("the shift endomorphism advances along the unique out-arcs") {
    Graph c3 = cycle_graph(3);
    GraphMorphism sig = sigma_endomorphism(c3);
    CHECK(validate_morphism(sig).empty());
    CHECK(sig.node_image("0") == "1");
    // Defining property: the source of sigma(a) is the target of a.
    for (const auto& a : c3.arcs()) CHECK(c3.source(sig.arc_image(a.id)) == a.tgt);

    FiniteNSet s;
    s.elements = {"p", "q"};
    s.tau = {{"p", "q"}, {"q", "q"}};
    Graph d = dynamic_from_nset(s);
    GraphMorphism sd = sigma_endomorphism(d);
    CHECK(validate_morphism(sd).empty());
    for (const auto& a : d.arcs()) CHECK(d.source(sd.arc_image(a.id)) == a.tgt);

    CHECK_THROWS_AS(sigma_endomorphism(path_graph(2)), std::invalid_argument);
}
