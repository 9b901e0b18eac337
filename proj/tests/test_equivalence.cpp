#include <stdexcept>

#include "doctest.h"
#include "gph/equivalence.hpp"
#include "gph/fibration.hpp"
#include "gph/functors.hpp"
#include "gph/graph.hpp"
#include "gph/zeta.hpp"
#include "support.hpp"

using namespace gph;

namespace {

Graph mirror_pair() {
    return Graph("X",
                 {"x0", "x1"},
                 {{"b1", "x0", "x1"}, {"b2", "x1", "x0"}, {"c1", "x0", "x0"}, {"c2", "x1", "x1"}});
}

GraphMorphism to_terminal(const Graph& g) {
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& v : g.nodes()) nm[v] = "0";
    for (const auto& a : g.arcs()) am[a.id] = "(0,0)";
    return GraphMorphism("t", g, terminal_graph(), nm, am);
}

}  // namespace

TEST_CASE("walkable subgraph keeps exactly the nodes with an endless future") {
    // A path has no walkable part at all.
    WalkableSubgraph w = walkable_subgraph(path_graph(3));
    CHECK(w.graph.node_count() == 0);
    CHECK(w.graph.arc_count() == 0);
    CHECK_FALSE(is_walkable(path_graph(3)));

    // A cycle is entirely walkable.
    WalkableSubgraph wc = walkable_subgraph(cycle_graph(4));
    CHECK(wc.graph == cycle_graph(4));
    CHECK(is_walkable(cycle_graph(4)));

    // A feeder into a cycle keeps its endless future; an arc out to a dead
    // end is dropped together with its target.
    Graph g("g", {"a", "b", "c"},
            {{"loop", "a", "a"}, {"in", "b", "a"}, {"out", "a", "c"}});
    WalkableSubgraph wg = walkable_subgraph(g);
    CHECK(wg.graph.node_count() == 2);  // the loop node and its feeder
    CHECK(wg.graph.arc_count() == 2);
    CHECK(wg.graph.has_node("a"));
    CHECK(wg.graph.has_node("b"));
    CHECK_FALSE(wg.graph.has_node("c"));
    CHECK(validate_morphism(wg.inclusion).empty());

    CHECK(walkable_subgraph(initial_graph()).graph.node_count() == 0);
}

TEST_CASE("walkable subgraph agrees with the reaches-a-cycle oracle") {
    std::mt19937 rng(20240902);
    for (int i = 0; i < 40; ++i) {
        Graph g = test_support::random_graph(rng, {}, "g" + std::to_string(i));
        WalkableSubgraph w = walkable_subgraph(g);
        CHECK(validate(w.graph).empty());
        CHECK(validate_morphism(w.inclusion).empty());
        CHECK(is_walkable(w.graph));
        // In a finite graph, having an endless future means walking forever,
        // i.e. eventually meeting a cycle.
        std::vector<char> live = test_support::reaches_cycle(g);
        for (std::size_t v = 0; v < g.node_count(); ++v)
            CHECK(w.graph.has_node(g.nodes()[v]) == (live[v] != 0));
        // Maximality: every arc between surviving nodes survives.
        for (const auto& a : g.arcs())
            if (w.graph.has_node(a.src) && w.graph.has_node(a.tgt)) CHECK(w.graph.has_arc(a.id));
    }
}

TEST_CASE("morphisms out of a cycle-free graph are all homotopic") {
    Graph p3 = path_graph(3);
    Graph k2 = complete_graph(2);
    // Two very different morphisms P(3) -> K(2).
    GraphMorphism f("f", p3, k2, {{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}},
                    {{"(0,1)", "(0,1)"}, {"(1,2)", "(1,0)"}, {"(2,3)", "(0,1)"}});
    GraphMorphism g("g", p3, k2, {{"0", "1"}, {"1", "0"}, {"2", "1"}, {"3", "0"}},
                    {{"(0,1)", "(1,0)"}, {"(1,2)", "(0,1)"}, {"(2,3)", "(1,0)"}});
    REQUIRE(validate_morphism(f).empty());
    REQUIRE(validate_morphism(g).empty());
    CHECK(homotopic(f, g));
    CHECK(homotopic(f, f));

    // On a walkable domain, homotopy collapses to equality.
    Graph b2 = bouquet(2);
    GraphMorphism id = identity_morphism(b2);
    GraphMorphism swap("s", b2, b2, {{"0", "0"}}, {{"a0", "a1"}, {"a1", "a0"}});
    CHECK_FALSE(homotopic(id, swap));
    CHECK(homotopic(id, id));

    // Not parallel: refused.
    CHECK_THROWS_AS(homotopic(f, id), std::invalid_argument);
}

TEST_CASE("level inverses witness that truncations are invertible up to delay") {
    // f = s(1,0): arc_graph(C2) -> C2 admits a level-1 inverse (the identity
    // of arc_graph(C2) works, since applying arc_graph to f gives the next
    // truncation down).
    Graph c2 = cycle_graph(2);
    GraphMorphism f = source_truncation(c2, 1, 0);
    auto q = find_level_inverse(f, 1);
    REQUIRE(q.has_value());
    CHECK(validate_morphism(*q).empty());
    // Both triangle identities, re-checked here from scratch.
    CHECK(morphisms_equal(compose(f, *q), source_truncation(c2, 1, 0)));
    CHECK(morphisms_equal(compose(*q, arc_graph_of_morphism(f, 1)),
                          source_truncation(f.domain(), 1, 0)));

    // An isomorphism has a level-0 inverse.
    Graph c3 = cycle_graph(3);
    Graph c3r("Z", {"u", "v", "w"}, {{"x", "u", "v"}, {"y", "v", "w"}, {"z", "w", "u"}});
    auto iso = graph_iso(c3, c3r);
    REQUIRE(iso.has_value());
    auto inv = find_level_inverse(*iso, 0);
    REQUIRE(inv.has_value());
    CHECK(morphisms_equal(compose(*iso, *inv), identity_morphism(c3r)));
    CHECK(morphisms_equal(compose(*inv, *iso), identity_morphism(c3)));

    // Collapsing C2 onto the terminal graph has no inverse at any level: the
    // composite through the one-node graph can never be surjective on C2.
    GraphMorphism t = to_terminal(c2);
    CHECK_FALSE(find_level_inverse(t, 0).has_value());
    CHECK_FALSE(find_level_inverse(t, 1).has_value());
    CHECK_FALSE(find_level_inverse(t, 2).has_value());

    // The budget guard refuses blowups instead of hanging: the level-7 arc
    // graph of K(3) has 3 * 2^6 = 192 nodes.
    GraphMorphism idk = identity_morphism(complete_graph(3));
    CHECK_THROWS_AS(find_level_inverse(idk, 7, 100), std::runtime_error);
}

TEST_CASE("composing level arrows stacks the delays") {
    Graph c2 = cycle_graph(2);
    // Composing s(1,0) with itself through one application of the arc-graph
    // functor gives s(2,0).
    GraphMorphism f = source_truncation(c2, 1, 0);
    GraphMorphism h = compose_level_arrows(f, f, 1);
    CHECK(h.domain() == arc_graph_n(c2, 2));
    CHECK(morphisms_equal(h, source_truncation(c2, 2, 0)));
    // Mismatched levels are refused.
    CHECK_THROWS_AS(compose_level_arrows(f, f, 2), std::invalid_argument);
}

TEST_CASE("evidence battery accepts conjugacies and refutes collapses") {
    // Truncations pass the battery: cycles correspond one-to-one.
    std::mt19937 rng(20240903);
    for (int i = 0; i < 15; ++i) {
        Graph g = test_support::random_graph(rng, {}, "g" + std::to_string(i));
        Graph w = walkable_subgraph(g).graph;
        if (w.node_count() == 0) continue;
        GraphMorphism s = source_truncation(w, 1, 0);
        EvidenceVerdict v = n_equivalence_evidence(s, 5);
        CHECK_FALSE(v.refuted());
        CHECK(v.bound == 5);
    }

    // Graph isomorphisms pass trivially.
    auto iso = graph_iso(cycle_graph(3),
                         Graph("Z", {"u", "v", "w"},
                               {{"x", "u", "v"}, {"y", "v", "w"}, {"z", "w", "u"}}));
    REQUIRE(iso.has_value());
    CHECK_FALSE(n_equivalence_evidence(*iso, 6).refuted());

    // C2 -> terminal: cycle counts differ at length 1 (0 vs 1).
    EvidenceVerdict v1 = n_equivalence_evidence(to_terminal(cycle_graph(2)), 4);
    CHECK(v1.refuted());
    CHECK(v1.kind == EvidenceVerdict::Kind::CycleCountMismatch);
    CHECK(v1.refuted_at == 1);

    // The mirrored pair covers the two-loop bouquet with equal cycle counts,
    // but the two small loops collide: injectivity fails at length 1.
    Basing b = basal_of(mirror_pair());
    EvidenceVerdict v2 = n_equivalence_evidence(b.p, 4);
    CHECK(v2.refuted());
    CHECK(v2.kind == EvidenceVerdict::Kind::NotInjective);
    CHECK(v2.refuted_at == 1);

    // Walkable domain, not a covering: flagged as such before any census.
    Graph two_loops("L", {"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
    GraphMorphism fold("f", two_loops, terminal_graph(), {{"v", "0"}},
                       {{"a", "(0,0)"}, {"b", "(0,0)"}});
    EvidenceVerdict v3 = n_equivalence_evidence(fold, 4);
    CHECK(v3.refuted());
    CHECK(v3.kind == EvidenceVerdict::Kind::CoveringFailure);
}

TEST_CASE("comparison battery separates equal-zeta graphs by their basal quotient") {
    // C6 versus C3 + C3: same node and arc counts, zeta differs at length 3.
    Coproduct cc = coproduct(cycle_graph(3), cycle_graph(3));
    EquivalenceReport r = compare_battery(cycle_graph(6), cc.graph, 8);
    CHECK_FALSE(r.zeta_same);
    CHECK(r.zeta_refuted_at == 3);
    CHECK(r.refuted());
    // Both are disjoint unions of cycles, so the basal quotients agree.
    CHECK(r.basal_same);

    // Relabelled isomorphic graphs are consistent at every examined degree.
    Graph c3r("Z", {"u", "v", "w"}, {{"x", "u", "v"}, {"y", "v", "w"}, {"z", "w", "u"}});
    EquivalenceReport ok = compare_battery(cycle_graph(3), c3r, 10);
    CHECK(ok.zeta_same);
    CHECK(ok.basal_same);
    CHECK_FALSE(ok.refuted());
    CHECK(ok.degree == 10);
    CHECK(ok.walkable_x_nodes == 3);
    CHECK(ok.basal_x_nodes == 1);

    // A graph and its arc graph share the zeta fingerprint; the battery can
    // still tell them apart when the basal quotients differ, but for a cycle
    // everything coincides.
    EquivalenceReport self = compare_battery(cycle_graph(4), arc_graph(cycle_graph(4)), 8);
    CHECK(self.zeta_same);
    CHECK(self.basal_same);

    // Dead parts do not disturb the comparison: a cycle with an offshoot
    // path compares equal to the bare cycle.
    Graph tail("T", {"a", "b", "c"},
               {{"loop", "a", "a"}, {"e1", "a", "b"}, {"e2", "b", "c"}});
    EquivalenceReport tied = compare_battery(tail, terminal_graph(), 6);
    CHECK(tied.zeta_same);
    CHECK(tied.basal_same);
    CHECK_FALSE(tied.refuted());
    CHECK(tied.walkable_x_nodes == 1);
    CHECK(tied.walkable_y_nodes == 1);
}
