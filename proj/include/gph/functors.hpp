/*
 * functors.hpp - the arc-graph construction and its companions.
 *
 * arc_graph(X) is the line digraph of X: one node per arc of X, one arc per
 * composable pair.  Iterating it n times gives arc_graph_n(X, n), whose
 * nodes stand for the length-n paths of X; the canonical node id of such a
 * path is its arc ids joined with '|'.  Source truncations and the action on
 * morphisms are built structurally from the iterated graphs, so they remain
 * correct when X itself already is an arc graph.
 */

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

// Line digraph.  Node ids: arc ids of x.  Arc ids: for a composable pair
// (a, b), the id of a joined with the final '|'-segment of the id of b, so
// that iterating yields the path-id scheme described above.
Graph arc_graph(const Graph& x);

// n-fold iteration; arc_graph_n(x, 0) == x exactly.
Graph arc_graph_n(const Graph& x, unsigned n);

// s(m, n): arc_graph_n(x, n + m) -> arc_graph_n(x, n), forgetting the last m
// steps of a path (keeping its initial part).  s(0, n) is the identity.
GraphMorphism source_truncation(const Graph& x, unsigned m, unsigned n);

// Action of arc_graph_n on a morphism f: X -> Y, a morphism
// arc_graph_n(X, n) -> arc_graph_n(Y, n).
GraphMorphism arc_graph_of_morphism(const GraphMorphism& f, unsigned n);

// A finite set with a self-map tau.
struct FiniteNSet {
    std::string name;
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::string> tau;
};

std::vector<std::string> validate_nset(const FiniteNSet& s);

// The graph with one node per element and one arc e: e -> tau(e) per
// element; arc ids borrow the element ids.  Out-degree is exactly 1.
Graph dynamic_from_nset(const FiniteNSet& s);

// Every node has out-degree exactly 1.
bool is_dynamic(const Graph& g);

// Inverse to dynamic_from_nset on dynamic graphs: elements are the nodes,
// tau(v) is the target of the unique arc leaving v.
FiniteNSet nset_from_dynamic(const Graph& g);

// The shift endomorphism of a dynamic graph: each node moves along its
// unique out-arc, each arc a: v -> w moves to the unique out-arc of w.
// Satisfies source(sigma(a)) == target(a).
GraphMorphism sigma_endomorphism(const Graph& g);

}  // namespace gph
