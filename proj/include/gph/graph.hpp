/*
 * graph.hpp - finite directed multigraphs and their morphisms.
 *
 * A graph is a pair of finite sets (nodes, arcs) with total source/target
 * maps; parallel arcs and loops are allowed.  All values are immutable after
 * construction and all operations are pure, so everything here is safe to
 * evaluate concurrently.  Node and arc ids are opaque strings; constructed
 * graphs use deterministic id schemes so outputs are reproducible.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gph {

struct Arc {
    std::string id;
    std::string src;
    std::string tgt;
};

inline bool operator==(const Arc& a, const Arc& b) {
    return a.id == b.id && a.src == b.src && a.tgt == b.tgt;
}

class Graph {
public:
    Graph() = default;

    // Builds index structures eagerly.  Duplicate or dangling entries are
    // tolerated here so that validate() can report them; every other
    // operation assumes a graph that passes validate().
    Graph(std::string name, std::vector<std::string> nodes, std::vector<Arc> arcs);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    bool has_node(const std::string& id) const { return node_index_.count(id) != 0; }
    bool has_arc(const std::string& id) const { return arc_index_.count(id) != 0; }

    // Throw std::invalid_argument on unknown ids.
    std::size_t node_pos(const std::string& id) const;
    std::size_t arc_pos(const std::string& id) const;
    const Arc& arc(const std::string& id) const { return arcs_[arc_pos(id)]; }

    const std::string& source(const std::string& arc_id) const { return arc(arc_id).src; }
    const std::string& target(const std::string& arc_id) const { return arc(arc_id).tgt; }

    // Arc positions leaving/entering a node, in input order.
    const std::vector<std::size_t>& out_arcs(const std::string& node_id) const;
    const std::vector<std::size_t>& in_arcs(const std::string& node_id) const;

private:
    std::string name_;
    std::vector<std::string> nodes_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, std::size_t> node_index_;
    std::unordered_map<std::string, std::size_t> arc_index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// Structural equality: same node list and same arc list, order-sensitive.
// The display name is a label and does not participate.
bool operator==(const Graph& a, const Graph& b);
inline bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

// A path is a start node followed by a composable arc sequence; the empty
// sequence denotes the bare node.  Paths are interpreted relative to a host
// graph passed to each operation.
struct Path {
    std::string start;
    std::vector<std::string> arcs;

    std::size_t length() const { return arcs.size(); }
};

bool operator==(const Path& a, const Path& b);

// Composability check: arcs chain target-to-source and the first arc leaves
// `start`.  False on unknown ids.
bool path_ok(const Graph& host, const Path& p);

// Target node of a path (its start when the path has length 0).
std::string path_target(const Graph& host, const Path& p);

class GraphMorphism {
public:
    GraphMorphism() = default;
    GraphMorphism(std::string name, Graph domain, Graph codomain,
                  std::unordered_map<std::string, std::string> node_map,
                  std::unordered_map<std::string, std::string> arc_map);

    const std::string& name() const { return name_; }
    const Graph& domain() const { return dom_; }
    const Graph& codomain() const { return cod_; }
    const std::unordered_map<std::string, std::string>& node_map() const { return node_map_; }
    const std::unordered_map<std::string, std::string>& arc_map() const { return arc_map_; }

    // Throw std::invalid_argument when the id has no image.
    const std::string& node_image(const std::string& id) const;
    const std::string& arc_image(const std::string& id) const;

private:
    std::string name_;
    Graph dom_;
    Graph cod_;
    std::unordered_map<std::string, std::string> node_map_;
    std::unordered_map<std::string, std::string> arc_map_;
};

// Same domain, same codomain, identical node and arc maps (no quotienting).
bool morphisms_equal(const GraphMorphism& f, const GraphMorphism& g);

// Every invariant violation as a human-readable line; empty means ok.
std::vector<std::string> validate(const Graph& g);

// Totality, landing in the codomain, and the two commuting squares
// s.f1 = f0.s and t.f1 = f0.t, checked by enumeration.
std::vector<std::string> validate_morphism(const GraphMorphism& f);

// Standard graphs, deterministic id schemes:
//   path_graph(n): nodes "0".."n", arcs "(k,k+1)";  dot = path_graph(0),
//   arrow = path_graph(1).
//   cycle_graph(n): nodes "0".."n-1", arcs "(k,(k+1) mod n)"; rejects n = 0.
//   bouquet(k): one node "0", loops "a0".."a<k-1>".
//   complete_graph(k): nodes "0".."k-1", one arc "(i,j)" per ordered pair.
//   terminal_graph(): one node, one loop (= cycle_graph(1) up to name).
//   initial_graph(): empty.
Graph path_graph(unsigned n);
Graph cycle_graph(unsigned n);
Graph dot_graph();
Graph arrow_graph();
Graph bouquet(unsigned k);
Graph complete_graph(unsigned k);
Graph terminal_graph();
Graph initial_graph();

// Dispatcher for the textual forms "P(n)", "C(n)", "D", "A", "B(k)", "K(k)",
// "1", "0".  Throws std::invalid_argument on anything else.
Graph standard_graph(const std::string& spec);

GraphMorphism identity_morphism(const Graph& g);

// g after f; requires codomain(f) == domain(g) structurally.
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

struct Coproduct {
    Graph graph;
    GraphMorphism from_left;
    GraphMorphism from_right;
};

// Disjoint union; left ids get prefix "0:", right ids "1:".
Coproduct coproduct(const Graph& x, const Graph& y);

struct FiberProduct {
    Graph graph;
    GraphMorphism to_left;
    GraphMorphism to_right;
};

// Pullback of p: X -> B and q: Y -> B.  Nodes are pairs "(x,y)" with
// p(x) = q(y), arcs are pairs "(a,b)" with p(a) = q(b), everything
// componentwise.  Requires codomain(p) == codomain(q).
FiberProduct fiber_product(const GraphMorphism& p, const GraphMorphism& q);

// Exact isomorphism search: backtracking seeded by iterated degree/color
// refinement.  Parallel arcs are first-class; a witness is bijective on
// nodes and arcs.  Deterministic for fixed input order.
std::optional<GraphMorphism> graph_iso(const Graph& x, const Graph& y);

// No two distinct arcs share both endpoints.
bool is_separated(const Graph& g);

// Surjective on nodes and on arcs (both checked).
bool is_epic(const GraphMorphism& f);

}  // namespace gph
