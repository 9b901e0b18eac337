/*
 * equivalence.hpp - walkable parts, homotopy of morphisms, and the evidence
 * battery for long-run equivalence of graphs.
 *
 * Only the part of a graph from which an infinite walk can start matters for
 * long-run behaviour; that part is the walkable subgraph (the largest
 * subgraph in which every node has an out-arc).  Morphisms are homotopic
 * when they agree there.  Whether two graphs have equivalent walk dynamics
 * is not decided outright; instead the battery collects refutable evidence:
 * cycle counts degree by degree, zeta fingerprints, covering structure, and
 * basal quotients.  A refutation is final; agreement is reported as
 * consistency up to the examined bound.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

struct WalkableSubgraph {
    Graph graph;
    GraphMorphism inclusion;  // into the original graph
};

// Largest subgraph in which every node has at least one out-arc, together
// with all arcs between its nodes.  Computed as the limit of repeatedly
// discarding nodes with no out-arc into the surviving set.
WalkableSubgraph walkable_subgraph(const Graph& g);

// walkable_subgraph(g) is all of g.
bool is_walkable(const Graph& g);

// f and g agree on the walkable subgraph of their common domain (nodes and
// arcs).  Domains and codomains must match structurally.
bool homotopic(const GraphMorphism& f, const GraphMorphism& g);

// Search for q: arc_graph_n(Y, n) -> X with
//     q after arc_graph_n(f) = source_truncation(X, n, 0)   and
//     f after q              = source_truncation(Y, n, 0).
// Returns a witness or nullopt when provably none exists.  Refuses (throws)
// when arc_graph_n(Y, n) exceeds node_budget nodes, since exhausting the
// search would then be impractical.
std::optional<GraphMorphism> find_level_inverse(const GraphMorphism& f, unsigned n,
                                                std::size_t node_budget = 2000);

// g after arc_graph_n-image of f: for f: arc_graph_n(X, n) -> Y and
// g: arc_graph_n(Y, m) -> Z, the composite arc_graph_n(X, n + m) -> Z.
// Validates that domain(g) is the m-th arc graph of codomain(f).
GraphMorphism compose_level_arrows(const GraphMorphism& f, const GraphMorphism& g, unsigned m);

struct EvidenceVerdict {
    enum class Kind {
        Consistent,          // nothing refuted up to the bound
        CycleCountMismatch,  // |C_m| differs at refuted_at
        NotInjective,        // two length-m cycles collide at refuted_at
        CoveringFailure,     // walkable domain but no in-arc bijection
    };
    Kind kind = Kind::Consistent;
    unsigned refuted_at = 0;  // the m that failed, when applicable
    std::string witness;      // human-readable detail
    unsigned bound = 0;       // largest m examined

    bool refuted() const { return kind != Kind::Consistent; }
};

// Necessary conditions for f to induce a bijection on based closed walks of
// every length: for each m <= bound the induced map on length-m cycles must
// be injective with equal counts on both sides, and when the domain is
// walkable f must be a covering.  A refutation is conclusive; consistency
// only covers the examined lengths.
EvidenceVerdict n_equivalence_evidence(const GraphMorphism& f, unsigned bound);

struct EquivalenceReport {
    std::size_t walkable_x_nodes = 0, walkable_x_arcs = 0;
    std::size_t walkable_y_nodes = 0, walkable_y_arcs = 0;
    bool zeta_same = false;       // equal zeta fingerprints (cycle-count equivalence)
    unsigned zeta_refuted_at = 0; // smallest m with differing c_m when !zeta_same
    std::size_t basal_x_nodes = 0, basal_x_arcs = 0;
    std::size_t basal_y_nodes = 0, basal_y_arcs = 0;
    bool basal_same = false;      // basal quotients of the walkable parts isomorphic
    unsigned degree = 0;          // consistency bound used for reporting

    // Walk-dynamics equivalence refuted outright.
    bool refuted() const { return !zeta_same || !basal_same; }
};

// Compare two graphs: zeta fingerprints of the whole graphs, then basal
// quotients of the walkable subgraphs.  Equal fingerprints with
// non-isomorphic basal quotients is the signature of graphs that share all
// cycle counts but not their walk dynamics.
EquivalenceReport compare_battery(const Graph& x, const Graph& y, unsigned degree);

}  // namespace gph
