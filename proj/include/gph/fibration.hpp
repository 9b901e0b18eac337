/*
 * fibration.hpp - coverings, in-trees, and basal quotients.
 *
 * A morphism is a covering when it restricts to a bijection on the in-arcs
 * of every node; walks then lift uniquely backwards.  Nodes of one graph
 * carry the same local past exactly when their rooted in-trees agree at all
 * depths, which a backward partition refinement decides in finitely many
 * rounds.  Collapsing the stable partition yields the basal graph, the
 * smallest graph the original covers; a graph equal to its own basal
 * quotient is called basal.
 */

#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

// f restricts to a bijection X(*, x) -> Y(*, f(x)) for every node x.
bool is_covering(const GraphMorphism& f);

// Covering and surjective on nodes and arcs.
bool is_epic_covering(const GraphMorphism& f);

// The rooted tree of backward paths of length <= depth ending at `node`,
// as a graph.  Tree node ids are "p:" followed by the arc ids of the
// backward path (joined with '|', innermost arc first); the root is "p:".
// Exponential in depth; meant as a reference object for tests and small
// inspections, not as an algorithm.
Graph truncated_tree(const Graph& g, const std::string& node, unsigned depth);

struct NodePartition {
    // Blocks in order of first appearance (by node input order); each block
    // lists its nodes in input order.
    std::vector<std::vector<std::string>> blocks;
    std::unordered_map<std::string, std::size_t> block_of;
    // Number of rounds that strictly refined the partition.
    unsigned rounds = 0;
};

// Backward refinement: start with everything in one block and split by the
// multiset of source blocks over each node's in-arcs until stable.  Two
// nodes end in the same block iff their truncated in-trees agree at every
// depth.
NodePartition tree_partition(const Graph& g);

// Which node represents a block of the stable partition.
enum class RepStrategy { FirstInInputOrder, LastInInputOrder };

struct Basing {
    Graph basal;      // the quotient graph B
    GraphMorphism p;  // the covering X -> B
};

// Quotient by tree_partition(x).  B keeps one representative node per block
// and all arcs of X that end at a representative (with their sources
// redirected to representatives).  The projection sends a node to its
// block's representative and an arc to the in-arc of the representative
// that sits at the same position once the in-arcs on both sides are sorted
// by (source block, arc id).  The projection is always an epic covering.
Basing basal_of(const Graph& x, RepStrategy strategy = RepStrategy::FirstInInputOrder);

// The stable partition is discrete, i.e. basal_of would change nothing.
bool is_basal(const Graph& g);

// Given an epic covering f: X -> Y and a basing p of X, produce
// h: Y -> basal(p) with h(f(x)) agreeing with p on nodes.  Built by choosing
// a section of f on nodes and transporting arcs through the in-arc
// bijections of f.
GraphMorphism lift_over_basing(const GraphMorphism& f, const Basing& basing);

// Same node maps (domains and codomains must match structurally).
bool agree_on_nodes(const GraphMorphism& f, const GraphMorphism& g);

}  // namespace gph
