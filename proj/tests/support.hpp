/*
 * support.hpp - shared helpers for the test suites: deterministic random
 * graphs and walks, plus small reference implementations (tree canon forms,
 * cycle reachability) that are deliberately independent of the library
 * algorithms they cross-check.
 */

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace test_support {

using gph::Arc;
using gph::Graph;

// mt19937 with fixed seeds keeps every suite reproducible; raw modulo is
// fine here, bias is irrelevant for test data.
inline std::size_t pick(std::mt19937& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

struct RandomGraphOptions {
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 6;
    std::size_t max_arcs = 10;
    // Cap on per-node out-degree; 0 means uncapped.  The cap keeps cycle
    // counts small enough for brute-force enumeration.
    std::size_t out_cap = 3;
};

inline Graph random_graph(std::mt19937& rng, const RandomGraphOptions& opt, std::string name) {
    std::size_t nn = opt.min_nodes + pick(rng, opt.max_nodes - opt.min_nodes + 1);
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < nn; ++i) nodes.push_back("n" + std::to_string(i));
    std::size_t na = pick(rng, opt.max_arcs + 1);
    std::vector<std::size_t> out_deg(nn, 0);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < na; ++i) {
        // Pick a source that still has capacity; give up after a few tries.
        std::size_t s = pick(rng, nn);
        bool found = opt.out_cap == 0 || out_deg[s] < opt.out_cap;
        for (std::size_t tries = 0; !found && tries < nn; ++tries) {
            s = (s + 1) % nn;
            found = out_deg[s] < opt.out_cap;
        }
        if (!found) break;
        std::size_t t = pick(rng, nn);
        ++out_deg[s];
        arcs.push_back({"e" + std::to_string(arcs.size()), nodes[s], nodes[t]});
    }
    return Graph(std::move(name), std::move(nodes), std::move(arcs));
}

// --------------------------------------------------------------------------
// Reference: canonical form of the depth-limited in-tree at a node, computed
// recursively (AHU-style).  Two nodes get the same string iff their backward
// trees of that depth are isomorphic.
// --------------------------------------------------------------------------

inline std::string in_tree_canon(const Graph& g, const std::string& node, unsigned depth) {
    if (depth == 0) return "()";
    std::vector<std::string> parts;
    for (std::size_t ai : g.in_arcs(node))
        parts.push_back(in_tree_canon(g, g.arcs()[ai].src, depth - 1));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

// --------------------------------------------------------------------------
// Reference: which nodes can start an infinite walk.  A node qualifies iff
// it reaches a node that lies on a cycle; computed with a boolean
// reachability closure, nothing shared with the library's fixpoint.
// --------------------------------------------------------------------------

inline std::vector<char> reaches_cycle(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (const auto& a : g.arcs()) reach[g.node_pos(a.src)][g.node_pos(a.tgt)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    std::vector<char> ok(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < n; ++c)
            if (reach[c][c] && (v == c || reach[v][c])) ok[v] = 1;
    return ok;
}

// --------------------------------------------------------------------------
// Random eventually periodic walks: wander from a random node that can keep
// walking, then close up the first repeated node into the period.
// --------------------------------------------------------------------------

inline std::shared_ptr<const Graph> shared(const Graph& g) {
    return std::make_shared<const Graph>(g);
}

// Returns false if the graph has no node from which an infinite walk exists.
inline bool random_walk_vectors(std::mt19937& rng, const Graph& g,
                                std::vector<std::string>& pre, std::vector<std::string>& per) {
    std::vector<char> live = reaches_cycle(g);
    std::vector<std::string> starts;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (live[v]) starts.push_back(g.nodes()[v]);
    if (starts.empty()) return false;
    std::string at = starts[pick(rng, starts.size())];
    auto step = [&](const std::string& from) -> const Arc& {
        // Choose among out-arcs that keep an infinite continuation.
        std::vector<std::size_t> good;
        for (std::size_t ai : g.out_arcs(from))
            if (live[g.node_pos(g.arcs()[ai].tgt)]) good.push_back(ai);
        return g.arcs()[good[pick(rng, good.size())]];
    };
    std::vector<std::string> trail;
    std::map<std::string, std::size_t> seen;  // node -> position in trail
    seen[at] = 0;
    // A few free steps first so preambles of varied length appear.
    std::size_t warmup = pick(rng, 4);
    std::size_t cut = 0;
    while (true) {
        const Arc& a = step(at);
        trail.push_back(a.id);
        at = a.tgt;
        auto it = seen.find(at);
        if (trail.size() > warmup && it != seen.end()) {
            cut = it->second;
            break;
        }
        // Repeats during warmup are forgotten so the walk may spiral on.
        seen[at] = trail.size();
    }
    pre.assign(trail.begin(), trail.begin() + cut);
    per.assign(trail.begin() + cut, trail.end());
    return true;
}

}  // namespace test_support
