#include "gph/functors.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Final '|'-separated segment of an id (the id itself when there is none).
std::string last_segment(const std::string& id) {
    auto pos = id.rfind('|');
    return pos == std::string::npos ? id : id.substr(pos + 1);
}

}  // namespace

Graph arc_graph(const Graph& x) {
    std::vector<std::string> nodes;
    nodes.reserve(x.arc_count());
    for (const auto& a : x.arcs()) nodes.push_back(a.id);
    std::vector<Arc> arcs;
    for (const auto& a : x.arcs())
        for (std::size_t bi : x.out_arcs(a.tgt)) {
            const Arc& b = x.arcs()[bi];
            arcs.push_back({a.id + "|" + last_segment(b.id), a.id, b.id});
        }
    // The join scheme keeps path ids canonical under iteration, but a user
    // graph that already reuses '|' in clashing ways can defeat it; refuse
    // loudly instead of silently merging arcs.
    std::set<std::string> seen;
    for (const auto& p : arcs)
        if (!seen.insert(p.id).second)
            fail("arc_graph: id collision on '" + p.id +
                 "' (arc ids reuse the '|' separator ambiguously)");
    return Graph("A(" + x.name() + ")", std::move(nodes), std::move(arcs));
}

Graph arc_graph_n(const Graph& x, unsigned n) {
    Graph g = x;
    for (unsigned i = 0; i < n; ++i) g = arc_graph(g);
    return g;
}

GraphMorphism source_truncation(const Graph& x, unsigned m, unsigned n) {
    Graph low = arc_graph_n(x, n);
    GraphMorphism acc = identity_morphism(low);
    Graph cur = low;
    for (unsigned j = 0; j < m; ++j) {
        Graph next = arc_graph(cur);
        // One-step truncation next -> cur: a node of next is an arc of cur
        // and goes to its source; an arc of next is a composable pair and
        // goes to its first component, which is exactly its source node id.
        std::unordered_map<std::string, std::string> nm, am;
        for (const auto& a : next.nodes()) nm.emplace(a, cur.source(a));
        for (const auto& p : next.arcs()) am.emplace(p.id, p.src);
        GraphMorphism step("s1", next, cur, std::move(nm), std::move(am));
        acc = compose(acc, step);
        cur = std::move(next);
    }
    return GraphMorphism("s(" + std::to_string(m) + "," + std::to_string(n) + ")", acc.domain(),
                         acc.codomain(), acc.node_map(), acc.arc_map());
}

namespace {

// One application of the arc-graph construction to a morphism.  The image
// arc is found by its endpoints, which determine it uniquely because arc
// graphs never have parallel arcs.
GraphMorphism arc_step(const GraphMorphism& f) {
    Graph ax = arc_graph(f.domain());
    Graph ay = arc_graph(f.codomain());
    std::map<std::pair<std::string, std::string>, std::string> by_ends;
    for (const auto& b : ay.arcs()) by_ends.emplace(std::make_pair(b.src, b.tgt), b.id);
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& a : ax.nodes()) nm.emplace(a, f.arc_image(a));
    for (const auto& p : ax.arcs()) {
        auto it = by_ends.find({f.arc_image(p.src), f.arc_image(p.tgt)});
        if (it == by_ends.end())
            fail("arc_graph_of_morphism: '" + f.name() + "' does not preserve composability");
        am.emplace(p.id, it->second);
    }
    return GraphMorphism("A(" + f.name() + ")", std::move(ax), std::move(ay), std::move(nm),
                         std::move(am));
}

}  // namespace

GraphMorphism arc_graph_of_morphism(const GraphMorphism& f, unsigned n) {
    GraphMorphism cur = f;
    for (unsigned i = 0; i < n; ++i) cur = arc_step(cur);
    return cur;
}

std::vector<std::string> validate_nset(const FiniteNSet& s) {
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (const auto& e : s.elements)
        if (!seen.insert(e).second) bad.push_back("duplicate element '" + e + "'");
    for (const auto& e : s.elements) {
        auto it = s.tau.find(e);
        if (it == s.tau.end())
            bad.push_back("tau undefined on '" + e + "'");
        else if (!seen.count(it->second))
            bad.push_back("tau('" + e + "') = '" + it->second + "' is not an element");
    }
    for (const auto& [e, v] : s.tau)
        if (!seen.count(e)) bad.push_back("tau mentions unknown element '" + e + "'");
    return bad;
}

Graph dynamic_from_nset(const FiniteNSet& s) {
    auto bad = validate_nset(s);
    if (!bad.empty()) fail("dynamic_from_nset: " + bad.front());
    std::vector<Arc> arcs;
    for (const auto& e : s.elements) arcs.push_back({e, e, s.tau.at(e)});
    std::string name = s.name.empty() ? "D" : "D(" + s.name + ")";
    return Graph(std::move(name), s.elements, std::move(arcs));
}

bool is_dynamic(const Graph& g) {
    for (const auto& n : g.nodes())
        if (g.out_arcs(n).size() != 1) return false;
    return true;
}

FiniteNSet nset_from_dynamic(const Graph& g) {
    if (!is_dynamic(g)) fail("nset_from_dynamic: '" + g.name() + "' is not dynamic");
    FiniteNSet s;
    s.name = g.name();
    s.elements = g.nodes();
    for (const auto& n : g.nodes()) s.tau.emplace(n, g.arcs()[g.out_arcs(n)[0]].tgt);
    return s;
}

GraphMorphism sigma_endomorphism(const Graph& g) {
    if (!is_dynamic(g)) fail("sigma_endomorphism: '" + g.name() + "' is not dynamic");
    auto step = [&](const std::string& node) -> const Arc& {
        return g.arcs()[g.out_arcs(node)[0]];
    };
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& n : g.nodes()) nm.emplace(n, step(n).tgt);
    for (const auto& a : g.arcs()) am.emplace(a.id, step(a.tgt).id);
    return GraphMorphism("sigma", g, g, std::move(nm), std::move(am));
}

}  // namespace gph
