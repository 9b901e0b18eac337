#include "gph/fibration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

bool is_covering(const GraphMorphism& f) {
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    for (const auto& x : X.nodes()) {
        const auto& in_x = X.in_arcs(x);
        const std::string& y = f.node_image(x);
        if (in_x.size() != Y.in_arcs(y).size()) return false;
        std::set<std::string> images;
        for (std::size_t ai : in_x) {
            const std::string& b = f.arc_image(X.arcs()[ai].id);
            if (Y.target(b) != y) return false;
            if (!images.insert(b).second) return false;  // two in-arcs collapsed
        }
    }
    return true;
}

bool is_epic_covering(const GraphMorphism& f) { return is_covering(f) && is_epic(f); }

Graph truncated_tree(const Graph& g, const std::string& node, unsigned depth) {
    if (!g.has_node(node)) fail("truncated_tree: unknown node '" + node + "'");
    std::vector<std::string> nodes{"p:"};
    std::vector<Arc> arcs;
    // frontier: (tree node id, graph node it sits over)
    std::vector<std::pair<std::string, std::string>> frontier{{"p:", node}};
    for (unsigned d = 1; d <= depth; ++d) {
        std::vector<std::pair<std::string, std::string>> next;
        for (const auto& [tid, v] : frontier)
            for (std::size_t ai : g.in_arcs(v)) {
                const Arc& a = g.arcs()[ai];
                std::string child = (d == 1) ? tid + a.id : tid + "|" + a.id;
                nodes.push_back(child);
                arcs.push_back({"a:" + child.substr(2), child, tid});
                next.emplace_back(child, a.src);
            }
        frontier = std::move(next);
    }
    return Graph("T(" + g.name() + "," + node + "," + std::to_string(depth) + ")",
                 std::move(nodes), std::move(arcs));
}

NodePartition tree_partition(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> color(n, 0);
    NodePartition part;
    while (true) {
        // Signature of a node: its color plus the sorted colors of the
        // sources of its in-arcs.
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> table;
        std::vector<std::size_t> raw(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> src;
            for (std::size_t ai : g.in_arcs(g.nodes()[v]))
                src.push_back(color[g.node_pos(g.arcs()[ai].src)]);
            std::sort(src.begin(), src.end());
            auto key = std::make_pair(color[v], std::move(src));
            auto it = table.find(key);
            if (it == table.end()) it = table.emplace(std::move(key), table.size()).first;
            raw[v] = it->second;
        }
        // Renumber densely by first appearance so block order is canonical.
        std::vector<std::size_t> remap(table.size(), SIZE_MAX);
        std::vector<std::size_t> next(n);
        std::size_t fresh = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (remap[raw[v]] == SIZE_MAX) remap[raw[v]] = fresh++;
            next[v] = remap[raw[v]];
        }
        if (next == color) break;
        color = std::move(next);
        ++part.rounds;
    }
    std::size_t nblocks = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    part.blocks.assign(nblocks, {});
    for (std::size_t v = 0; v < n; ++v) {
        part.blocks[color[v]].push_back(g.nodes()[v]);
        part.block_of.emplace(g.nodes()[v], color[v]);
    }
    return part;
}

namespace {

// In-arc ids of `v`, sorted by (block of arc source, arc id); this is the
// alignment used to match arcs of a node against arcs of its block
// representative.
std::vector<std::string> sorted_in_arcs(const Graph& g, const NodePartition& part,
                                        const std::string& v) {
    std::vector<std::pair<std::pair<std::size_t, std::string>, std::string>> keyed;
    for (std::size_t ai : g.in_arcs(v)) {
        const Arc& a = g.arcs()[ai];
        keyed.push_back({{part.block_of.at(a.src), a.id}, a.id});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

}  // namespace

Basing basal_of(const Graph& x, RepStrategy strategy) {
    NodePartition part = tree_partition(x);
    std::vector<std::string> rep(part.blocks.size());
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        rep[b] = strategy == RepStrategy::FirstInInputOrder ? part.blocks[b].front()
                                                            : part.blocks[b].back();
    std::set<std::string> rep_set(rep.begin(), rep.end());

    std::vector<std::string> bnodes(rep.begin(), rep.end());
    std::vector<Arc> barcs;
    for (const auto& a : x.arcs())
        if (rep_set.count(a.tgt)) barcs.push_back({a.id, rep[part.block_of.at(a.src)], a.tgt});
    Graph basal("basal(" + x.name() + ")", std::move(bnodes), std::move(barcs));

    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& v : x.nodes()) nm.emplace(v, rep[part.block_of.at(v)]);
    for (const auto& v : x.nodes()) {
        const std::string& r = rep[part.block_of.at(v)];
        std::vector<std::string> lv = sorted_in_arcs(x, part, v);
        std::vector<std::string> lr = sorted_in_arcs(x, part, r);
        if (lv.size() != lr.size())
            throw std::logic_error("basal_of: unstable partition (in-degree mismatch)");
        for (std::size_t i = 0; i < lv.size(); ++i) {
            if (part.block_of.at(x.source(lv[i])) != part.block_of.at(x.source(lr[i])))
                throw std::logic_error("basal_of: unstable partition (source block mismatch)");
            am.emplace(lv[i], lr[i]);
        }
    }
    GraphMorphism p("p", x, basal, std::move(nm), std::move(am));
    return {std::move(basal), std::move(p)};
}

bool is_basal(const Graph& g) { return tree_partition(g).blocks.size() == g.node_count(); }

GraphMorphism lift_over_basing(const GraphMorphism& f, const Basing& basing) {
    if (f.domain() != basing.p.domain())
        fail("lift_over_basing: '" + f.name() + "' and the basing start from different graphs");
    if (!is_epic_covering(f))
        fail("lift_over_basing: '" + f.name() + "' is not an epic covering");
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    // Section of f on nodes: first preimage in input order.
    std::unordered_map<std::string, std::string> section;
    for (const auto& xn : X.nodes()) section.emplace(f.node_image(xn), xn);
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& y : Y.nodes()) nm.emplace(y, basing.p.node_image(section.at(y)));
    for (const auto& b : Y.arcs()) {
        const std::string& xn = section.at(b.tgt);
        // The unique f-preimage of b among the in-arcs of the section node.
        const std::string* found = nullptr;
        for (std::size_t ai : X.in_arcs(xn))
            if (f.arc_image(X.arcs()[ai].id) == b.id) {
                found = &X.arcs()[ai].id;
                break;
            }
        if (!found) throw std::logic_error("lift_over_basing: covering lost an arc");
        am.emplace(b.id, basing.p.arc_image(*found));
    }
    GraphMorphism h("h", Y, basing.basal, std::move(nm), std::move(am));
    auto bad = validate_morphism(h);
    if (!bad.empty()) throw std::logic_error("lift_over_basing: lift is not a morphism: " + bad.front());
    return h;
}

bool agree_on_nodes(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        fail("agree_on_nodes: morphisms are not parallel");
    return f.node_map() == g.node_map();
}

}  // namespace gph
