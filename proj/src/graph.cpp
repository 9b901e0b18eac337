#include "gph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Graph::Graph(std::string name, std::vector<std::string> nodes, std::vector<Arc> arcs)
    : name_(std::move(name)), nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    node_index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        node_index_.emplace(nodes_[i], i);  // keeps first occurrence on duplicates
    arc_index_.reserve(arcs_.size());
    out_.assign(nodes_.size(), {});
    in_.assign(nodes_.size(), {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        arc_index_.emplace(arcs_[i].id, i);
        auto s = node_index_.find(arcs_[i].src);
        auto t = node_index_.find(arcs_[i].tgt);
        // Dangling endpoints are left out of the adjacency lists; validate()
        // reports them.
        if (s != node_index_.end()) out_[s->second].push_back(i);
        if (t != node_index_.end()) in_[t->second].push_back(i);
    }
}

std::size_t Graph::node_pos(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) fail("graph '" + name_ + "': unknown node '" + id + "'");
    return it->second;
}

std::size_t Graph::arc_pos(const std::string& id) const {
    auto it = arc_index_.find(id);
    if (it == arc_index_.end()) fail("graph '" + name_ + "': unknown arc '" + id + "'");
    return it->second;
}

const std::vector<std::size_t>& Graph::out_arcs(const std::string& node_id) const {
    return out_[node_pos(node_id)];
}

const std::vector<std::size_t>& Graph::in_arcs(const std::string& node_id) const {
    return in_[node_pos(node_id)];
}

bool operator==(const Graph& a, const Graph& b) {
    return a.nodes() == b.nodes() && a.arcs() == b.arcs();
}

bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.arcs == b.arcs;
}

bool path_ok(const Graph& host, const Path& p) {
    if (!host.has_node(p.start)) return false;
    std::string at = p.start;
    for (const auto& aid : p.arcs) {
        if (!host.has_arc(aid)) return false;
        const Arc& a = host.arc(aid);
        if (a.src != at) return false;
        at = a.tgt;
    }
    return true;
}

std::string path_target(const Graph& host, const Path& p) {
    if (p.arcs.empty()) return p.start;
    return host.target(p.arcs.back());
}

GraphMorphism::GraphMorphism(std::string name, Graph domain, Graph codomain,
                             std::unordered_map<std::string, std::string> node_map,
                             std::unordered_map<std::string, std::string> arc_map)
    : name_(std::move(name)),
      dom_(std::move(domain)),
      cod_(std::move(codomain)),
      node_map_(std::move(node_map)),
      arc_map_(std::move(arc_map)) {}

const std::string& GraphMorphism::node_image(const std::string& id) const {
    auto it = node_map_.find(id);
    if (it == node_map_.end())
        fail("morphism '" + name_ + "': no image for node '" + id + "'");
    return it->second;
}

const std::string& GraphMorphism::arc_image(const std::string& id) const {
    auto it = arc_map_.find(id);
    if (it == arc_map_.end())
        fail("morphism '" + name_ + "': no image for arc '" + id + "'");
    return it->second;
}

bool morphisms_equal(const GraphMorphism& f, const GraphMorphism& g) {
    return f.domain() == g.domain() && f.codomain() == g.codomain() &&
           f.node_map() == g.node_map() && f.arc_map() == g.arc_map();
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (const auto& n : g.nodes())
        if (!seen.insert(n).second) bad.push_back("duplicate node id '" + n + "'");
    std::set<std::string> aseen;
    for (const auto& a : g.arcs()) {
        if (!aseen.insert(a.id).second) bad.push_back("duplicate arc id '" + a.id + "'");
        if (!g.has_node(a.src))
            bad.push_back("arc '" + a.id + "' has unknown source '" + a.src + "'");
        if (!g.has_node(a.tgt))
            bad.push_back("arc '" + a.id + "' has unknown target '" + a.tgt + "'");
    }
    return bad;
}

std::vector<std::string> validate_morphism(const GraphMorphism& f) {
    std::vector<std::string> bad;
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    for (const auto& n : X.nodes()) {
        auto it = f.node_map().find(n);
        if (it == f.node_map().end()) {
            bad.push_back("node '" + n + "' has no image");
        } else if (!Y.has_node(it->second)) {
            bad.push_back("node '" + n + "' maps to unknown node '" + it->second + "'");
        }
    }
    for (const auto& [n, img] : f.node_map())
        if (!X.has_node(n)) bad.push_back("node map mentions unknown node '" + n + "'");
    for (const auto& a : X.arcs()) {
        auto it = f.arc_map().find(a.id);
        if (it == f.arc_map().end()) {
            bad.push_back("arc '" + a.id + "' has no image");
            continue;
        }
        if (!Y.has_arc(it->second)) {
            bad.push_back("arc '" + a.id + "' maps to unknown arc '" + it->second + "'");
            continue;
        }
        const Arc& b = Y.arc(it->second);
        auto sn = f.node_map().find(a.src);
        auto tn = f.node_map().find(a.tgt);
        if (sn != f.node_map().end() && sn->second != b.src)
            bad.push_back("arc '" + a.id + "': source image '" + sn->second +
                          "' differs from source of '" + b.id + "'");
        if (tn != f.node_map().end() && tn->second != b.tgt)
            bad.push_back("arc '" + a.id + "': target image '" + tn->second +
                          "' differs from target of '" + b.id + "'");
    }
    for (const auto& [a, img] : f.arc_map())
        if (!X.has_arc(a)) bad.push_back("arc map mentions unknown arc '" + a + "'");
    return bad;
}

Graph path_graph(unsigned n) {
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    for (unsigned k = 0; k <= n; ++k) nodes.push_back(std::to_string(k));
    for (unsigned k = 0; k < n; ++k)
        arcs.push_back({"(" + std::to_string(k) + "," + std::to_string(k + 1) + ")",
                        std::to_string(k), std::to_string(k + 1)});
    return Graph("P" + std::to_string(n), std::move(nodes), std::move(arcs));
}

Graph cycle_graph(unsigned n) {
    if (n == 0) fail("cycle_graph: length must be positive");
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    for (unsigned k = 0; k < n; ++k) nodes.push_back(std::to_string(k));
    for (unsigned k = 0; k < n; ++k)
        arcs.push_back({"(" + std::to_string(k) + "," + std::to_string((k + 1) % n) + ")",
                        std::to_string(k), std::to_string((k + 1) % n)});
    return Graph("C" + std::to_string(n), std::move(nodes), std::move(arcs));
}

Graph dot_graph() {
    Graph g = path_graph(0);
    return Graph("D", g.nodes(), g.arcs());
}

Graph arrow_graph() {
    Graph g = path_graph(1);
    return Graph("A", g.nodes(), g.arcs());
}

Graph bouquet(unsigned k) {
    std::vector<Arc> arcs;
    for (unsigned i = 0; i < k; ++i) arcs.push_back({"a" + std::to_string(i), "0", "0"});
    return Graph("B" + std::to_string(k), {"0"}, std::move(arcs));
}

Graph complete_graph(unsigned k) {
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    for (unsigned i = 0; i < k; ++i) nodes.push_back(std::to_string(i));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            arcs.push_back({"(" + std::to_string(i) + "," + std::to_string(j) + ")",
                            std::to_string(i), std::to_string(j)});
    return Graph("K" + std::to_string(k), std::move(nodes), std::move(arcs));
}

Graph terminal_graph() {
    Graph g = cycle_graph(1);
    return Graph("1", g.nodes(), g.arcs());
}

Graph initial_graph() { return Graph("0", {}, {}); }

Graph standard_graph(const std::string& spec) {
    if (spec == "D") return dot_graph();
    if (spec == "A") return arrow_graph();
    if (spec == "1") return terminal_graph();
    if (spec == "0") return initial_graph();
    // Parametric forms "P(n)", "C(n)", "B(k)", "K(k)".
    if (spec.size() >= 4 && spec[1] == '(' && spec.back() == ')') {
        std::string num = spec.substr(2, spec.size() - 3);
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
            unsigned long v = std::stoul(num);
            switch (spec[0]) {
                case 'P': return path_graph(static_cast<unsigned>(v));
                case 'C': return cycle_graph(static_cast<unsigned>(v));
                case 'B': return bouquet(static_cast<unsigned>(v));
                case 'K': return complete_graph(static_cast<unsigned>(v));
                default: break;
            }
        }
    }
    fail("standard_graph: unrecognized form '" + spec + "'");
}

GraphMorphism identity_morphism(const Graph& g) {
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& n : g.nodes()) nm.emplace(n, n);
    for (const auto& a : g.arcs()) am.emplace(a.id, a.id);
    return GraphMorphism("id_" + g.name(), g, g, std::move(nm), std::move(am));
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
    if (f.codomain() != g.domain())
        fail("compose: codomain of '" + f.name() + "' differs from domain of '" + g.name() + "'");
    std::unordered_map<std::string, std::string> nm, am;
    for (const auto& n : f.domain().nodes()) nm.emplace(n, g.node_image(f.node_image(n)));
    for (const auto& a : f.domain().arcs()) am.emplace(a.id, g.arc_image(f.arc_image(a.id)));
    return GraphMorphism(g.name() + "." + f.name(), f.domain(), g.codomain(), std::move(nm),
                         std::move(am));
}

Coproduct coproduct(const Graph& x, const Graph& y) {
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    std::unordered_map<std::string, std::string> lnm, lam, rnm, ram;
    for (const auto& n : x.nodes()) {
        nodes.push_back("0:" + n);
        lnm.emplace(n, nodes.back());
    }
    for (const auto& n : y.nodes()) {
        nodes.push_back("1:" + n);
        rnm.emplace(n, nodes.back());
    }
    for (const auto& a : x.arcs()) {
        arcs.push_back({"0:" + a.id, "0:" + a.src, "0:" + a.tgt});
        lam.emplace(a.id, arcs.back().id);
    }
    for (const auto& a : y.arcs()) {
        arcs.push_back({"1:" + a.id, "1:" + a.src, "1:" + a.tgt});
        ram.emplace(a.id, arcs.back().id);
    }
    Graph sum("(" + x.name() + "+" + y.name() + ")", std::move(nodes), std::move(arcs));
    GraphMorphism inl("inl", x, sum, std::move(lnm), std::move(lam));
    GraphMorphism inr("inr", y, sum, std::move(rnm), std::move(ram));
    return {std::move(sum), std::move(inl), std::move(inr)};
}

FiberProduct fiber_product(const GraphMorphism& p, const GraphMorphism& q) {
    if (p.codomain() != q.codomain())
        fail("fiber_product: '" + p.name() + "' and '" + q.name() + "' have different codomains");
    const Graph& X = p.domain();
    const Graph& Y = q.domain();
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    std::unordered_map<std::string, std::string> lnm, lam, rnm, ram;
    auto pair_id = [](const std::string& a, const std::string& b) {
        return "(" + a + "," + b + ")";
    };
    for (const auto& x : X.nodes())
        for (const auto& y : Y.nodes()) {
            if (p.node_image(x) != q.node_image(y)) continue;
            nodes.push_back(pair_id(x, y));
            lnm.emplace(nodes.back(), x);
            rnm.emplace(nodes.back(), y);
        }
    for (const auto& a : X.arcs())
        for (const auto& b : Y.arcs()) {
            if (p.arc_image(a.id) != q.arc_image(b.id)) continue;
            arcs.push_back({pair_id(a.id, b.id), pair_id(a.src, b.src), pair_id(a.tgt, b.tgt)});
            lam.emplace(arcs.back().id, a.id);
            ram.emplace(arcs.back().id, b.id);
        }
    Graph prod("(" + X.name() + "*" + Y.name() + ")", std::move(nodes), std::move(arcs));
    GraphMorphism pr1("pr1", prod, X, std::move(lnm), std::move(lam));
    GraphMorphism pr2("pr2", prod, Y, std::move(rnm), std::move(ram));
    return {std::move(prod), std::move(pr1), std::move(pr2)};
}

bool is_separated(const Graph& g) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& a : g.arcs())
        if (!seen.emplace(a.src, a.tgt).second) return false;
    return true;
}

bool is_epic(const GraphMorphism& f) {
    std::set<std::string> nodes, arcs;
    for (const auto& n : f.domain().nodes()) nodes.insert(f.node_image(n));
    for (const auto& a : f.domain().arcs()) arcs.insert(f.arc_image(a.id));
    return nodes.size() == f.codomain().node_count() && arcs.size() == f.codomain().arc_count();
}

// ---------------------------------------------------------------------------
// Isomorphism search.
//
// Nodes of both graphs are colored by iterated refinement of
// (out-degree, in-degree) with neighbor color multisets; the shared color
// table guarantees that nodes with different local structure never get
// paired.  A straight backtracking search then extends a partial node
// bijection color class by color class, checking arc multiplicities between
// every assigned pair.  Arcs are matched positionally afterwards: within one
// (source, target) pair the parallel arcs are interchangeable, so sorting by
// id on both sides gives a concrete bijection.
// ---------------------------------------------------------------------------

namespace {

struct ColorData {
    std::vector<int> color;  // per node position
};

// One refinement pass over both graphs with a shared signature table.
// Returns the number of colors after the pass.
int refine_pass(const Graph& X, const Graph& Y, ColorData& cx, ColorData& cy) {
    using Sig = std::pair<int, std::pair<std::vector<int>, std::vector<int>>>;
    auto signature = [](const Graph& g, const ColorData& c, std::size_t v) {
        Sig s;
        s.first = c.color[v];
        const std::string& id = g.nodes()[v];
        for (std::size_t ai : g.out_arcs(id)) s.second.first.push_back(c.color[g.node_pos(g.arcs()[ai].tgt)]);
        for (std::size_t ai : g.in_arcs(id)) s.second.second.push_back(c.color[g.node_pos(g.arcs()[ai].src)]);
        std::sort(s.second.first.begin(), s.second.first.end());
        std::sort(s.second.second.begin(), s.second.second.end());
        return s;
    };
    std::map<Sig, int> table;
    auto assign = [&](const Graph& g, ColorData& c) {
        std::vector<int> next(g.node_count());
        for (std::size_t v = 0; v < g.node_count(); ++v) {
            Sig s = signature(g, c, v);
            auto it = table.find(s);
            if (it == table.end()) it = table.emplace(s, static_cast<int>(table.size())).first;
            next[v] = it->second;
        }
        for (std::size_t v = 0; v < g.node_count(); ++v) c.color[v] = next[v];
    };
    assign(X, cx);
    assign(Y, cy);
    return static_cast<int>(table.size());
}

// Multiplicity of arcs from node position u to node position v.
std::size_t multiplicity(const Graph& g, std::size_t u, std::size_t v) {
    std::size_t m = 0;
    for (std::size_t ai : g.out_arcs(g.nodes()[u]))
        if (g.node_pos(g.arcs()[ai].tgt) == v) ++m;
    return m;
}

}  // namespace

std::optional<GraphMorphism> graph_iso(const Graph& x, const Graph& y) {
    if (x.node_count() != y.node_count() || x.arc_count() != y.arc_count()) return std::nullopt;
    const std::size_t n = x.node_count();

    ColorData cx{std::vector<int>(n, 0)}, cy{std::vector<int>(n, 0)};
    int colors = 1;
    for (std::size_t round = 0; round < n + 1; ++round) {
        int next = refine_pass(x, y, cx, cy);
        if (next == colors) break;
        colors = next;
    }
    {
        std::vector<int> hx = cx.color, hy = cy.color;
        std::sort(hx.begin(), hx.end());
        std::sort(hy.begin(), hy.end());
        if (hx != hy) return std::nullopt;
    }

    // Backtracking over node positions of x in input order.
    std::vector<long> img(n, -1);   // x position -> y position
    std::vector<char> used(n, 0);

    auto consistent = [&](std::size_t u, std::size_t v) {
        if (cx.color[u] != cy.color[v]) return false;
        if (multiplicity(x, u, u) != multiplicity(y, v, v)) return false;
        for (std::size_t w = 0; w < n; ++w) {
            if (img[w] < 0 || w == u) continue;
            std::size_t vw = static_cast<std::size_t>(img[w]);
            if (multiplicity(x, u, w) != multiplicity(y, v, vw)) return false;
            if (multiplicity(x, w, u) != multiplicity(y, vw, v)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t u) -> bool {
        if (u == n) return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || !consistent(u, v)) continue;
            img[u] = static_cast<long>(v);
            used[v] = 1;
            if (self(self, u + 1)) return true;
            img[u] = -1;
            used[v] = 0;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    std::unordered_map<std::string, std::string> nm;
    for (std::size_t u = 0; u < n; ++u) nm.emplace(x.nodes()[u], y.nodes()[img[u]]);

    // Positional arc matching within each endpoint pair.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> bx, by;
    for (const auto& a : x.arcs()) bx[{a.src, a.tgt}].push_back(a.id);
    for (const auto& b : y.arcs()) by[{b.src, b.tgt}].push_back(b.id);
    std::unordered_map<std::string, std::string> am;
    for (auto& [key, ids] : bx) {
        auto it = by.find({nm.at(key.first), nm.at(key.second)});
        if (it == by.end() || it->second.size() != ids.size()) return std::nullopt;
        std::sort(ids.begin(), ids.end());
        std::sort(it->second.begin(), it->second.end());
        for (std::size_t i = 0; i < ids.size(); ++i) am.emplace(ids[i], it->second[i]);
    }
    if (am.size() != x.arc_count()) return std::nullopt;

    return GraphMorphism("iso", x, y, std::move(nm), std::move(am));
}

}  // namespace gph
