#include "gph/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gph/fibration.hpp"
#include "gph/functors.hpp"
#include "gph/zeta.hpp"

namespace gph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

WalkableSubgraph walkable_subgraph(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool has_exit = false;
            for (std::size_t ai : g.out_arcs(g.nodes()[v]))
                if (alive[g.node_pos(g.arcs()[ai].tgt)]) {
                    has_exit = true;
                    break;
                }
            if (!has_exit) {
                alive[v] = 0;
                changed = true;
            }
        }
    }
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    std::unordered_map<std::string, std::string> nm, am;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) {
            nodes.push_back(g.nodes()[v]);
            nm.emplace(nodes.back(), nodes.back());
        }
    for (const auto& a : g.arcs())
        if (alive[g.node_pos(a.src)] && alive[g.node_pos(a.tgt)]) {
            arcs.push_back(a);
            am.emplace(a.id, a.id);
        }
    Graph w("w(" + g.name() + ")", std::move(nodes), std::move(arcs));
    GraphMorphism incl("incl", w, g, std::move(nm), std::move(am));
    return {std::move(w), std::move(incl)};
}

bool is_walkable(const Graph& g) {
    WalkableSubgraph w = walkable_subgraph(g);
    return w.graph.node_count() == g.node_count() && w.graph.arc_count() == g.arc_count();
}

bool homotopic(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        fail("homotopic: morphisms are not parallel");
    WalkableSubgraph w = walkable_subgraph(f.domain());
    for (const auto& v : w.graph.nodes())
        if (f.node_image(v) != g.node_image(v)) return false;
    for (const auto& a : w.graph.arcs())
        if (f.arc_image(a.id) != g.arc_image(a.id)) return false;
    return true;
}

std::optional<GraphMorphism> find_level_inverse(const GraphMorphism& f, unsigned n,
                                                std::size_t node_budget) {
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    Graph ay = arc_graph_n(Y, n);
    if (ay.node_count() > node_budget)
        throw std::runtime_error("find_level_inverse: level-" + std::to_string(n) +
                                 " arc graph has " + std::to_string(ay.node_count()) +
                                 " nodes, over the budget of " + std::to_string(node_budget));
    GraphMorphism anf = arc_graph_of_morphism(f, n);
    GraphMorphism sx = source_truncation(X, n, 0);
    GraphMorphism sy = source_truncation(Y, n, 0);
    const Graph& ax = anf.domain();

    const std::size_t ny = ay.node_count();

    // Forced node values from q(anf(u)) = sx(u).
    std::vector<std::string> forced_node(ny);
    for (const auto& u : ax.nodes()) {
        std::size_t v = ay.node_pos(anf.node_image(u));
        const std::string& want = sx.node_image(u);
        if (forced_node[v].empty())
            forced_node[v] = want;
        else if (forced_node[v] != want)
            return std::nullopt;
    }
    // Forced arc values from q(anf(r)) = sx(r).
    std::unordered_map<std::string, std::string> forced_arc;
    for (const auto& r : ax.arcs()) {
        auto [it, fresh] = forced_arc.emplace(anf.arc_image(r.id), sx.arc_image(r.id));
        if (!fresh && it->second != sx.arc_image(r.id)) return std::nullopt;
    }

    // Candidates per node from f(q(v)) = sy(v).
    std::vector<std::vector<std::string>> cands(ny);
    for (std::size_t v = 0; v < ny; ++v) {
        const std::string& target = sy.node_image(ay.nodes()[v]);
        if (!forced_node[v].empty()) {
            if (f.node_image(forced_node[v]) != target) return std::nullopt;
            cands[v] = {forced_node[v]};
        } else {
            for (const auto& x : X.nodes())
                if (f.node_image(x) == target) cands[v].push_back(x);
            if (cands[v].empty()) return std::nullopt;
        }
    }

    // Arc fibers of f over each codomain arc, in input order.
    std::unordered_map<std::string, std::vector<const Arc*>> fiber;
    for (const auto& a : X.arcs()) fiber[f.arc_image(a.id)].push_back(&a);

    std::vector<std::string> assign(ny);

    // An arc b of ay is satisfiable under the current (possibly partial)
    // node assignment iff some arc of X in the fiber over sy(b) has matching
    // endpoints; a forced arc must itself match.
    auto arc_choice = [&](const Arc& b) -> const Arc* {
        const std::string& qs = assign[ay.node_pos(b.src)];
        const std::string& qt = assign[ay.node_pos(b.tgt)];
        auto forced = forced_arc.find(b.id);
        if (forced != forced_arc.end()) {
            const Arc& a = X.arc(forced->second);
            if (f.arc_image(a.id) != sy.arc_image(b.id)) return nullptr;
            if ((!qs.empty() && a.src != qs) || (!qt.empty() && a.tgt != qt)) return nullptr;
            return &a;
        }
        auto it = fiber.find(sy.arc_image(b.id));
        if (it == fiber.end()) return nullptr;
        for (const Arc* a : it->second) {
            if (!qs.empty() && a->src != qs) continue;
            if (!qt.empty() && a->tgt != qt) continue;
            return a;
        }
        return nullptr;
    };

    auto search = [&](auto&& self, std::size_t v) -> bool {
        if (v == ny) return true;
        for (const auto& x : cands[v]) {
            assign[v] = x;
            bool ok = true;
            // Check arcs whose endpoints are now both assigned.
            for (std::size_t ai : ay.out_arcs(ay.nodes()[v]))
                if (!assign[ay.node_pos(ay.arcs()[ai].tgt)].empty() &&
                    arc_choice(ay.arcs()[ai]) == nullptr) {
                    ok = false;
                    break;
                }
            if (ok)
                for (std::size_t ai : ay.in_arcs(ay.nodes()[v]))
                    if (!assign[ay.node_pos(ay.arcs()[ai].src)].empty() &&
                        arc_choice(ay.arcs()[ai]) == nullptr) {
                        ok = false;
                        break;
                    }
            if (ok && self(self, v + 1)) return true;
            assign[v].clear();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    std::unordered_map<std::string, std::string> nm, am;
    for (std::size_t v = 0; v < ny; ++v) nm.emplace(ay.nodes()[v], assign[v]);
    for (const auto& b : ay.arcs()) {
        const Arc* a = arc_choice(b);
        if (!a) throw std::logic_error("find_level_inverse: arc lost after node search");
        am.emplace(b.id, a->id);
    }
    GraphMorphism q("q", std::move(ay), X, std::move(nm), std::move(am));
    // Defensive: the witness must actually satisfy both triangles.
    if (!morphisms_equal(compose(q, anf), sx) || !morphisms_equal(compose(f, q), sy))
        throw std::logic_error("find_level_inverse: witness fails a triangle");
    return q;
}

GraphMorphism compose_level_arrows(const GraphMorphism& f, const GraphMorphism& g, unsigned m) {
    if (g.domain() != arc_graph_n(f.codomain(), m))
        fail("compose_level_arrows: domain of '" + g.name() + "' is not the level-" +
             std::to_string(m) + " arc graph of codomain of '" + f.name() + "'");
    return compose(g, arc_graph_of_morphism(f, m));
}

namespace {

// All based closed arc sequences of length m, each as (start node, arcs).
std::vector<std::pair<std::string, std::vector<std::string>>> closed_walks(const Graph& g,
                                                                           unsigned m) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    std::vector<std::string> seq;
    auto dfs = [&](auto&& self, const std::string& base, const std::string& at,
                   unsigned left) -> void {
        if (left == 0) {
            if (at == base) out.emplace_back(base, seq);
            return;
        }
        for (std::size_t ai : g.out_arcs(at)) {
            seq.push_back(g.arcs()[ai].id);
            self(self, base, g.arcs()[ai].tgt, left - 1);
            seq.pop_back();
        }
    };
    for (const auto& n : g.nodes()) dfs(dfs, n, n, m);
    return out;
}

std::string join_ids(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i];
    }
    return s;
}

}  // namespace

EvidenceVerdict n_equivalence_evidence(const GraphMorphism& f, unsigned bound) {
    EvidenceVerdict v;
    v.bound = bound;
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    if (is_walkable(X) && !is_covering(f)) {
        v.kind = EvidenceVerdict::Kind::CoveringFailure;
        for (const auto& x : X.nodes()) {
            std::set<std::string> images;
            bool bad = X.in_arcs(x).size() != Y.in_arcs(f.node_image(x)).size();
            for (std::size_t ai : X.in_arcs(x))
                if (!images.insert(f.arc_image(X.arcs()[ai].id)).second) bad = true;
            if (bad) {
                v.witness = "in-arcs of node '" + x + "' do not map bijectively";
                break;
            }
        }
        return v;
    }
    for (unsigned m = 1; m <= bound; ++m) {
        auto walks = closed_walks(X, m);
        std::map<std::pair<std::string, std::vector<std::string>>, std::size_t> images;
        for (std::size_t i = 0; i < walks.size(); ++i) {
            std::pair<std::string, std::vector<std::string>> img;
            img.first = f.node_image(walks[i].first);
            for (const auto& a : walks[i].second) img.second.push_back(f.arc_image(a));
            auto [it, fresh] = images.emplace(std::move(img), i);
            if (!fresh) {
                v.kind = EvidenceVerdict::Kind::NotInjective;
                v.refuted_at = m;
                v.witness = "cycles [" + join_ids(walks[it->second].second) + "] and [" +
                            join_ids(walks[i].second) + "] share their image";
                return v;
            }
        }
        mpz_class cy = cycle_count(Y, m);
        if (mpz_class(static_cast<unsigned long>(walks.size())) != cy) {
            v.kind = EvidenceVerdict::Kind::CycleCountMismatch;
            v.refuted_at = m;
            v.witness = "length-" + std::to_string(m) + " cycles: " +
                        std::to_string(walks.size()) + " upstream vs " + cy.get_str() +
                        " downstream";
            return v;
        }
    }
    return v;
}

EquivalenceReport compare_battery(const Graph& x, const Graph& y, unsigned degree) {
    EquivalenceReport r;
    r.degree = degree;
    WalkableSubgraph wx = walkable_subgraph(x);
    WalkableSubgraph wy = walkable_subgraph(y);
    r.walkable_x_nodes = wx.graph.node_count();
    r.walkable_x_arcs = wx.graph.arc_count();
    r.walkable_y_nodes = wy.graph.node_count();
    r.walkable_y_arcs = wy.graph.arc_count();
    r.zeta_same = zeta_equal(x, y);
    if (!r.zeta_same) {
        // The fingerprints differ, so some cycle count differs no later than
        // the larger node count.
        unsigned limit = static_cast<unsigned>(std::max(x.node_count(), y.node_count()));
        limit = std::max(limit, degree);
        ZetaData zx = zeta_data(x, limit);
        ZetaData zy = zeta_data(y, limit);
        for (unsigned m = 1; m <= limit; ++m)
            if (zx.cycle_counts[m - 1] != zy.cycle_counts[m - 1]) {
                r.zeta_refuted_at = m;
                break;
            }
        if (r.zeta_refuted_at == 0)
            throw std::logic_error("compare_battery: fingerprints differ but counts agree");
    }
    Basing bx = basal_of(wx.graph);
    Basing by = basal_of(wy.graph);
    r.basal_x_nodes = bx.basal.node_count();
    r.basal_x_arcs = bx.basal.arc_count();
    r.basal_y_nodes = by.basal.node_count();
    r.basal_y_arcs = by.basal.arc_count();
    r.basal_same = graph_iso(bx.basal, by.basal).has_value();
    return r;
}

}  // namespace gph
