/*
 * gph - command line front end.
 *
 * Exit codes: 0 for success / affirmative verdicts, 1 for negative verdicts
 * (validation failures, refutations), 2 for usage or input errors.  All
 * output is deterministic for a fixed input.
 */

#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "gph/equivalence.hpp"
#include "gph/fibration.hpp"
#include "gph/functors.hpp"
#include "gph/graph.hpp"
#include "gph/io.hpp"
#include "gph/walks.hpp"
#include "gph/zeta.hpp"

namespace {

int run_show(const std::string& file) {
    std::cout << gph::serialize_graph(gph::parse_graph_file(file));
    return 0;
}

int run_validate(const std::string& file) {
    gph::Graph g = gph::parse_graph_file(file, /*strict=*/false);
    auto bad = gph::validate(g);
    if (bad.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& b : bad) std::cout << b << "\n";
    return 1;
}

int run_arc_graph(const std::string& file, unsigned n) {
    std::cout << gph::serialize_graph(gph::arc_graph_n(gph::parse_graph_file(file), n));
    return 0;
}

int run_zeta(const std::string& file, unsigned degree) {
    gph::ZetaData z = gph::zeta_data(gph::parse_graph_file(file), degree);
    for (unsigned m = 1; m <= degree; ++m)
        std::cout << "c[" << m << "]=" << z.cycle_counts[m - 1].get_str() << "\n";
    std::cout << "det=" << gph::poly_string(z.det, "u", false) << "\n";
    for (unsigned m = 0; m <= degree; ++m)
        std::cout << "z[" << m << "]=" << z.series[m].get_num().get_str() << "/"
                  << z.series[m].get_den().get_str() << "\n";
    return 0;
}

int run_charpoly(const std::string& file) {
    gph::Graph g = gph::parse_graph_file(file);
    std::cout << "charpoly=" << gph::poly_string(gph::char_poly(gph::adjacency(g)), "x", true)
              << "\n";
    return 0;
}

int run_basal(const std::string& file, const std::string& strategy) {
    gph::RepStrategy s = gph::RepStrategy::FirstInInputOrder;
    if (strategy == "last")
        s = gph::RepStrategy::LastInInputOrder;
    else if (strategy != "first")
        throw std::runtime_error("unknown strategy '" + strategy + "' (want first or last)");
    gph::Graph g = gph::parse_graph_file(file);
    gph::Basing b = gph::basal_of(g, s);
    std::cout << gph::serialize_graph(b.basal) << "\n";
    for (const auto& v : g.nodes()) std::cout << "p[" << v << "]=" << b.p.node_image(v) << "\n";
    return 0;
}

int run_cover_check(const std::string& file) {
    gph::GraphMorphism f = gph::parse_morphism_file(file);
    auto bad = gph::validate_morphism(f);
    if (!bad.empty()) throw std::runtime_error(file + ": not a morphism: " + bad.front());
    bool covering = gph::is_covering(f);
    std::cout << "covering=" << (covering ? "true" : "false") << "\n";
    std::cout << "epic_covering=" << (covering && gph::is_epic(f) ? "true" : "false") << "\n";
    return covering ? 0 : 1;
}

int run_morphism_check(const std::string& file) {
    gph::GraphMorphism f = gph::parse_morphism_file(file);
    auto bad = gph::validate_morphism(f);
    if (bad.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& b : bad) std::cout << b << "\n";
    return 1;
}

int run_compare(const std::string& file_x, const std::string& file_y, unsigned degree) {
    gph::Graph x = gph::parse_graph_file(file_x);
    gph::Graph y = gph::parse_graph_file(file_y);
    gph::EquivalenceReport r = gph::compare_battery(x, y, degree);
    std::cout << "walkable_x_nodes=" << r.walkable_x_nodes << "\n"
              << "walkable_x_arcs=" << r.walkable_x_arcs << "\n"
              << "walkable_y_nodes=" << r.walkable_y_nodes << "\n"
              << "walkable_y_arcs=" << r.walkable_y_arcs << "\n";
    std::cout << "zeta=" << (r.zeta_same ? "equal" : "refuted") << "\n";
    if (!r.zeta_same) std::cout << "zeta_refuted_at=" << r.zeta_refuted_at << "\n";
    std::cout << "basal_x_nodes=" << r.basal_x_nodes << "\n"
              << "basal_x_arcs=" << r.basal_x_arcs << "\n"
              << "basal_y_nodes=" << r.basal_y_nodes << "\n"
              << "basal_y_arcs=" << r.basal_y_arcs << "\n";
    std::cout << "basal=" << (r.basal_same ? "isomorphic" : "refuted") << "\n";
    std::cout << "c_equivalent=" << (r.zeta_same ? "true" : "false") << "\n";
    if (r.refuted()) {
        std::cout << "verdict=refuted\n";
        return 1;
    }
    std::cout << "verdict=consistent-to-degree-" << degree << "\n";
    return 0;
}

int run_walkable(const std::string& file) {
    std::cout << gph::serialize_graph(
        gph::walkable_subgraph(gph::parse_graph_file(file)).graph);
    return 0;
}

int run_level_inverse(const std::string& file, unsigned n, std::size_t budget) {
    gph::GraphMorphism f = gph::parse_morphism_file(file);
    auto q = gph::find_level_inverse(f, n, budget);
    if (!q) {
        std::cout << "refuted\n";
        return 1;
    }
    std::cout << gph::serialize_morphism(*q);
    return 0;
}

int run_walk_dist(const std::string& graph_file, const std::string& walks_file) {
    auto host = std::make_shared<const gph::Graph>(gph::parse_graph_file(graph_file));
    auto specs = gph::parse_walk_specs_file(walks_file);
    if (specs.size() < 2)
        throw std::runtime_error(walks_file + ": need at least two walks to measure a distance");
    gph::EPWalk a = gph::bind_walk(specs[0], host);
    gph::EPWalk b = gph::bind_walk(specs[1], host);
    std::cout << "d=" << gph::distance(a, b).str() << "\n";
    return 0;
}

int run_block_code(const std::string& graph_file, const std::string& morphism_file,
                   const std::string& walks_file, unsigned n) {
    auto host = std::make_shared<const gph::Graph>(gph::parse_graph_file(graph_file));
    gph::GraphMorphism f = gph::parse_morphism_file(morphism_file);
    auto bad = gph::validate_morphism(f);
    if (!bad.empty()) throw std::runtime_error(morphism_file + ": not a morphism: " + bad.front());
    for (const auto& spec : gph::parse_walk_specs_file(walks_file)) {
        gph::EPWalk w = gph::bind_walk(spec, host);
        std::cout << gph::serialize_walk(gph::apply_block_code(f, n, w)) << "\n";
    }
    return 0;
}

int run_dot(const std::string& file) {
    std::cout << gph::to_dot(gph::parse_graph_file(file));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic dynamics of finite directed multigraphs"};
    app.require_subcommand(1);

    std::string file, file2, file3, strategy = "first";
    unsigned n = 1, degree = 8;
    std::size_t budget = 2000;

    CLI::App* show = app.add_subcommand("show", "parse a graph file and reprint it");
    show->add_option("file", file, "graph file")->required();

    CLI::App* val = app.add_subcommand("validate", "report invariant violations of a graph file");
    val->add_option("file", file, "graph file")->required();

    CLI::App* arc = app.add_subcommand("arc-graph", "iterated arc graph");
    arc->add_option("file", file, "graph file")->required();
    arc->add_option("-n", n, "iterations (default 1)");

    CLI::App* zeta = app.add_subcommand("zeta", "cycle counts, determinant and zeta series");
    zeta->add_option("file", file, "graph file")->required();
    zeta->add_option("--degree", degree, "series degree (default 8)");

    CLI::App* chp = app.add_subcommand("charpoly", "characteristic polynomial of the adjacency matrix");
    chp->add_option("file", file, "graph file")->required();

    CLI::App* basal = app.add_subcommand("basal", "basal quotient and projection");
    basal->add_option("file", file, "graph file")->required();
    basal->add_option("--strategy", strategy, "representative choice: first|last");

    CLI::App* cover = app.add_subcommand("cover-check", "is the morphism a covering?");
    cover->add_option("file", file, "morphism file")->required();

    CLI::App* mck = app.add_subcommand("morphism-check", "report morphism violations");
    mck->add_option("file", file, "morphism file")->required();

    CLI::App* cmp = app.add_subcommand("compare", "equivalence evidence battery for two graphs");
    cmp->add_option("file_x", file, "first graph file")->required();
    cmp->add_option("file_y", file2, "second graph file")->required();
    cmp->add_option("--degree", degree, "consistency bound (default 8)");

    CLI::App* wk = app.add_subcommand("walkable", "largest subgraph with everywhere-positive out-degree");
    wk->add_option("file", file, "graph file")->required();

    CLI::App* li = app.add_subcommand("level-inverse", "search an inverse up to source truncation");
    li->add_option("file", file, "morphism file")->required();
    li->add_option("-n", n, "truncation level (default 1)");
    li->add_option("--budget", budget, "node budget for the search (default 2000)");

    CLI::App* wd = app.add_subcommand("walk-dist", "ultrametric distance of two walks");
    wd->add_option("graph", file, "host graph file")->required();
    wd->add_option("walks", file2, "walk file with at least two walks")->required();

    CLI::App* bc = app.add_subcommand("block-code", "apply a sliding block code to walks");
    bc->add_option("graph", file, "host graph file")->required();
    bc->add_option("morphism", file2, "morphism out of the level-n arc graph")->required();
    bc->add_option("walks", file3, "walk file")->required();
    bc->add_option("-n", n, "window length minus one (default 1)");

    CLI::App* dot = app.add_subcommand("dot", "Graphviz rendering");
    dot->add_option("file", file, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed()) return run_show(file);
        if (val->parsed()) return run_validate(file);
        if (arc->parsed()) return run_arc_graph(file, n);
        if (zeta->parsed()) return run_zeta(file, degree);
        if (chp->parsed()) return run_charpoly(file);
        if (basal->parsed()) return run_basal(file, strategy);
        if (cover->parsed()) return run_cover_check(file);
        if (mck->parsed()) return run_morphism_check(file);
        if (cmp->parsed()) return run_compare(file, file2, degree);
        if (wk->parsed()) return run_walkable(file);
        if (li->parsed()) return run_level_inverse(file, n, budget);
        if (wd->parsed()) return run_walk_dist(file, file2);
        if (bc->parsed()) return run_block_code(file, file2, file3, n);
        if (dot->parsed()) return run_dot(file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
