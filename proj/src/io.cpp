#include "gph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gph {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

// Comment-stripped whitespace tokens of one line.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

struct Line {
    std::size_t nr;
    std::vector<std::string> toks;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    std::size_t nr = 0;
    while (std::getline(in, line)) {
        ++nr;
        auto toks = tokenize(line);
        if (!toks.empty()) out.push_back({nr, std::move(toks)});
    }
    return out;
}

// Split "a,b,c" at parenthesis depth zero; empty input gives no pieces.
std::vector<std::string> split_ids(const std::string& origin, std::size_t nr,
                                   const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            if (cur.empty()) parse_fail(origin, nr, "empty id in list");
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    else if (!s.empty())
        parse_fail(origin, nr, "empty id in list");
    return out;
}

// "pre=[...]" -> the ids inside the brackets.
std::vector<std::string> bracket_list(const std::string& origin, std::size_t nr,
                                      const std::string& tok, const std::string& key) {
    std::string want = key + "=[";
    if (tok.rfind(want, 0) != 0 || tok.back() != ']')
        parse_fail(origin, nr, "expected " + key + "=[...], got '" + tok + "'");
    return split_ids(origin, nr, tok.substr(want.size(), tok.size() - want.size() - 1));
}

}  // namespace

Graph parse_graph_text(const std::string& text, const std::string& origin, bool strict) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError(origin + ":1: empty input");
    std::string name;
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
    std::set<std::string> node_ids, arc_ids;
    bool have_header = false;
    for (const auto& l : lines) {
        const auto& t = l.toks;
        if (t[0] == "graph") {
            if (have_header) parse_fail(origin, l.nr, "more than one graph in file");
            if (t.size() != 2) parse_fail(origin, l.nr, "expected: graph <name>");
            name = t[1];
            have_header = true;
        } else if (t[0] == "node") {
            if (!have_header) parse_fail(origin, l.nr, "node before graph header");
            if (t.size() != 2) parse_fail(origin, l.nr, "expected: node <id>");
            if (strict && !node_ids.insert(t[1]).second)
                parse_fail(origin, l.nr, "duplicate node '" + t[1] + "'");
            nodes.push_back(t[1]);
        } else if (t[0] == "arc") {
            if (!have_header) parse_fail(origin, l.nr, "arc before graph header");
            if (t.size() != 4) parse_fail(origin, l.nr, "expected: arc <id> <source> <target>");
            if (strict) {
                if (!arc_ids.insert(t[1]).second)
                    parse_fail(origin, l.nr, "duplicate arc '" + t[1] + "'");
                if (!node_ids.count(t[2]))
                    parse_fail(origin, l.nr, "unknown source node '" + t[2] + "'");
                if (!node_ids.count(t[3]))
                    parse_fail(origin, l.nr, "unknown target node '" + t[3] + "'");
            }
            arcs.push_back({t[1], t[2], t[3]});
        } else {
            parse_fail(origin, l.nr, "unexpected directive '" + t[0] + "' in a graph file");
        }
    }
    if (!have_header) parse_fail(origin, lines.front().nr, "missing graph header");
    return Graph(std::move(name), std::move(nodes), std::move(arcs));
}

GraphMorphism parse_morphism_text(const std::string& text, const std::string& origin) {
    auto lines = logical_lines(text);
    std::vector<std::pair<std::string, std::string>> graph_chunks;  // (name, text)
    std::string mname, dname, cname;
    std::unordered_map<std::string, std::string> node_map, arc_map;
    enum { Outside, InGraph, InMorphism } state = Outside;
    std::string cur_text;
    std::string cur_name;
    auto flush_graph = [&]() {
        if (state == InGraph) graph_chunks.emplace_back(cur_name, cur_text);
        cur_text.clear();
    };
    bool have_morphism = false;
    for (const auto& l : lines) {
        const auto& t = l.toks;
        if (t[0] == "graph") {
            if (t.size() != 2) parse_fail(origin, l.nr, "expected: graph <name>");
            flush_graph();
            state = InGraph;
            cur_name = t[1];
            cur_text = "graph " + t[1] + "\n";
        } else if (t[0] == "morphism") {
            if (have_morphism) parse_fail(origin, l.nr, "more than one morphism in file");
            if (t.size() != 6 || t[2] != ":" || t[4] != "->")
                parse_fail(origin, l.nr, "expected: morphism <name> : <domain> -> <codomain>");
            flush_graph();
            state = InMorphism;
            have_morphism = true;
            mname = t[1];
            dname = t[3];
            cname = t[5];
        } else if (t[0] == "node" || t[0] == "arc") {
            if (state == InGraph) {
                for (const auto& tok : t) cur_text += tok + " ";
                cur_text += "\n";
            } else if (state == InMorphism) {
                if (t.size() != 4 || t[2] != "=>")
                    parse_fail(origin, l.nr, "expected: " + t[0] + " <id> => <id>");
                auto& map = (t[0] == "node") ? node_map : arc_map;
                if (!map.emplace(t[1], t[3]).second)
                    parse_fail(origin, l.nr, "duplicate image for " + t[0] + " '" + t[1] + "'");
            } else {
                parse_fail(origin, l.nr, "'" + t[0] + "' before any graph header");
            }
        } else {
            parse_fail(origin, l.nr, "unexpected directive '" + t[0] + "'");
        }
    }
    flush_graph();
    if (!have_morphism) throw ParseError(origin + ": no morphism block");
    std::optional<Graph> dom, cod;
    std::set<std::string> seen_names;
    for (const auto& [gname, gtext] : graph_chunks) {
        if (!seen_names.insert(gname).second)
            throw ParseError(origin + ": duplicate graph name '" + gname + "'");
        Graph g = parse_graph_text(gtext, origin + "(" + gname + ")");
        if (gname == dname) dom = g;
        if (gname == cname) cod = std::move(g);
    }
    if (!dom) throw ParseError(origin + ": domain graph '" + dname + "' not found");
    if (!cod) throw ParseError(origin + ": codomain graph '" + cname + "' not found");
    return GraphMorphism(mname, std::move(*dom), std::move(*cod), std::move(node_map),
                         std::move(arc_map));
}

std::vector<WalkSpec> parse_walk_specs_text(const std::string& text, const std::string& origin) {
    std::vector<WalkSpec> out;
    for (const auto& l : logical_lines(text)) {
        const auto& t = l.toks;
        if (t[0] != "walk") parse_fail(origin, l.nr, "expected: walk <graph> pre=[...] per=[...]");
        if (t.size() != 4) parse_fail(origin, l.nr, "expected: walk <graph> pre=[...] per=[...]");
        WalkSpec w;
        w.graph_name = t[1];
        w.pre = bracket_list(origin, l.nr, t[2], "pre");
        w.per = bracket_list(origin, l.nr, t[3], "per");
        out.push_back(std::move(w));
    }
    if (out.empty()) throw ParseError(origin + ":1: no walks in file");
    return out;
}

EPWalk bind_walk(const WalkSpec& spec, std::shared_ptr<const Graph> host) {
    if (!host) throw std::invalid_argument("bind_walk: missing host graph");
    if (spec.graph_name != host->name())
        throw std::invalid_argument("bind_walk: walk names graph '" + spec.graph_name +
                                    "' but host is '" + host->name() + "'");
    return EPWalk(std::move(host), spec.pre, spec.per);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph parse_graph_file(const std::string& path, bool strict) {
    return parse_graph_text(read_file(path), path, strict);
}

GraphMorphism parse_morphism_file(const std::string& path) {
    return parse_morphism_text(read_file(path), path);
}

std::vector<WalkSpec> parse_walk_specs_file(const std::string& path) {
    return parse_walk_specs_text(read_file(path), path);
}

namespace {

std::string graph_label(const Graph& g) { return g.name().empty() ? "_" : g.name(); }

}  // namespace

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + graph_label(g) + "\n";
    for (const auto& n : g.nodes()) out += "node " + n + "\n";
    for (const auto& a : g.arcs()) out += "arc " + a.id + " " + a.src + " " + a.tgt + "\n";
    return out;
}

std::string serialize_morphism(const GraphMorphism& f) {
    const Graph& X = f.domain();
    const Graph& Y = f.codomain();
    if (graph_label(X) == graph_label(Y) && X != Y)
        throw std::runtime_error("serialize_morphism: domain and codomain share the name '" +
                                 graph_label(X) + "' but differ");
    std::string out = serialize_graph(X);
    if (X != Y || graph_label(X) != graph_label(Y)) {
        out += "\n";
        out += serialize_graph(Y);
    }
    out += "\nmorphism " + (f.name().empty() ? "f" : f.name()) + " : " + graph_label(X) + " -> " +
           graph_label(Y) + "\n";
    for (const auto& n : X.nodes()) out += "node " + n + " => " + f.node_image(n) + "\n";
    for (const auto& a : X.arcs()) out += "arc " + a.id + " => " + f.arc_image(a.id) + "\n";
    return out;
}

std::string serialize_walk(const EPWalk& w) {
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i];
        }
        return s;
    };
    return "walk " + graph_label(w.host()) + " pre=[" + join(w.pre()) + "] per=[" + join(w.per()) +
           "]";
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::string out = "digraph " + dot_quote(graph_label(g)) + " {\n";
    for (const auto& n : g.nodes()) out += "  " + dot_quote(n) + ";\n";
    for (const auto& a : g.arcs())
        out += "  " + dot_quote(a.src) + " -> " + dot_quote(a.tgt) +
               " [label=" + dot_quote(a.id) + "];\n";
    out += "}\n";
    return out;
}

}  // namespace gph
