/*
 * io.hpp - the text formats.
 *
 * Graph files:           graph <name>
 *                        node <id>
 *                        arc <id> <source> <target>
 *
 * Morphism files: one or two graph blocks followed by
 *                        morphism <name> : <domain> -> <codomain>
 *                        node <id> => <id>
 *                        arc <id> => <id>
 *
 * Walk files: one walk per line,
 *                        walk <graph> pre=[a1,a2,...] per=[b1,b2,...]
 *
 * Ids are whitespace-free tokens; '#' starts a comment.  Commas inside
 * bracket lists only separate at parenthesis depth zero, so ids like "(0,1)"
 * survive.  Serializers emit files the parsers accept, in input order, so
 * output is stable and diffable.
 */

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gph/graph.hpp"
#include "gph/walks.hpp"

namespace gph {

// Carries "origin:line: message".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// strict = true rejects duplicate ids and dangling endpoints at parse time;
// strict = false builds whatever is there so validate() can report on it.
Graph parse_graph_text(const std::string& text, const std::string& origin, bool strict = true);
Graph parse_graph_file(const std::string& path, bool strict = true);

GraphMorphism parse_morphism_text(const std::string& text, const std::string& origin);
GraphMorphism parse_morphism_file(const std::string& path);

struct WalkSpec {
    std::string graph_name;
    std::vector<std::string> pre;
    std::vector<std::string> per;
};

std::vector<WalkSpec> parse_walk_specs_text(const std::string& text, const std::string& origin);
std::vector<WalkSpec> parse_walk_specs_file(const std::string& path);

// Checks the named graph matches and builds the walk (which validates
// composability).
EPWalk bind_walk(const WalkSpec& spec, std::shared_ptr<const Graph> host);

std::string serialize_graph(const Graph& g);
std::string serialize_morphism(const GraphMorphism& f);
std::string serialize_walk(const EPWalk& w);

// Graphviz rendering, nodes then arcs in input order.
std::string to_dot(const Graph& g);

std::string read_file(const std::string& path);

}  // namespace gph
