#pragma once

#include <string>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/graph.hpp"
#include "latdual/hypergraph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Text formats.  '#' starts a comment, blank lines are skipped, line order is
// irrelevant.  Posets: one "elements:" line plus "less: a b" lines.
// Hypergraphs: "vertices:" plus "edge: a b c" lines.  Graphs: "vertices:"
// plus two-endpoint "edge: u v" lines.  Families: "set: a b c" lines over an
// ambient universe (a bare "set:" is the empty set).
// Reserved '_'-prefixed tokens are rejected unless allow_reserved is set, so
// machine-written instances can be re-read deliberately but not by accident.

Poset parse_poset(const std::string& text, bool allow_reserved = false);
Hypergraph parse_hypergraph(const std::string& text, bool allow_reserved = false,
                            std::vector<std::string>* warnings = nullptr);
Graph parse_graph(const std::string& text, bool allow_reserved = false);
SetFamily parse_family(const std::string& text, const Universe& u);

std::string format_poset(const Poset& p);
std::string format_hypergraph(const Hypergraph& h);
std::string format_graph(const Graph& g);
std::string format_family(const SetFamily& fam, const Universe& u);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace latdual
