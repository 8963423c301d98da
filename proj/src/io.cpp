#include "latdual/io.hpp"

#include <fstream>
#include <sstream>

namespace latdual {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.back() != ':')
      fail(ErrorKind::Parse, "line " + std::to_string(number) + ": expected 'key:' prefix");
    Line line{number, head.substr(0, head.size() - 1), {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void line_fail(const Line& l, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(l.number) + ": " + msg);
}

UniversePtr collect_universe(const std::vector<Line>& lines, const std::string& head_key,
                             bool allow_reserved) {
  const Line* head = nullptr;
  for (const auto& l : lines) {
    if (l.key != head_key) continue;
    if (head) line_fail(l, "repeated '" + head_key + ":' line");
    head = &l;
  }
  if (!head) fail(ErrorKind::Parse, "missing '" + head_key + ":' line");
  return make_universe(head->tokens, allow_reserved);
}

}  // namespace

Poset parse_poset(const std::string& text, bool allow_reserved) {
  auto lines = split_lines(text);
  auto u = collect_universe(lines, "elements", allow_reserved);
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (const auto& l : lines) {
    if (l.key == "elements") continue;
    if (l.key != "less") line_fail(l, "unknown key '" + l.key + ":'");
    if (l.tokens.size() != 2) line_fail(l, "'less:' takes exactly two elements");
    rels.emplace_back(u->index_of(l.tokens[0]), u->index_of(l.tokens[1]));
  }
  return Poset::build(std::move(u), rels);
}

Hypergraph parse_hypergraph(const std::string& text, bool allow_reserved,
                            std::vector<std::string>* warnings) {
  auto lines = split_lines(text);
  auto u = collect_universe(lines, "vertices", allow_reserved);
  SetFamily edges;
  for (const auto& l : lines) {
    if (l.key == "vertices") continue;
    if (l.key != "edge") line_fail(l, "unknown key '" + l.key + ":'");
    if (l.tokens.empty()) line_fail(l, "empty hyperedge");
    Bits e = u->set_of(l.tokens);
    if (family_contains(edges, e)) {
      if (warnings)
        warnings->push_back("line " + std::to_string(l.number) +
                            ": duplicate edge collapsed: " + u->format_set(e));
      continue;
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(u), std::move(edges));
}

Graph parse_graph(const std::string& text, bool allow_reserved) {
  auto lines = split_lines(text);
  auto u = collect_universe(lines, "vertices", allow_reserved);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& l : lines) {
    if (l.key == "vertices") continue;
    if (l.key != "edge") line_fail(l, "unknown key '" + l.key + ":'");
    if (l.tokens.size() != 2) line_fail(l, "'edge:' takes exactly two vertices");
    auto a = u->index_of(l.tokens[0]);
    auto b = u->index_of(l.tokens[1]);
    if (a == b) line_fail(l, "loop edge on " + l.tokens[0]);
    edges.emplace_back(a, b);
  }
  return Graph(std::move(u), edges);
}

SetFamily parse_family(const std::string& text, const Universe& u) {
  auto lines = split_lines(text);
  SetFamily fam;
  for (const auto& l : lines) {
    if (l.key != "set") line_fail(l, "unknown key '" + l.key + ":'");
    fam.push_back(u.set_of(l.tokens));
  }
  canonicalize_family(fam);
  return fam;
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& t : p.universe().tokens()) out << ' ' << t;
  out << '\n';
  for (auto [a, b] : p.cover_pairs())
    out << "less: " << p.universe().token(a) << ' ' << p.universe().token(b) << '\n';
  return out.str();
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& t : h.universe().tokens()) out << ' ' << t;
  out << '\n';
  for (const auto& e : h.edges()) out << "edge: " << h.universe().format_set(e) << '\n';
  return out.str();
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& t : g.universe().tokens()) out << ' ' << t;
  out << '\n';
  for (auto [a, b] : g.edge_list())
    out << "edge: " << g.universe().token(a) << ' ' << g.universe().token(b) << '\n';
  return out.str();
}

std::string format_family(const SetFamily& fam, const Universe& u) {
  SetFamily sorted = fam;
  canonicalize_family(sorted);
  std::ostringstream out;
  for (const auto& s : sorted) {
    out << "set:";
    std::string body = u.format_set(s);
    if (!body.empty()) out << ' ' << body;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write file: " + path);
  out << content;
}

}  // namespace latdual
