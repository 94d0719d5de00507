#include "regret/arena.hpp"

#include <fstream>
#include <sstream>

namespace regret {

namespace {

// Splits a line into whitespace-separated tokens, dropping `#` comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (!tok.empty() && tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

int Arena::find_vertex(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_names[i] == name) return i;
  return -1;
}

void Arena::finalize() {
  out.assign(vertex_names.size(), {});
  max_abs_weight = 0;
  for (int e = 0; e < edge_count(); ++e) {
    const ArenaEdge& edge = edges[e];
    if (edge.src < 0 || edge.src >= vertex_count() || edge.dst < 0 ||
        edge.dst >= vertex_count())
      throw validation_error("edge endpoint out of range");
    out[edge.src].push_back(e);
    Rational a = rational_abs(edge.weight);
    if (a > max_abs_weight) max_abs_weight = a;
  }
  if (initial < 0 || initial >= vertex_count())
    throw validation_error("missing or unknown initial vertex");
  for (int v = 0; v < vertex_count(); ++v)
    if (out[v].empty())
      throw validation_error("vertex '" + vertex_names[v] + "' has no outgoing edge (arena must be total)");
}

Arena parse_arena(std::istream& in) {
  Arena g;
  bool saw_header = false;
  bool saw_init = false;
  std::string init_name;
  std::string line;
  int line_no = 0;
  struct PendingEdge {
    std::string src, dst, weight, label;
    int line_no;
  };
  std::vector<PendingEdge> pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (!saw_header) {
      if (tok.size() != 1 || tok[0] != "arena") fail(line_no, "expected 'arena' header");
      saw_header = true;
      continue;
    }
    if (tok[0] == "vertex") {
      if (tok.size() != 3) fail(line_no, "expected 'vertex <id> eve|adam'");
      if (g.find_vertex(tok[1]) >= 0) fail(line_no, "duplicate vertex '" + tok[1] + "'");
      if (tok[2] != "eve" && tok[2] != "adam") fail(line_no, "owner must be 'eve' or 'adam'");
      g.vertex_names.push_back(tok[1]);
      g.eve_owned.push_back(tok[2] == "eve");
    } else if (tok[0] == "init") {
      if (tok.size() != 2) fail(line_no, "expected 'init <id>'");
      if (saw_init) fail(line_no, "duplicate init line");
      saw_init = true;
      init_name = tok[1];
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 5) fail(line_no, "expected 'edge <src> <dst> <p[/q]> [<label>]'");
      pending.push_back({tok[1], tok[2], tok[3], tok.size() == 5 ? tok[4] : "", line_no});
    } else {
      fail(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!saw_header) throw parse_error("missing 'arena' header");
  if (!saw_init) throw parse_error("missing 'init' line");
  for (const PendingEdge& pe : pending) {
    ArenaEdge e;
    e.src = g.find_vertex(pe.src);
    e.dst = g.find_vertex(pe.dst);
    if (e.src < 0) fail(pe.line_no, "unknown edge source '" + pe.src + "'");
    if (e.dst < 0) fail(pe.line_no, "unknown edge target '" + pe.dst + "'");
    try {
      e.weight = parse_rational(pe.weight);
    } catch (const parse_error& err) {
      fail(pe.line_no, err.what());
    }
    e.label = pe.label;
    g.edges.push_back(e);
  }
  g.initial = g.find_vertex(init_name);
  if (g.initial < 0) throw parse_error("unknown initial vertex '" + init_name + "'");
  g.finalize();
  return g;
}

Arena parse_arena_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_arena(ss);
}

Arena load_arena_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open arena file: " + path);
  return parse_arena(f);
}

std::string serialize_arena(const Arena& g) {
  std::ostringstream out;
  out << "arena\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.vertex_names[v] << ' ' << (g.eve_owned[v] ? "eve" : "adam") << '\n';
  out << "init " << g.vertex_names[g.initial] << '\n';
  for (const ArenaEdge& e : g.edges) {
    out << "edge " << g.vertex_names[e.src] << ' ' << g.vertex_names[e.dst] << ' '
        << to_string(e.weight);
    if (!e.label.empty()) out << ' ' << e.label;
    out << '\n';
  }
  return out.str();
}

}  // namespace regret
