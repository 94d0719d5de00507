#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regret/rational.hpp"

namespace regret {

struct ArenaEdge {
  int src = -1;
  int dst = -1;
  Rational weight;
  std::string label;  // empty when absent
};

// Finite edge-weighted game graph with vertex ownership and an initial
// vertex. Vertices are indexed in declaration order; that order is the
// canonical one and every iteration in the suite derives from it.
// Immutable after construction/validation.
struct Arena {
  std::vector<std::string> vertex_names;
  std::vector<bool> eve_owned;           // per vertex
  std::vector<ArenaEdge> edges;          // declaration order
  int initial = -1;
  Rational max_abs_weight;               // W

  std::vector<std::vector<int>> out;     // vertex -> edge indices, declaration order

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int find_vertex(const std::string& name) const;  // -1 when absent

  // Recomputes adjacency and W, then checks all structural invariants
  // (totality, endpoint validity, initial vertex). Throws validation_error.
  void finalize();
};

Arena parse_arena(std::istream& in);
Arena parse_arena_string(const std::string& text);
Arena load_arena_file(const std::string& path);

std::string serialize_arena(const Arena& g);

}  // namespace regret
