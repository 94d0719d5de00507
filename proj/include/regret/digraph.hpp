#pragma once

#include <vector>

namespace regret {

// Light adjacency view used by the solvers: edges are (src, dst) pairs
// indexed by position, vertices 0..n-1.
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> out;  // vertex -> edge indices

  void build(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);
};

// Tarjan strongly connected components; returns component id per vertex,
// ids in reverse topological order (0 is a sink component).
std::vector<int> strongly_connected_components(const Digraph& g, int& component_count);

// Vertices reachable from `from` following edges forward.
std::vector<bool> reachable_from(const Digraph& g, int from);

// Shortest (fewest edges) path from `from` to any vertex in `targets`;
// returns the edge sequence, empty if from is already a target, no
// value if unreachable.
bool shortest_path_to(const Digraph& g, int from, const std::vector<bool>& targets,
                      std::vector<int>& edge_path);

}  // namespace regret
