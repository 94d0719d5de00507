#include "regret/digraph.hpp"

#include <algorithm>
#include <deque>

namespace regret {

void Digraph::build(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  n = vertex_count;
  edges = edge_list;
  out.assign(n, {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) out[edges[e].first].push_back(e);
}

std::vector<int> strongly_connected_components(const Digraph& g, int& component_count) {
  // Iterative Tarjan.
  std::vector<int> comp(g.n, -1), low(g.n, 0), disc(g.n, -1), stack_vec;
  std::vector<bool> on_stack(g.n, false);
  int timer = 0;
  component_count = 0;
  struct Frame {
    int v;
    size_t edge_pos;
  };
  for (int root = 0; root < g.n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> call_stack{{root, 0}};
    disc[root] = low[root] = timer++;
    stack_vec.push_back(root);
    on_stack[root] = true;
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      if (f.edge_pos < g.out[f.v].size()) {
        int w = g.edges[g.out[f.v][f.edge_pos++]].second;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack_vec.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        call_stack.pop_back();
        if (!call_stack.empty()) low[call_stack.back().v] = std::min(low[call_stack.back().v], low[v]);
        if (low[v] == disc[v]) {
          while (true) {
            int w = stack_vec.back();
            stack_vec.pop_back();
            on_stack[w] = false;
            comp[w] = component_count;
            if (w == v) break;
          }
          ++component_count;
        }
      }
    }
  }
  return comp;
}

std::vector<bool> reachable_from(const Digraph& g, int from) {
  std::vector<bool> seen(g.n, false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out[v]) {
      int w = g.edges[e].second;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool shortest_path_to(const Digraph& g, int from, const std::vector<bool>& targets,
                      std::vector<int>& edge_path) {
  edge_path.clear();
  if (targets[from]) return true;
  std::vector<int> via_edge(g.n, -1);
  std::vector<bool> seen(g.n, false);
  std::deque<int> queue{from};
  seen[from] = true;
  int found = -1;
  while (!queue.empty() && found < 0) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out[v]) {
      int w = g.edges[e].second;
      if (seen[w]) continue;
      seen[w] = true;
      via_edge[w] = e;
      if (targets[w]) {
        found = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (found < 0) return false;
  for (int v = found; v != from;) {
    int e = via_edge[v];
    edge_path.push_back(e);
    v = g.edges[e].first;
  }
  std::reverse(edge_path.begin(), edge_path.end());
  return true;
}

}  // namespace regret
