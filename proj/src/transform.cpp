#include "regret/transform.hpp"

#include <map>
#include <utility>

namespace regret {

namespace {

Rational combine(ExtremumMode mode, const Rational& recorded, const Rational& w) {
  if (mode == ExtremumMode::Min) return recorded < w ? recorded : w;
  return recorded > w ? recorded : w;
}

}  // namespace

Arena record_extremum_transform(const Arena& g, ExtremumMode mode) {
  Arena out;
  Rational start = mode == ExtremumMode::Min ? g.max_abs_weight : Rational(-g.max_abs_weight);
  std::map<std::pair<int, Rational>, int> index;  // (vertex, recorded) -> new id
  std::vector<std::pair<int, Rational>> worklist;

  auto intern = [&](int v, const Rational& x) {
    auto it = index.find({v, x});
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.vertex_names.size());
    index[{v, x}] = id;
    out.vertex_names.push_back(g.vertex_names[v] + "@" + to_string(x));
    out.eve_owned.push_back(g.eve_owned[v]);
    worklist.emplace_back(v, x);
    return id;
  };

  out.initial = intern(g.initial, start);
  for (size_t i = 0; i < worklist.size(); ++i) {
    auto [v, x] = worklist[i];
    int src_id = index[{v, x}];
    for (int e : g.out[v]) {
      const ArenaEdge& edge = g.edges[e];
      Rational m = combine(mode, x, edge.weight);
      int dst_id = intern(edge.dst, m);
      ArenaEdge ne;
      ne.src = src_id;
      ne.dst = dst_id;
      ne.weight = m;
      ne.label = edge.label;
      out.edges.push_back(ne);
    }
  }
  out.finalize();
  return out;
}

WeightedAutomaton record_extremum_automaton(const WeightedAutomaton& a, ExtremumMode mode) {
  WeightedAutomaton out;
  out.alphabet = a.alphabet;
  Rational start = mode == ExtremumMode::Min ? a.max_abs_weight : Rational(-a.max_abs_weight);
  std::map<std::pair<int, Rational>, int> index;
  std::vector<std::pair<int, Rational>> worklist;

  auto intern = [&](int q, const Rational& x) {
    auto it = index.find({q, x});
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.state_names.size());
    index[{q, x}] = id;
    out.state_names.push_back(a.state_names[q] + "@" + to_string(x));
    worklist.emplace_back(q, x);
    return id;
  };

  out.initial = intern(a.initial, start);
  for (size_t i = 0; i < worklist.size(); ++i) {
    auto [q, x] = worklist[i];
    int src_id = index[{q, x}];
    for (int s = 0; s < a.symbol_count(); ++s) {
      for (int t : a.delta[q][s]) {
        const Transition& tr = a.transitions[t];
        Rational m = combine(mode, x, tr.weight);
        int dst_id = intern(tr.dst, m);
        Transition nt;
        nt.src = src_id;
        nt.symbol = s;
        nt.dst = dst_id;
        nt.weight = m;
        out.transitions.push_back(nt);
      }
    }
  }
  out.finalize();
  return out;
}

}  // namespace regret
