#include "regret/strategy.hpp"

#include <sstream>
#include <tuple>

#include "regret/arena.hpp"
#include "regret/automaton.hpp"
#include "regret/payoff.hpp"

namespace regret {

int MooreStrategy::edge_choice(int mem, int vertex) const {
  auto it = choice.find({mem, vertex});
  if (it == choice.end())
    throw validation_error("strategy has no choice for (mem " + std::to_string(mem) +
                           ", vertex " + std::to_string(vertex) + ")");
  return it->second;
}

int WordStrategy::transition_choice(const WeightedAutomaton& a, int mem, int state,
                                    int symbol) const {
  auto it = choice.find({mem, state, symbol});
  if (it == choice.end())
    throw validation_error("word strategy undefined at (mem " + std::to_string(mem) +
                           ", state " + a.state_names[state] + ", symbol " +
                           a.alphabet[symbol] + ")");
  int t = it->second;
  if (t < 0 || t >= a.transition_count() || a.transitions[t].src != state ||
      a.transitions[t].symbol != symbol)
    throw validation_error("word strategy picks an illegal transition");
  return t;
}

Lasso run_word_strategy(const WeightedAutomaton& a, const WordStrategy& s,
                        const std::vector<int>& stem, const std::vector<int>& cycle) {
  std::vector<Rational> weights;
  int state = a.initial;
  int mem = s.initial_memory;
  for (int sym : stem) {
    mem = s.next_memory(mem, sym);
    int t = s.transition_choice(a, mem, state, sym);
    weights.push_back(a.transitions[t].weight);
    state = a.transitions[t].dst;
  }
  size_t stem_len = weights.size();
  // Pump the cycle until (state, mem, phase) repeats.
  std::map<std::tuple<int, int, size_t>, size_t> seen;  // -> weight index
  size_t phase = 0;
  size_t first_rep;
  for (;;) {
    auto key = std::make_tuple(state, mem, phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      first_rep = it->second;
      break;
    }
    seen[key] = weights.size();
    int sym = cycle[phase];
    mem = s.next_memory(mem, sym);
    int t = s.transition_choice(a, mem, state, sym);
    weights.push_back(a.transitions[t].weight);
    state = a.transitions[t].dst;
    phase = (phase + 1) % cycle.size();
  }
  Lasso l;
  l.stem.assign(weights.begin(), weights.begin() + first_rep);
  l.cycle.assign(weights.begin() + first_rep, weights.end());
  (void)stem_len;
  return l;
}

std::string format_strategy(const Arena& g, const MooreStrategy& s, const std::string& player) {
  std::ostringstream out;
  for (const auto& [key, edge] : s.choice) {
    auto [mem, v] = key;
    const ArenaEdge& e = g.edges[edge];
    int mem_next = s.next_memory(mem, edge);
    out << "strategy " << player << ' ' << g.vertex_names[v] << ' ' << mem << " -> "
        << g.vertex_names[e.dst] << ' ' << mem_next << '\n';
  }
  return out.str();
}

std::string format_word_strategy(const WeightedAutomaton& a, const WordStrategy& s) {
  std::ostringstream out;
  for (const auto& [key, t] : s.choice) {
    auto [mem, state, sym] = key;
    const Transition& tr = a.transitions[t];
    int mem_next = s.next_memory(mem, sym);
    out << "strategy eve " << a.state_names[state] << '/' << a.alphabet[sym] << ' ' << mem
        << " -> " << a.state_names[tr.dst] << ' ' << mem_next << '\n';
  }
  return out.str();
}

}  // namespace regret
