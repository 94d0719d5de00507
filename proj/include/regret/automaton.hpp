#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regret/rational.hpp"

namespace regret {

struct Transition {
  int src = -1;
  int symbol = -1;
  int dst = -1;
  Rational weight;
};

// Nondeterministic weighted automaton over a finite alphabet. Total by
// invariant: every (state, symbol) has at least one transition. The
// value of a word is the supremum over runs of the run's payoff.
struct WeightedAutomaton {
  std::vector<std::string> state_names;
  std::vector<std::string> alphabet;     // declaration order
  std::vector<Transition> transitions;   // declaration order
  int initial = -1;
  Rational max_abs_weight;               // W

  // state -> symbol -> transition indices, declaration order
  std::vector<std::vector<std::vector<int>>> delta;

  int state_count() const { return static_cast<int>(state_names.size()); }
  int symbol_count() const { return static_cast<int>(alphabet.size()); }
  int transition_count() const { return static_cast<int>(transitions.size()); }
  int find_state(const std::string& name) const;
  int find_symbol(const std::string& name) const;

  bool deterministic() const;

  // Sorted distinct transition weights, ascending.
  std::vector<Rational> weight_values() const;

  void finalize();  // adjacency, W, totality; throws validation_error
};

WeightedAutomaton parse_automaton(std::istream& in);
WeightedAutomaton parse_automaton_string(const std::string& text);
WeightedAutomaton load_automaton_file(const std::string& path);

std::string serialize_automaton(const WeightedAutomaton& a);

}  // namespace regret
