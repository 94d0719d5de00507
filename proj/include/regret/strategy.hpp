#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regret/rational.hpp"

namespace regret {

struct Arena;
struct WeightedAutomaton;
struct Lasso;
enum class PayoffKind;

// Finite-memory strategy on an arena. choice maps (memory, owned
// vertex) to an outgoing edge index, update maps (memory, traversed
// edge index) to the next memory state. Memory 1 with an empty update
// table is a positional strategy. Tables only need to cover reachable
// pairs.
struct MooreStrategy {
  int memory_count = 1;
  int initial_memory = 0;
  std::map<std::pair<int, int>, int> choice;  // (mem, vertex) -> edge index
  std::map<std::pair<int, int>, int> update;  // (mem, edge index) -> mem

  bool positional() const { return memory_count == 1; }
  int next_memory(int mem, int edge) const {
    auto it = update.find({mem, edge});
    return it == update.end() ? mem : it->second;
  }
  int edge_choice(int mem, int vertex) const;  // throws if missing
};

// Strategy of Eve resolving nondeterminism of a weighted automaton:
// each round Adam reveals a letter, memory advances on the letter, and
// the choice picks a transition with that letter from the current
// state.
struct WordStrategy {
  int memory_count = 1;
  int initial_memory = 0;
  std::map<std::tuple<int, int, int>, int> choice;  // (mem, state, symbol) -> transition
  std::map<std::pair<int, int>, int> update;        // (mem, symbol) -> mem

  int next_memory(int mem, int symbol) const {
    auto it = update.find({mem, symbol});
    return it == update.end() ? mem : it->second;
  }
  // Transition taken at (mem-after-update, state, symbol); throws
  // validation_error when undefined or illegal.
  int transition_choice(const WeightedAutomaton& a, int mem, int state, int symbol) const;
};

// Runs the strategy on stem.cycle^omega and returns the induced weight
// lasso (simulated until (state, memory, cycle position) repeats).
Lasso run_word_strategy(const WeightedAutomaton& a, const WordStrategy& s,
                        const std::vector<int>& stem, const std::vector<int>& cycle);

// One line per known (pos, mem) pair, the output grammar of the CLI:
//   strategy eve <pos> <mem> -> <choice> <mem'>
std::string format_strategy(const Arena& g, const MooreStrategy& s, const std::string& player);
std::string format_word_strategy(const WeightedAutomaton& a, const WordStrategy& s);

}  // namespace regret
