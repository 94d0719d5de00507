#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regret/arena.hpp"
#include "regret/payoff.hpp"
#include "regret/strategy.hpp"

namespace regret {

// ---------------------------------------------------------------------------
// Game types
// ---------------------------------------------------------------------------

struct ParityEdge {
  int src = -1;
  int dst = -1;
  int priority = 0;  // over natural numbers
};

// Parity game with priorities on edges. Eve wins a play iff the minimal
// priority occurring infinitely often is odd.
struct ParityGame {
  std::vector<std::string> vertex_names;
  std::vector<bool> eve_owned;
  std::vector<ParityEdge> edges;
  int initial = -1;
  std::vector<std::vector<int>> out;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  void finalize();
};

struct ParitySolution {
  std::vector<bool> eve_wins;   // winning region partition
  MooreStrategy eve_strategy;   // positional, winning on Eve's region
  MooreStrategy adam_strategy;  // positional, winning on Adam's region
};

ParitySolution solve_parity(const ParityGame& pg);

struct StreettPair {
  std::vector<bool> e_set;  // per vertex
  std::vector<bool> f_set;
};

// Streett game: Eve wins a play iff for every pair, infinitely many
// visits to E imply infinitely many visits to F.
struct StreettGame {
  std::vector<std::string> vertex_names;
  std::vector<bool> eve_owned;
  std::vector<std::pair<int, int>> edges;
  int initial = -1;
  std::vector<StreettPair> pairs;
  std::vector<std::vector<int>> out;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  void finalize();
};

struct StreettSolution {
  bool eve_wins_initial = false;
  MooreStrategy eve_strategy;   // finite memory (index appearance record)
  MooreStrategy adam_strategy;  // positional on Adam's region
};

// Solved through the index-appearance-record reduction to parity. The
// Adam strategy is positionalized greedily afterwards; `budget` caps the
// size of the constructed record game (vertices), exceeding it raises
// budget_error.
StreettSolution solve_streett(const StreettGame& sg, long budget = 2'000'000);

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

struct GameValueResult {
  Rational value;
  MooreStrategy eve_strategy;   // positional
  MooreStrategy adam_strategy;  // positional
};

// Best payoff over all plays from `vertex` when both players cooperate.
GameValueResult cooperative_value(const Arena& g, PayoffKind p, int vertex);

// sup_sigma inf_tau of the payoff from `vertex`; both strategies are
// optimal and positional.
GameValueResult antagonistic_value(const Arena& g, PayoffKind p, int vertex);

// Max mean weight over cycles reachable from `from` (Karp per SCC),
// with a witness cycle as vertex edge indices. Ownership is ignored.
struct CycleMeanResult {
  Rational mean;
  std::vector<int> cycle_edges;
};
std::optional<CycleMeanResult> max_cycle_mean(const Arena& g, int from);

// Emptiness-style query: does some lasso from `from` (ownership
// ignored) have payoff >= bound (or > when strict)? Returns the witness
// weight lasso on success.
struct NonemptyResult {
  bool nonempty = false;
  Lasso witness;                  // weights
  std::vector<int> witness_stem;  // edge indices
  std::vector<int> witness_cycle;
};
NonemptyResult weighted_graph_nonempty(const Arena& g, int from, PayoffKind p,
                                       const Rational& bound, bool strict);

// One-player best value from `from` (all vertices treated as
// cooperative); the building block behind cooperative_value and the
// emptiness check. Returns value and a witness lasso in edge indices.
struct PathValueResult {
  Rational value;
  std::vector<int> stem_edges;
  std::vector<int> cycle_edges;
};
std::optional<PathValueResult> best_path_value(const Arena& g, int from, PayoffKind p);

}  // namespace regret
