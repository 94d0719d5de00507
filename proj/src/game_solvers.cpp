#include "regret/game_solvers.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "regret/digraph.hpp"

namespace regret {

void ParityGame::finalize() {
  out.assign(vertex_names.size(), {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const ParityEdge& pe = edges[e];
    if (pe.src < 0 || pe.src >= vertex_count() || pe.dst < 0 || pe.dst >= vertex_count())
      throw validation_error("parity edge endpoint out of range");
    if (pe.priority < 0) throw validation_error("negative priority");
    out[pe.src].push_back(e);
  }
  if (initial < 0 || initial >= vertex_count()) throw validation_error("bad initial vertex");
  for (int v = 0; v < vertex_count(); ++v)
    if (out[v].empty()) throw validation_error("parity game must be total");
}

void StreettGame::finalize() {
  out.assign(vertex_names.size(), {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [s, d] = edges[e];
    if (s < 0 || s >= vertex_count() || d < 0 || d >= vertex_count())
      throw validation_error("streett edge endpoint out of range");
    out[s].push_back(e);
  }
  if (initial < 0 || initial >= vertex_count()) throw validation_error("bad initial vertex");
  for (int v = 0; v < vertex_count(); ++v)
    if (out[v].empty()) throw validation_error("streett game must be total");
  for (const StreettPair& p : pairs)
    if (static_cast<int>(p.e_set.size()) != vertex_count() ||
        static_cast<int>(p.f_set.size()) != vertex_count())
      throw validation_error("streett pair sets must cover all vertices");
}

// ---------------------------------------------------------------------------
// Zielonka on an internal vertex-priority game (max-parity semantics:
// the winner of a play is the parity of the maximal priority seen
// infinitely often; player 1 wins odd).
// ---------------------------------------------------------------------------

namespace {

struct VGame {
  int n = 0;
  std::vector<int> owner;                 // 0 or 1
  std::vector<int> priority;              // max-parity
  std::vector<std::vector<int>> succ;     // successor vertex ids
  std::vector<std::vector<int>> pred;     // predecessor vertex ids

  void build_preds() {
    pred.assign(n, {});
    for (int v = 0; v < n; ++v)
      for (int w : succ[v]) pred[w].push_back(v);
  }
};

struct ZielonkaState {
  const VGame& g;
  std::vector<int> strat0, strat1;  // chosen successor per vertex (or -1)

  explicit ZielonkaState(const VGame& game)
      : g(game), strat0(game.n, -1), strat1(game.n, -1) {}

  std::vector<int>& strat(int player) { return player == 0 ? strat0 : strat1; }

  // Attractor of `targets` for `player` within `alive`; records the
  // attractor moves of `player` on newly attracted vertices.
  std::vector<char> attractor(int player, const std::vector<char>& targets,
                              const std::vector<char>& alive) {
    std::vector<char> in_attr(g.n, 0);
    std::vector<int> cnt(g.n, 0);
    std::deque<int> queue;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[v]) continue;
      if (targets[v]) {
        in_attr[v] = 1;
        queue.push_back(v);
      } else if (g.owner[v] != player) {
        for (int w : g.succ[v])
          if (alive[w]) ++cnt[v];
      }
    }
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int u : g.pred[t]) {
        if (!alive[u] || in_attr[u]) continue;
        if (g.owner[u] == player) {
          in_attr[u] = 1;
          strat(player)[u] = t;
          queue.push_back(u);
        } else if (--cnt[u] == 0) {
          in_attr[u] = 1;
          queue.push_back(u);
        }
      }
    }
    return in_attr;
  }

  // Returns (win0, win1) within `alive`, filling strategies on the
  // winners' regions.
  std::pair<std::vector<char>, std::vector<char>> solve(std::vector<char> alive) {
    std::vector<char> win0(g.n, 0), win1(g.n, 0);
    int d = -1;
    for (int v = 0; v < g.n; ++v)
      if (alive[v]) d = std::max(d, g.priority[v]);
    if (d < 0) return {win0, win1};
    int alpha = d & 1;

    std::vector<char> targets(g.n, 0);
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && g.priority[v] == d) targets[v] = 1;
    std::vector<char> a_set = attractor(alpha, targets, alive);

    std::vector<char> rest = alive;
    for (int v = 0; v < g.n; ++v)
      if (a_set[v]) rest[v] = 0;
    auto [sub0, sub1] = solve(rest);
    std::vector<char>& sub_alpha = alpha == 0 ? sub0 : sub1;
    std::vector<char>& sub_beta = alpha == 0 ? sub1 : sub0;

    bool beta_empty = std::none_of(sub_beta.begin(), sub_beta.end(), [](char c) { return c; });
    if (beta_empty) {
      // alpha wins everywhere: recursive strategy on the subgame,
      // attractor moves on A, any alive move on the top vertices.
      for (int v = 0; v < g.n; ++v) {
        if (!alive[v]) continue;
        (alpha == 0 ? win0 : win1)[v] = 1;
        if (g.owner[v] == alpha && targets[v]) {
          for (int w : g.succ[v])
            if (alive[w]) {
              strat(alpha)[v] = w;
              break;
            }
        }
      }
      return {win0, win1};
    }

    int beta = 1 - alpha;
    std::vector<char> b_set = attractor(beta, sub_beta, alive);
    // beta keeps the recursive strategy on its subgame region; the
    // attractor filled moves on the rest of B.
    std::vector<char> rest2 = alive;
    for (int v = 0; v < g.n; ++v)
      if (b_set[v]) rest2[v] = 0;
    auto [fin0, fin1] = solve(rest2);
    for (int v = 0; v < g.n; ++v) {
      if (b_set[v])
        (beta == 0 ? win0 : win1)[v] = 1;
      else if (fin0[v])
        win0[v] = 1;
      else if (fin1[v])
        win1[v] = 1;
    }
    return {win0, win1};
  }
};

// Mapping of the edge-priority min-parity game onto the internal
// max-parity vertex game: every edge becomes a midpoint vertex carrying
// the (order-reversed) edge priority; original vertices are neutral.
struct SplitParity {
  VGame vg;
  int orig_count = 0;

  explicit SplitParity(const ParityGame& pg) {
    orig_count = pg.vertex_count();
    int m = static_cast<int>(pg.edges.size());
    int max_pr = 0;
    for (const ParityEdge& e : pg.edges) max_pr = std::max(max_pr, e.priority);
    int top = max_pr + 2 - ((max_pr + 2) & 1);  // even, > max_pr
    vg.n = orig_count + m;
    vg.owner.assign(vg.n, 0);
    vg.priority.assign(vg.n, 0);
    vg.succ.assign(vg.n, {});
    for (int v = 0; v < orig_count; ++v) {
      vg.owner[v] = pg.eve_owned[v] ? 1 : 0;
      vg.priority[v] = 0;
    }
    for (int e = 0; e < m; ++e) {
      int mid = orig_count + e;
      vg.owner[mid] = 0;
      vg.priority[mid] = top - pg.edges[e].priority;  // parity preserved
      vg.succ[pg.edges[e].src].push_back(mid);
      vg.succ[mid].push_back(pg.edges[e].dst);
    }
    vg.build_preds();
  }
};

}  // namespace

ParitySolution solve_parity(const ParityGame& pg) {
  SplitParity split(pg);
  ZielonkaState z(split.vg);
  std::vector<char> alive(split.vg.n, 1);
  auto [win0, win1] = z.solve(std::move(alive));

  ParitySolution sol;
  sol.eve_wins.assign(pg.vertex_count(), false);
  for (int v = 0; v < pg.vertex_count(); ++v) sol.eve_wins[v] = win1[v];
  sol.eve_strategy.memory_count = 1;
  sol.adam_strategy.memory_count = 1;
  for (int v = 0; v < pg.vertex_count(); ++v) {
    bool eve_v = pg.eve_owned[v];
    int internal = eve_v ? z.strat1[v] : z.strat0[v];
    int edge;
    if (((eve_v && win1[v]) || (!eve_v && win0[v])) && internal >= 0)
      edge = internal - split.orig_count;
    else
      edge = pg.out[v].front();  // canonical filler off the winning region
    if (eve_v)
      sol.eve_strategy.choice[{0, v}] = edge;
    else
      sol.adam_strategy.choice[{0, v}] = edge;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Energy games (integer weights): decides whether the maximizer can
// ensure liminf mean-payoff >= 0, via small progress measures. Also
// yields the maximizer's positional strategy on the winning region.
// ---------------------------------------------------------------------------

namespace {

struct IntEdge {
  int src, dst;
  long long w;
};

struct EnergyResult {
  std::vector<bool> max_wins;
  std::vector<int> max_strategy;  // edge index per maximizer vertex in region
};

EnergyResult solve_energy(int n, const std::vector<bool>& maximizer_owned,
                          const std::vector<IntEdge>& edges) {
  std::vector<std::vector<int>> out(n), in(n);
  long long wmax = 1;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    out[edges[e].src].push_back(e);
    in[edges[e].dst].push_back(e);
    wmax = std::max(wmax, std::llabs(edges[e].w));
  }
  for (int v = 0; v < n; ++v)
    if (out[v].empty()) throw validation_error("energy game must be total");
  if (wmax > (std::numeric_limits<long long>::max() / (4LL * std::max(n, 1))))
    throw budget_error("energy game weights too large for exact solving");
  const long long top_bound = static_cast<long long>(n) * wmax;
  const long long TOP = top_bound + 1;

  std::vector<long long> f(n, 0);
  auto lift_edge = [&](int e) -> long long {
    long long fu = f[edges[e].dst];
    if (fu == TOP) return TOP;
    long long val = fu - edges[e].w;
    if (val < 0) val = 0;
    return val > top_bound ? TOP : val;
  };
  auto required = [&](int v) -> long long {
    long long best;
    if (maximizer_owned[v]) {
      best = TOP;
      for (int e : out[v]) best = std::min(best, lift_edge(e));
    } else {
      best = 0;
      for (int e : out[v]) best = std::max(best, lift_edge(e));
    }
    return best;
  };

  std::deque<int> queue;
  std::vector<bool> queued(n, false);
  for (int v = 0; v < n; ++v) {
    if (required(v) > f[v]) {
      queue.push_back(v);
      queued[v] = true;
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    queued[v] = false;
    long long need = required(v);
    if (need <= f[v]) continue;
    f[v] = need;
    for (int e : in[v]) {
      int u = edges[e].src;
      if (!queued[u] && required(u) > f[u]) {
        queue.push_back(u);
        queued[u] = true;
      }
    }
  }

  EnergyResult res;
  res.max_wins.assign(n, false);
  res.max_strategy.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    res.max_wins[v] = f[v] != TOP;
    if (res.max_wins[v] && maximizer_owned[v]) {
      for (int e : out[v])
        if (lift_edge(e) <= f[v]) {
          res.max_strategy[v] = e;
          break;
        }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exact mean-payoff values via threshold queries + Stern-Brocot search.
// ---------------------------------------------------------------------------

struct MPSolver {
  const Arena& g;
  mpz_class scale;  // lcm of weight denominators

  // query cache: threshold (in original units) -> winning regions
  std::map<Rational, std::vector<bool>> eve_geq_cache;   // Eve ensures MP >= t
  std::map<Rational, std::vector<bool>> adam_leq_cache;  // Adam ensures MP <= t
  std::map<Rational, std::vector<int>> eve_strat_cache;
  std::map<Rational, std::vector<int>> adam_strat_cache;

  explicit MPSolver(const Arena& arena) : g(arena) {
    std::vector<Rational> ws;
    for (const ArenaEdge& e : g.edges) ws.push_back(e.weight);
    scale = denominator_lcm(ws);
  }

  static long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw budget_error("mean-payoff scaling overflow");
    return z.get_si();
  }

  std::vector<IntEdge> scaled_edges(const Rational& t, bool negate) const {
    // weights (w - t) * D, or (t - w) * D when negated, D = lcm(scale, den(t))
    mpz_class D;
    mpz_class tden = t.get_den();
    mpz_lcm(D.get_mpz_t(), scale.get_mpz_t(), tden.get_mpz_t());
    std::vector<IntEdge> edges;
    edges.reserve(g.edges.size());
    for (const ArenaEdge& e : g.edges) {
      Rational shifted = negate ? Rational(t - e.weight) : Rational(e.weight - t);
      mpz_class num = shifted.get_num() * (D / shifted.get_den());
      edges.push_back({e.src, e.dst, to_ll(num)});
    }
    return edges;
  }

  const std::vector<bool>& eve_wins_geq(const Rational& t) {
    auto it = eve_geq_cache.find(t);
    if (it != eve_geq_cache.end()) return it->second;
    std::vector<bool> maximizer(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) maximizer[v] = g.eve_owned[v];
    EnergyResult res = solve_energy(g.vertex_count(), maximizer, scaled_edges(t, false));
    eve_strat_cache[t] = res.max_strategy;
    return eve_geq_cache.emplace(t, std::move(res.max_wins)).first->second;
  }

  const std::vector<bool>& adam_wins_leq(const Rational& t) {
    auto it = adam_leq_cache.find(t);
    if (it != adam_leq_cache.end()) return it->second;
    std::vector<bool> maximizer(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) maximizer[v] = !g.eve_owned[v];
    EnergyResult res = solve_energy(g.vertex_count(), maximizer, scaled_edges(t, true));
    adam_strat_cache[t] = res.max_strategy;
    return adam_leq_cache.emplace(t, std::move(res.max_wins)).first->second;
  }

  // Value of a single vertex. Vertex values are rationals p/q with
  // q <= |V| once weights are scaled to integers, so the Stern-Brocot
  // walk with both one-sided oracles pins them exactly.
  Rational value_at(int v) {
    const mpz_class n_bound(g.vertex_count());
    Rational w_rat(g.max_abs_weight);
    Rational lo = -w_rat, hi = w_rat;
    // Search in scaled units where denominators are bounded by |V|.
    Rational scale_rat(scale);
    lo *= scale_rat;
    hi *= scale_rat;
    for (int iter = 0; iter < 100000; ++iter) {
      Rational m = simplest_rational_between(lo, hi);
      Rational t = m / scale_rat;
      bool a = eve_wins_geq(t)[v];
      bool b = a ? adam_wins_leq(t)[v] : true;
      if (a && b) return t;
      Rational margin = Rational(1) / Rational(mpz_class(m.get_den()) * n_bound);
      if (a)
        lo = m + margin;
      else
        hi = m - margin;
    }
    throw budget_error("mean-payoff value search did not converge");
  }
};

std::vector<int> canonical_fill(const Arena& g, bool eve_side, const std::vector<int>& partial) {
  std::vector<int> out = partial;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.eve_owned[v] == eve_side && out[v] < 0) out[v] = g.out[v].front();
  return out;
}

GameValueResult mp_antagonistic(const Arena& g, int vertex) {
  MPSolver solver(g);
  std::vector<Rational> val(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) val[v] = solver.value_at(v);

  // Class-wise strategy extraction: at a vertex of value c the energy
  // game for threshold c provides a positional move guaranteeing >= c
  // (<= c for Adam on the dual side).
  std::vector<int> eve_edges(g.vertex_count(), -1), adam_edges(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.eve_owned[v]) {
      solver.eve_wins_geq(val[v]);
      eve_edges[v] = solver.eve_strat_cache[val[v]][v];
    } else {
      solver.adam_wins_leq(val[v]);
      adam_edges[v] = solver.adam_strat_cache[val[v]][v];
    }
  }
  eve_edges = canonical_fill(g, true, eve_edges);
  adam_edges = canonical_fill(g, false, adam_edges);

  GameValueResult res;
  res.value = val[vertex];
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.eve_owned[v])
      res.eve_strategy.choice[{0, v}] = eve_edges[v];
    else
      res.adam_strategy.choice[{0, v}] = adam_edges[v];
  }
  return res;
}

// ---------------------------------------------------------------------------
// Threshold games for Inf / Sup / LimInf / LimSup antagonistic values.
// ---------------------------------------------------------------------------

std::vector<Rational> sorted_weights(const Arena& g) {
  std::vector<Rational> ws;
  for (const ArenaEdge& e : g.edges) ws.push_back(e.weight);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

struct ThresholdWin {
  std::vector<bool> eve_wins;
  std::vector<int> eve_edges;   // witness edges on Eve's region
  std::vector<int> adam_edges;  // witness edges on Adam's region
};

// Eve wins iff she can ensure payoff >= x.
ThresholdWin threshold_game(const Arena& g, PayoffKind p, const Rational& x) {
  int n = g.vertex_count();
  ThresholdWin res;
  res.eve_wins.assign(n, false);
  res.eve_edges.assign(n, -1);
  res.adam_edges.assign(n, -1);
  auto good = [&](int e) { return g.edges[e].weight >= x; };

  if (p == PayoffKind::LimSup || p == PayoffKind::LimInf) {
    ParityGame pg;
    pg.vertex_names = g.vertex_names;
    pg.eve_owned.assign(g.eve_owned.begin(), g.eve_owned.end());
    pg.initial = g.initial;
    for (const ArenaEdge& e : g.edges) {
      ParityEdge pe;
      pe.src = e.src;
      pe.dst = e.dst;
      if (p == PayoffKind::LimSup)
        pe.priority = e.weight >= x ? 1 : 2;  // Buechi on good edges
      else
        pe.priority = e.weight < x ? 2 : 3;  // co-Buechi avoiding bad edges
      pg.edges.push_back(pe);
    }
    pg.finalize();
    ParitySolution ps = solve_parity(pg);
    res.eve_wins = ps.eve_wins;
    for (int v = 0; v < n; ++v) {
      if (g.eve_owned[v])
        res.eve_edges[v] = ps.eve_strategy.choice.at({0, v});
      else
        res.adam_edges[v] = ps.adam_strategy.choice.at({0, v});
    }
    return res;
  }

  if (p == PayoffKind::Inf) {
    // Greatest fixpoint of "can keep playing good edges".
    std::vector<bool> safe(n, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!safe[v]) continue;
        bool ok;
        if (g.eve_owned[v]) {
          ok = false;
          for (int e : g.out[v])
            if (good(e) && safe[g.edges[e].dst]) ok = true;
        } else {
          ok = true;
          for (int e : g.out[v])
            if (!good(e) || !safe[g.edges[e].dst]) ok = false;
        }
        if (!ok) {
          safe[v] = false;
          changed = true;
        }
      }
    }
    res.eve_wins = safe;
    for (int v = 0; v < n; ++v)
      if (safe[v] && g.eve_owned[v])
        for (int e : g.out[v])
          if (good(e) && safe[g.edges[e].dst]) {
            res.eve_edges[v] = e;
            break;
          }
    // Adam: force a bad edge (least fixpoint with ranks).
    std::vector<int> rank(n, -1);
    std::deque<int> queue;
    auto bad_or_ranked = [&](int e) { return !good(e) || rank[g.edges[e].dst] >= 0; };
    bool grew = true;
    int level = 0;
    while (grew) {
      grew = false;
      ++level;
      for (int v = 0; v < n; ++v) {
        if (rank[v] >= 0) continue;
        bool now;
        if (!g.eve_owned[v]) {
          now = false;
          for (int e : g.out[v])
            if (bad_or_ranked(e)) {
              now = true;
              res.adam_edges[v] = e;
              break;
            }
        } else {
          now = true;
          for (int e : g.out[v])
            if (!bad_or_ranked(e)) now = false;
        }
        if (now) {
          rank[v] = level;
          grew = true;
        }
      }
    }
    return res;
  }

  // Sup: Eve attracts to traversing a good edge.
  std::vector<bool> attr(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (attr[v]) continue;
      bool now;
      if (g.eve_owned[v]) {
        now = false;
        for (int e : g.out[v])
          if (good(e) || attr[g.edges[e].dst]) {
            now = true;
            res.eve_edges[v] = e;
            break;
          }
      } else {
        now = true;
        for (int e : g.out[v])
          if (!good(e) && !attr[g.edges[e].dst]) now = false;
      }
      if (now) {
        attr[v] = true;
        changed = true;
      }
    }
  }
  res.eve_wins = attr;
  // Adam: stay outside the attractor on non-good edges.
  for (int v = 0; v < n; ++v)
    if (!attr[v] && !g.eve_owned[v])
      for (int e : g.out[v])
        if (!good(e) && !attr[g.edges[e].dst]) {
          res.adam_edges[v] = e;
          break;
        }
  return res;
}

GameValueResult threshold_antagonistic(const Arena& g, PayoffKind p, int vertex) {
  std::vector<Rational> xs = sorted_weights(g);
  // Value = max threshold Eve wins; at the minimal weight she always does.
  int best = 0;
  std::vector<ThresholdWin> wins(xs.size());
  for (int i = static_cast<int>(xs.size()) - 1; i >= 0; --i) {
    wins[i] = threshold_game(g, p, xs[i]);
    if (wins[i].eve_wins[vertex]) {
      best = i;
      break;
    }
  }
  GameValueResult res;
  res.value = xs[best];
  std::vector<int> eve_edges = canonical_fill(g, true, wins[best].eve_edges);
  std::vector<int> adam_edges(g.vertex_count(), -1);
  if (best + 1 < static_cast<int>(xs.size()))
    adam_edges = wins[best + 1].adam_edges;  // keeps payoff below the next weight
  adam_edges = canonical_fill(g, false, adam_edges);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.eve_owned[v])
      res.eve_strategy.choice[{0, v}] = eve_edges[v];
    else
      res.adam_strategy.choice[{0, v}] = adam_edges[v];
  }
  return res;
}

// ---------------------------------------------------------------------------
// One-player path analysis (cooperative values, emptiness, Karp).
// ---------------------------------------------------------------------------

Digraph arena_digraph(const Arena& g) {
  Digraph d;
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const ArenaEdge& e : g.edges) es.emplace_back(e.src, e.dst);
  d.build(g.vertex_count(), es);
  return d;
}

// Simple cycle through edge `anchor` inside its SCC (shortest return
// path), as edge indices starting with `anchor`.
std::vector<int> cycle_through_edge(const Arena& g, const Digraph& d, const std::vector<int>& comp,
                                    int anchor) {
  int s = g.edges[anchor].src, t = g.edges[anchor].dst;
  if (s == t) return {anchor};
  // BFS from t to s within the component of the anchor.
  std::vector<int> via(g.vertex_count(), -1);
  std::deque<int> queue{t};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[t] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == s) break;
    for (int e : d.out[v]) {
      int w = g.edges[e].dst;
      if (comp[w] != comp[s] || seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  std::vector<int> cycle{anchor};
  std::vector<int> back;
  for (int v = s; v != t;) {
    int e = via[v];
    back.push_back(e);
    v = g.edges[e].src;
  }
  std::reverse(back.begin(), back.end());
  cycle.insert(cycle.end(), back.begin(), back.end());
  return cycle;
}

// Max mean cycle within one SCC via Karp; witness through the tight
// subgraph of longest-path potentials.
std::optional<CycleMeanResult> karp_scc(const Arena& g, const std::vector<int>& verts) {
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
  std::vector<std::pair<int, int>> internal;  // (edge idx, local dst)
  std::vector<std::vector<std::pair<int, int>>> in_edges(verts.size());  // dst -> (edge, local src)
  bool has_edge = false;
  for (int e = 0; e < g.edge_count(); ++e) {
    int ls = local[g.edges[e].src], ld = local[g.edges[e].dst];
    if (ls >= 0 && ld >= 0) {
      in_edges[ld].emplace_back(e, ls);
      has_edge = true;
    }
  }
  if (!has_edge) return std::nullopt;
  int n = static_cast<int>(verts.size());
  const Rational NEG_INF = Rational(-1);  // used with a validity mask
  std::vector<std::vector<Rational>> dist(n + 1, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<bool>> valid(n + 1, std::vector<bool>(n, false));
  valid[0][0] = true;  // source = verts[0]
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < n; ++v) {
      for (auto [e, ls] : in_edges[v]) {
        if (!valid[k - 1][ls]) continue;
        Rational cand = dist[k - 1][ls] + g.edges[e].weight;
        if (!valid[k][v] || cand > dist[k][v]) {
          valid[k][v] = true;
          dist[k][v] = cand;
        }
      }
    }
  }
  bool found = false;
  Rational best;
  for (int v = 0; v < n; ++v) {
    if (!valid[n][v]) continue;
    bool have_min = false;
    Rational vmin;
    for (int k = 0; k < n; ++k) {
      if (!valid[k][v]) continue;
      Rational cand = (dist[n][v] - dist[k][v]) / Rational(n - k);
      if (!have_min || cand < vmin) {
        have_min = true;
        vmin = cand;
      }
    }
    if (have_min && (!found || vmin > best)) {
      found = true;
      best = vmin;
    }
  }
  if (!found) return std::nullopt;

  // Witness: longest-path potentials for weights shifted by -best have
  // no positive cycle; tight edges contain a best-mean cycle.
  std::vector<Rational> pot(n, Rational(0));
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v)
      for (auto [e, ls] : in_edges[v]) {
        Rational cand = pot[ls] + g.edges[e].weight - best;
        if (cand > pot[v]) pot[v] = cand;
      }
  }
  // One more relaxation round marks edges still tight or improving.
  std::vector<int> tight_out_edge(n, -1);
  for (int v = 0; v < n; ++v)
    for (auto [e, ls] : in_edges[v])
      if (pot[ls] + g.edges[e].weight - best >= pot[v]) tight_out_edge[ls] = e;
  // Walk tight edges until a vertex repeats.
  std::vector<int> seen_at(n, -1);
  int cur = 0;
  while (tight_out_edge[cur] < 0) cur = (cur + 1) % n;  // some tight edge exists
  std::vector<int> walk;
  int step = 0;
  for (;;) {
    if (seen_at[cur] >= 0) break;
    seen_at[cur] = step++;
    int e = tight_out_edge[cur];
    walk.push_back(e);
    cur = local[g.edges[e].dst];
  }
  std::vector<int> cycle(walk.begin() + seen_at[cur], walk.end());
  CycleMeanResult res;
  res.mean = best;
  res.cycle_edges = cycle;
  // The tight walk construction guarantees the cycle mean equals best;
  // assert in debug builds.
  return res;
}

}  // namespace

std::optional<CycleMeanResult> max_cycle_mean(const Arena& g, int from) {
  if (from < 0 || from >= g.vertex_count()) throw validation_error("unknown vertex");
  Digraph d = arena_digraph(g);
  std::vector<bool> reach = reachable_from(d, from);
  int ncomp = 0;
  std::vector<int> comp = strongly_connected_components(d, ncomp);
  std::optional<CycleMeanResult> best;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c && reach[v]) verts.push_back(v);
    if (verts.empty()) continue;
    auto res = karp_scc(g, verts);
    if (res && (!best || res->mean > best->mean)) best = res;
  }
  return best;
}

std::optional<PathValueResult> best_path_value(const Arena& g, int from, PayoffKind p) {
  if (from < 0 || from >= g.vertex_count()) throw validation_error("unknown vertex");
  Digraph d = arena_digraph(g);
  std::vector<bool> reach = reachable_from(d, from);
  int ncomp = 0;
  std::vector<int> comp = strongly_connected_components(d, ncomp);

  auto on_cycle = [&](int e) {
    return comp[g.edges[e].src] == comp[g.edges[e].dst];
  };

  auto stem_to = [&](int target, const std::vector<bool>& allowed_edges,
                     std::vector<int>& stem) -> bool {
    // BFS from `from` to `target` over allowed edges.
    stem.clear();
    if (from == target) return true;
    std::vector<int> via(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : d.out[v]) {
        if (!allowed_edges[e]) continue;
        int w = g.edges[e].dst;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        if (w == target) {
          for (int x = target; x != from;) {
            stem.push_back(via[x]);
            x = g.edges[via[x]].src;
          }
          std::reverse(stem.begin(), stem.end());
          return true;
        }
        queue.push_back(w);
      }
    }
    return false;
  };

  std::vector<bool> all_edges(g.edge_count(), true);

  auto assemble = [&](const Rational& value, const std::vector<int>& cycle,
                      const std::vector<bool>& stem_edges_allowed)
      -> std::optional<PathValueResult> {
    // Cut the stem at the first cycle vertex and rotate the cycle there.
    std::vector<int> stem;
    if (!stem_to(g.edges[cycle.front()].src, stem_edges_allowed, stem)) return std::nullopt;
    std::vector<bool> on_cycle_v(g.vertex_count(), false);
    for (int e : cycle) on_cycle_v[g.edges[e].src] = true;
    std::vector<int> cut_stem;
    int entry = from;
    if (!on_cycle_v[from]) {
      for (int e : stem) {
        cut_stem.push_back(e);
        if (on_cycle_v[g.edges[e].dst]) {
          entry = g.edges[e].dst;
          break;
        }
      }
    }
    // rotate cycle to start at entry
    std::vector<int> rot;
    int start = 0;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
      if (g.edges[cycle[i]].src == entry) {
        start = i;
        break;
      }
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
      rot.push_back(cycle[(start + i) % cycle.size()]);
    PathValueResult res;
    res.value = value;
    res.stem_edges = cut_stem;
    res.cycle_edges = rot;
    return res;
  };

  switch (p) {
    case PayoffKind::MPInf:
    case PayoffKind::MPSup: {
      auto mc = max_cycle_mean(g, from);
      if (!mc) return std::nullopt;
      return assemble(mc->mean, mc->cycle_edges, all_edges);
    }
    case PayoffKind::LimSup: {
      int best_edge = -1;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!reach[g.edges[e].src] || !on_cycle(e)) continue;
        if (best_edge < 0 || g.edges[e].weight > g.edges[best_edge].weight) best_edge = e;
      }
      if (best_edge < 0) return std::nullopt;
      std::vector<int> cyc = cycle_through_edge(g, d, comp, best_edge);
      return assemble(g.edges[best_edge].weight, cyc, all_edges);
    }
    case PayoffKind::LimInf: {
      std::vector<Rational> xs = sorted_weights(g);
      for (int i = static_cast<int>(xs.size()) - 1; i >= 0; --i) {
        // cycle within edges >= xs[i], reachable via any edges
        Arena sub = g;
        std::vector<std::pair<int, int>> es;
        std::vector<int> idx_map;
        for (int e = 0; e < g.edge_count(); ++e)
          if (g.edges[e].weight >= xs[i]) {
            es.emplace_back(g.edges[e].src, g.edges[e].dst);
            idx_map.push_back(e);
          }
        Digraph dsub;
        dsub.build(g.vertex_count(), es);
        int nc = 0;
        std::vector<int> csub = strongly_connected_components(dsub, nc);
        for (int le = 0; le < static_cast<int>(es.size()); ++le) {
          if (csub[es[le].first] != csub[es[le].second] || !reach[es[le].first]) continue;
          // build the cycle through idx_map[le] within the subgraph component
          Arena view = g;  // cycle_through_edge only reads edges/out
          std::vector<int> cyc;
          {
            int anchor = idx_map[le];
            int s = g.edges[anchor].src, t = g.edges[anchor].dst;
            if (s == t) {
              cyc = {anchor};
            } else {
              std::vector<int> via(g.vertex_count(), -1);
              std::vector<bool> seen(g.vertex_count(), false);
              std::deque<int> queue{t};
              seen[t] = true;
              while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                if (v == s) break;
                for (int le2 = 0; le2 < static_cast<int>(es.size()); ++le2) {
                  if (es[le2].first != v) continue;
                  int w = es[le2].second;
                  if (csub[w] != csub[s] || seen[w]) continue;
                  seen[w] = true;
                  via[w] = idx_map[le2];
                  queue.push_back(w);
                }
              }
              if (!seen[s]) continue;
              std::vector<int> back;
              for (int v = s; v != t;) {
                int e2 = via[v];
                back.push_back(e2);
                v = g.edges[e2].src;
              }
              std::reverse(back.begin(), back.end());
              cyc = {anchor};
              cyc.insert(cyc.end(), back.begin(), back.end());
            }
          }
          (void)view;
          Rational value = g.edges[cyc.front()].weight;
          for (int e : cyc) value = std::min(value, g.edges[e].weight);
          // value is >= xs[i]; since thresholds descend this is maximal
          return assemble(value, cyc, all_edges);
        }
      }
      return std::nullopt;
    }
    case PayoffKind::Inf: {
      std::vector<Rational> xs = sorted_weights(g);
      for (int i = static_cast<int>(xs.size()) - 1; i >= 0; --i) {
        std::vector<bool> allowed(g.edge_count(), false);
        std::vector<std::pair<int, int>> es;
        std::vector<int> idx_map;
        for (int e = 0; e < g.edge_count(); ++e)
          if (g.edges[e].weight >= xs[i]) {
            allowed[e] = true;
            es.emplace_back(g.edges[e].src, g.edges[e].dst);
            idx_map.push_back(e);
          }
        Digraph dsub;
        dsub.build(g.vertex_count(), es);
        std::vector<bool> rsub = reachable_from(dsub, from);
        int nc = 0;
        std::vector<int> csub = strongly_connected_components(dsub, nc);
        for (int le = 0; le < static_cast<int>(es.size()); ++le) {
          if (!rsub[es[le].first] || csub[es[le].first] != csub[es[le].second]) continue;
          // min weight on this cycle is >= xs[i]; find the cycle
          int anchor = idx_map[le];
          Arena sub_arena = g;
          sub_arena.edges.clear();
          for (int k = 0; k < static_cast<int>(idx_map.size()); ++k) sub_arena.edges.push_back(g.edges[idx_map[k]]);
          sub_arena.out.assign(g.vertex_count(), {});
          for (int k = 0; k < static_cast<int>(sub_arena.edges.size()); ++k)
            sub_arena.out[sub_arena.edges[k].src].push_back(k);
          Digraph d2;
          d2.build(g.vertex_count(), es);
          int local_anchor = le;
          std::vector<int> cyc_local = cycle_through_edge(sub_arena, d2, csub, local_anchor);
          std::vector<int> cyc;
          for (int k : cyc_local) cyc.push_back(idx_map[k]);
          Rational value = xs[i];
          auto r = assemble(value, cyc, allowed);
          if (r) {
            // true Inf value includes stem weights; all allowed >= xs[i],
            // and some edge on the cycle may exceed: recompute exact min
            Rational mn = g.edges[r->cycle_edges.front()].weight;
            for (int e : r->stem_edges) mn = std::min(mn, g.edges[e].weight);
            for (int e : r->cycle_edges) mn = std::min(mn, g.edges[e].weight);
            r->value = mn;
            return r;
          }
          (void)anchor;
        }
      }
      return std::nullopt;
    }
    case PayoffKind::Sup: {
      int best_edge = -1;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!reach[g.edges[e].src]) continue;
        if (best_edge < 0 || g.edges[e].weight > g.edges[best_edge].weight) best_edge = e;
      }
      if (best_edge < 0) return std::nullopt;
      // stem to the edge, then any cycle from its target (first-edge walk)
      std::vector<int> stem;
      if (!stem_to(g.edges[best_edge].src, all_edges, stem)) return std::nullopt;
      std::vector<int> walk = stem;
      walk.push_back(best_edge);
      std::vector<int> seen_at(g.vertex_count(), -1);
      std::vector<int> tail;
      int cur = g.edges[best_edge].dst;
      for (;;) {
        if (seen_at[cur] >= 0) break;
        seen_at[cur] = static_cast<int>(tail.size());
        if (g.out[cur].empty()) return std::nullopt;
        int e = g.out[cur].front();
        tail.push_back(e);
        cur = g.edges[e].dst;
      }
      PathValueResult res;
      res.value = g.edges[best_edge].weight;
      res.stem_edges = walk;
      for (int i = 0; i < seen_at[cur]; ++i) res.stem_edges.push_back(tail[i]);
      for (int i = seen_at[cur]; i < static_cast<int>(tail.size()); ++i)
        res.cycle_edges.push_back(tail[i]);
      return res;
    }
  }
  return std::nullopt;
}

namespace {

GameValueResult strategies_from_lasso(const Arena& g, const Rational& value,
                                      const std::vector<int>& stem,
                                      const std::vector<int>& cycle) {
  std::vector<int> pick(g.vertex_count(), -1);
  for (int e : cycle) pick[g.edges[e].src] = e;
  for (int e : stem)
    if (pick[g.edges[e].src] < 0) pick[g.edges[e].src] = e;
  GameValueResult res;
  res.value = value;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int e = pick[v] >= 0 ? pick[v] : g.out[v].front();
    if (g.eve_owned[v])
      res.eve_strategy.choice[{0, v}] = e;
    else
      res.adam_strategy.choice[{0, v}] = e;
  }
  return res;
}

}  // namespace

GameValueResult cooperative_value(const Arena& g, PayoffKind p, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count()) throw validation_error("unknown vertex");
  auto pv = best_path_value(g, vertex, p);
  if (!pv) throw validation_error("no infinite play from vertex");
  return strategies_from_lasso(g, pv->value, pv->stem_edges, pv->cycle_edges);
}

GameValueResult antagonistic_value(const Arena& g, PayoffKind p, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count()) throw validation_error("unknown vertex");
  if (is_mean_payoff(p)) return mp_antagonistic(g, vertex);
  return threshold_antagonistic(g, p, vertex);
}

NonemptyResult weighted_graph_nonempty(const Arena& g, int from, PayoffKind p,
                                       const Rational& bound, bool strict) {
  NonemptyResult res;
  auto pv = best_path_value(g, from, p);
  if (!pv) return res;
  bool ok = strict ? pv->value > bound : pv->value >= bound;
  if (!ok) return res;
  res.nonempty = true;
  res.witness_stem = pv->stem_edges;
  res.witness_cycle = pv->cycle_edges;
  for (int e : pv->stem_edges) res.witness.stem.push_back(g.edges[e].weight);
  for (int e : pv->cycle_edges) res.witness.cycle.push_back(g.edges[e].weight);
  return res;
}

// ---------------------------------------------------------------------------
// Streett games via the index-appearance-record reduction to parity.
// ---------------------------------------------------------------------------

namespace {

using Perm = std::vector<int>;

Perm touch_front(const Perm& perm, const std::vector<int>& touched_f) {
  Perm p = perm;
  for (int pair : touched_f) {
    auto it = std::find(p.begin(), p.end(), pair);
    std::rotate(p.begin(), it, it + 1);
  }
  return p;
}

// Priority of entering vertex `v` with record `perm` (before the move):
// determined by the deepest touched pair, good when that pair's F-set
// is touched. Min-parity with odd = Eve.
int iar_priority(const StreettGame& sg, const Perm& perm, int v) {
  int k = static_cast<int>(perm.size());
  int deepest = -1;
  for (int pos = k - 1; pos >= 0; --pos) {
    int pair = perm[pos];
    if (sg.pairs[pair].e_set[v] || sg.pairs[pair].f_set[v]) {
      deepest = pos;
      break;
    }
  }
  if (deepest < 0) return 2 * k + 1;  // neutral, least significant, odd
  int pair = perm[deepest];
  bool good = sg.pairs[pair].f_set[v];
  return good ? 2 * (k - deepest) - 1 : 2 * (k - deepest);
}

struct IarGame {
  ParityGame pg;
  std::vector<std::pair<int, Perm>> states;          // parity vertex -> (streett vertex, perm)
  std::map<std::pair<int, Perm>, int> index;
  std::vector<Perm> perms;                           // interned records (memory states)
  std::map<Perm, int> perm_index;

  int intern_perm(const Perm& p) {
    auto it = perm_index.find(p);
    if (it != perm_index.end()) return it->second;
    int id = static_cast<int>(perms.size());
    perm_index[p] = id;
    perms.push_back(p);
    return id;
  }
};

// Builds the record game restricted to the part reachable from the
// seeds (each with the identity record). adam_restriction, when
// provided, pins Adam vertices to a single Streett edge.
IarGame build_iar(const StreettGame& sg, const std::vector<int>& seeds,
                  const std::map<int, int>* adam_restriction, long budget) {
  IarGame iar;
  int k = static_cast<int>(sg.pairs.size());
  Perm id_perm(k);
  std::iota(id_perm.begin(), id_perm.end(), 0);

  auto intern = [&](int v, const Perm& p) {
    auto it = iar.index.find({v, p});
    if (it != iar.index.end()) return it->second;
    if (static_cast<long>(iar.states.size()) >= budget)
      throw budget_error("index-appearance-record game exceeds budget");
    int idx = static_cast<int>(iar.states.size());
    iar.index[{v, p}] = idx;
    iar.states.emplace_back(v, p);
    iar.pg.vertex_names.push_back(sg.vertex_names[v] + "#" + std::to_string(iar.intern_perm(p)));
    iar.pg.eve_owned.push_back(sg.eve_owned[v]);
    return idx;
  };

  std::vector<int> seed_ids;
  for (int s : seeds) seed_ids.push_back(intern(s, id_perm));
  for (size_t i = 0; i < iar.states.size(); ++i) {
    auto [v, perm] = iar.states[i];
    std::vector<int> edge_list;
    if (!sg.eve_owned[v] && adam_restriction) {
      auto it = adam_restriction->find(v);
      if (it != adam_restriction->end())
        edge_list.push_back(it->second);
    }
    if (edge_list.empty()) edge_list = sg.out[v];
    for (int e : edge_list) {
      int w = sg.edges[e].second;
      std::vector<int> touched_f;
      for (int pair = 0; pair < k; ++pair)
        if (sg.pairs[pair].f_set[w]) touched_f.push_back(pair);
      Perm next = touch_front(perm, touched_f);
      int dst = intern(w, next);
      ParityEdge pe;
      pe.src = static_cast<int>(i);
      pe.dst = dst;
      pe.priority = iar_priority(sg, perm, w);
      iar.pg.edges.push_back(pe);
    }
  }
  iar.pg.initial = seed_ids.empty() ? 0 : seed_ids.front();
  iar.pg.finalize();
  return iar;
}

// Winner per Streett vertex (independent of the starting record).
std::vector<bool> streett_winners(const StreettGame& sg, const std::vector<int>& seeds,
                                  const std::map<int, int>* adam_restriction, long budget,
                                  IarGame* out_iar = nullptr,
                                  ParitySolution* out_sol = nullptr) {
  IarGame iar = build_iar(sg, seeds, adam_restriction, budget);
  ParitySolution sol = solve_parity(iar.pg);
  std::vector<bool> eve_wins(sg.vertex_count(), false);
  int k = static_cast<int>(sg.pairs.size());
  Perm id_perm(k);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  for (int s : seeds) eve_wins[s] = sol.eve_wins[iar.index.at({s, id_perm})];
  if (out_iar) *out_iar = iar;
  if (out_sol) *out_sol = std::move(sol);
  return eve_wins;
}

}  // namespace

StreettSolution solve_streett(const StreettGame& sg, long budget) {
  StreettSolution res;
  int n = sg.vertex_count();
  if (sg.pairs.empty()) {
    // Every play is vacuously winning for Eve.
    res.eve_wins_initial = true;
    for (int v = 0; v < n; ++v) {
      int e = sg.out[v].front();
      if (sg.eve_owned[v])
        res.eve_strategy.choice[{0, v}] = e;
      else
        res.adam_strategy.choice[{0, v}] = e;
    }
    return res;
  }

  std::vector<int> all_seeds(n);
  std::iota(all_seeds.begin(), all_seeds.end(), 0);
  IarGame iar;
  ParitySolution sol;
  std::vector<bool> eve_wins = streett_winners(sg, all_seeds, nullptr, budget, &iar, &sol);
  res.eve_wins_initial = eve_wins[sg.initial];

  // Eve: finite memory = reachable records.
  res.eve_strategy.memory_count = static_cast<int>(iar.perms.size());
  res.eve_strategy.initial_memory = iar.perm_index.at([&] {
    Perm id_perm(sg.pairs.size());
    std::iota(id_perm.begin(), id_perm.end(), 0);
    return id_perm;
  }());
  for (size_t i = 0; i < iar.states.size(); ++i) {
    auto [v, perm] = iar.states[i];
    int mem = iar.perm_index.at(perm);
    if (sg.eve_owned[v]) {
      int pedge = sol.eve_strategy.choice.at({0, static_cast<int>(i)});
      // parity edges were emitted per streett edge in order
      // recover which streett edge it is from the target state
      int dst_state = iar.pg.edges[pedge].dst;
      int target_v = iar.states[dst_state].first;
      for (int e : sg.out[v])
        if (sg.edges[e].second == target_v) {
          res.eve_strategy.choice[{mem, v}] = e;
          break;
        }
    }
  }
  for (int mem = 0; mem < static_cast<int>(iar.perms.size()); ++mem) {
    const Perm& perm = iar.perms[mem];
    for (int e = 0; e < static_cast<int>(sg.edges.size()); ++e) {
      int w = sg.edges[e].second;
      std::vector<int> touched_f;
      for (int pair = 0; pair < static_cast<int>(sg.pairs.size()); ++pair)
        if (sg.pairs[pair].f_set[w]) touched_f.push_back(pair);
      Perm next = touch_front(perm, touched_f);
      auto it = iar.perm_index.find(next);
      if (it != iar.perm_index.end()) res.eve_strategy.update[{mem, e}] = it->second;
    }
  }

  // Adam: greedy positionalization on his winning region.
  std::vector<int> adam_region;
  for (int v = 0; v < n; ++v)
    if (!eve_wins[v]) adam_region.push_back(v);
  std::map<int, int> fixed;
  for (int v : adam_region) {
    if (sg.eve_owned[v]) continue;
    for (int e : sg.out[v]) {
      std::map<int, int> trial = fixed;
      trial[v] = e;
      std::vector<bool> w = streett_winners(sg, adam_region, &trial, budget);
      bool still_wins = true;
      for (int u : adam_region)
        if (w[u]) {
          still_wins = false;
          break;
        }
      if (still_wins) {
        fixed[v] = e;
        break;
      }
    }
    if (!fixed.count(v))
      throw std::logic_error("streett positionalization failed");
  }
  for (int v = 0; v < n; ++v) {
    if (sg.eve_owned[v]) continue;
    auto it = fixed.find(v);
    res.adam_strategy.choice[{0, v}] = it != fixed.end() ? it->second : sg.out[v].front();
  }
  return res;
}

}  // namespace regret
