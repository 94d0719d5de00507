#pragma once

#include "regret/arena.hpp"
#include "regret/automaton.hpp"

namespace regret {

enum class ExtremumMode { Min, Max };

// Prefix-independence transform: vertices become (v, x) where x is the
// minimal (Min) or maximal (Max) weight witnessed so far, edges are
// re-weighted with the recorded extremum. The Inf value of a play in g
// equals the LimInf value of its image (dually Sup / LimSup). Only the
// part reachable from the new initial vertex (v_I, W) resp. (v_I, -W)
// is materialized. New vertices are named "<v>@<x>".
Arena record_extremum_transform(const Arena& g, ExtremumMode mode);

// Same construction on a weighted automaton: states (q, x), transition
// weights replaced by the recorded extremum after the step.
WeightedAutomaton record_extremum_automaton(const WeightedAutomaton& a, ExtremumMode mode);

}  // namespace regret
