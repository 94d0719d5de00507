#pragma once

#include <string>
#include <vector>

#include "regret/rational.hpp"

namespace regret {

enum class PayoffKind { Inf, Sup, LimInf, LimSup, MPInf, MPSup };

bool prefix_independent(PayoffKind p);
bool is_mean_payoff(PayoffKind p);
std::string payoff_name(PayoffKind p);
// Parses the CLI spelling: inf, sup, liminf, limsup, mp-inf, mp-sup.
PayoffKind parse_payoff(const std::string& name);

// Ultimately periodic weight sequence stem . cycle^omega.
struct Lasso {
  std::vector<Rational> stem;
  std::vector<Rational> cycle;  // nonempty
};

// Exact payoff of the lasso: Inf/Sup range over stem and cycle,
// LimInf/LimSup over the cycle, MP variants are the cycle mean (they
// agree on ultimately periodic plays).
Rational lasso_value(const Lasso& l, PayoffKind p);

}  // namespace regret
