#include "regret/payoff.hpp"

#include <algorithm>
#include <stdexcept>

namespace regret {

bool prefix_independent(PayoffKind p) {
  return p != PayoffKind::Inf && p != PayoffKind::Sup;
}

bool is_mean_payoff(PayoffKind p) {
  return p == PayoffKind::MPInf || p == PayoffKind::MPSup;
}

std::string payoff_name(PayoffKind p) {
  switch (p) {
    case PayoffKind::Inf: return "inf";
    case PayoffKind::Sup: return "sup";
    case PayoffKind::LimInf: return "liminf";
    case PayoffKind::LimSup: return "limsup";
    case PayoffKind::MPInf: return "mp-inf";
    case PayoffKind::MPSup: return "mp-sup";
  }
  return "?";
}

PayoffKind parse_payoff(const std::string& name) {
  if (name == "inf") return PayoffKind::Inf;
  if (name == "sup") return PayoffKind::Sup;
  if (name == "liminf") return PayoffKind::LimInf;
  if (name == "limsup") return PayoffKind::LimSup;
  if (name == "mp-inf") return PayoffKind::MPInf;
  if (name == "mp-sup") return PayoffKind::MPSup;
  throw parse_error("unknown payoff function: " + name);
}

Rational lasso_value(const Lasso& l, PayoffKind p) {
  if (l.cycle.empty()) throw validation_error("lasso cycle must be nonempty");
  auto min_of = [](const std::vector<Rational>& xs, Rational acc) {
    for (const Rational& x : xs) acc = std::min(acc, x);
    return acc;
  };
  auto max_of = [](const std::vector<Rational>& xs, Rational acc) {
    for (const Rational& x : xs) acc = std::max(acc, x);
    return acc;
  };
  switch (p) {
    case PayoffKind::Inf:
      return min_of(l.stem, min_of(l.cycle, l.cycle.front()));
    case PayoffKind::Sup:
      return max_of(l.stem, max_of(l.cycle, l.cycle.front()));
    case PayoffKind::LimInf:
      return min_of(l.cycle, l.cycle.front());
    case PayoffKind::LimSup:
      return max_of(l.cycle, l.cycle.front());
    case PayoffKind::MPInf:
    case PayoffKind::MPSup: {
      Rational sum = 0;
      for (const Rational& x : l.cycle) sum += x;
      return sum / Rational(static_cast<long>(l.cycle.size()));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace regret
