#include "regret/rational.hpp"

#include <algorithm>
#include <cctype>

namespace regret {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
      throw parse_error("bad rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw parse_error("bad rational literal: " + text);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

mpz_class denominator_lcm(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const Rational& v : values) {
    mpz_class d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Walk the Stern-Brocot tree: at every node the current interval is
// (a/b, c/d) and the mediant (a+c)/(b+d) is the simplest rational
// strictly inside it. Closed-interval endpoints are handled up front.
// Runs of identical directions are taken in one jump (continued
// fraction coefficients), so the walk is logarithmic.
Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  // Now 0 < lo < hi. Standard recursion on the integer parts.
  mpz_class lo_floor = lo.get_num() / lo.get_den();
  Rational frac_lo = lo - Rational(lo_floor);
  if (frac_lo == 0) return lo;  // integer endpoint is simplest
  if (hi > Rational(lo_floor + 1) || hi == Rational(lo_floor + 1))
    return Rational(lo_floor + 1);
  // Both strictly between lo_floor and lo_floor+1: recurse on reciprocals.
  Rational frac_hi = hi - Rational(lo_floor);
  Rational inner = simplest_rational_between(1 / frac_hi, 1 / frac_lo);
  return Rational(lo_floor) + 1 / inner;
}

}  // namespace regret
