#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regret {

// Exact arbitrary-precision rational. gmp keeps values in lowest terms
// with a positive denominator, which is the canonical form used by all
// file formats and value reports.
using Rational = mpq_class;

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct undecidable_error : std::runtime_error {
  explicit undecidable_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

// Prints "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& value);

Rational rational_abs(const Rational& value);

// Least common multiple of the denominators; scaling every value by it
// yields integers.
mpz_class denominator_lcm(const std::vector<Rational>& values);

// The unique rational with the smallest denominator inside [lo, hi].
// Among equal denominators the one with the smallest |numerator| is
// returned (there is exactly one once lo <= hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace regret
