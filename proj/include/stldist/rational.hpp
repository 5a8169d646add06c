#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stldist {

// Exact rational scalar used throughout the library.  All semantic
// computations (robustness, simplex pivots, box areas) stay in Rat so that
// distances over decimal inputs come out bit-exact.
using Rat = mpq_class;

// Parses "12", "-0.04", "+3.5", or an explicit fraction "p/q" into an exact
// rational.  Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view text);

// True when q has a finite decimal expansion (denominator of form 2^a 5^b).
bool rat_has_finite_decimal(const Rat& q);

// Exact decimal text when the expansion is finite ("0.04", "-3", "1.625"),
// otherwise the canonical fraction form "p/q".
std::string rat_to_string(const Rat& q);

// Decimal text with the given number of fraction digits, rounding toward
// zero.  Only used for display paths that require plain decimals.
std::string rat_to_decimal_approx(const Rat& q, int digits);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace stldist
