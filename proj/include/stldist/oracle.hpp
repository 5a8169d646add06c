#pragma once

#include <cstdint>
#include <vector>

#include "stldist/formula.hpp"
#include "stldist/hyperbox.hpp"
#include "stldist/trace.hpp"

namespace stldist {

class ExpansionBudgetError : public std::runtime_error {
 public:
  explicit ExpansionBudgetError(size_t budget)
      : std::runtime_error("language expansion exceeded budget of " +
                           std::to_string(budget) + " boxes") {}
};

// Reference representation of a bounded-time language: an explicit finite
// union of closed hyper-rectangles over the flattened trace coordinates.
// Coordinate index of sample (t, dim) is t * n + dim.
struct LanguageBoxUnion {
  int n = 0;
  int T = 0;
  Domain domain;
  std::vector<HyperBox> boxes;

  size_t coord(int t, int dim) const { return static_cast<size_t>(t) * n + dim; }
  bool contains(const Trace& s) const;
  bool empty() const { return boxes.empty(); }
};

// Explicit language construction by set recursion.  Conjunction intersects
// box unions, disjunction unites them, and temporal operators expand over
// their discrete windows.  Negation recurses into the dual sublevel set
// {score <= 0} instead of a geometric complement, which keeps membership
// exactly aligned with the monitor even on score-zero boundaries.
// Contained and empty boxes are pruned as the recursion goes; exceeding
// `box_budget` raises ExpansionBudgetError.
LanguageBoxUnion language(const Formula& f, const Domain& domain, int T,
                          size_t box_budget = 200'000);

// Exact sup-inf L-infinity distance between two language representations
// (see directed_hausdorff_linf for the method).  Throws on empty input.
Rat brute_directed_ph(const LanguageBoxUnion& A, const LanguageBoxUnion& B);

// Deterministic satisfying-trace sampler: picks a box uniformly, then a
// rational point uniformly (on a fine grid) inside it.
std::vector<Trace> sample_satisfying(const LanguageBoxUnion& lang, int count,
                                     std::uint64_t seed);

// Space-time band of the coverage region: during time [lo, hi] the signal
// must sit inside `value` (per constrained dimension, in normalized units).
struct CoverageBand {
  Rat lo, hi;
  std::vector<std::pair<Rat, Rat>> value;  // size n, [0,1] when unconstrained
};

// Independent reference for the space-time coverage region of a formula over
// normalized values; eventually-windows are taken at their zero-width limit.
// Supports the plain windows used by the box areas and the variant that
// extends every window by one step ([t, t+1] sample extension).  Used as the
// measure oracle for the box algorithms.
std::vector<CoverageBand> coverage_bands(const Formula& f,
                                         const std::vector<Rat>& x_max, Rat T,
                                         bool extend_windows);

// Measure of the coverage region on a uniform midpoint grid, refined until
// two successive refinements differ by less than `resolution`.
Rat grid_projection_measure(const Formula& f, const std::vector<Rat>& x_max,
                            Rat T, const Rat& resolution,
                            bool extend_windows = false);

}  // namespace stldist
