#pragma once

#include <stdexcept>

#include "stldist/formula.hpp"

namespace stldist {

class NegationPresentError : public std::runtime_error {
 public:
  NegationPresentError()
      : std::runtime_error(
            "formula contains negation; apply to_nnf before this operation") {}
};

class UntilUnsupportedError : public std::runtime_error {
 public:
  UntilUnsupportedError()
      : std::runtime_error("until operator is not supported here") {}
};

bool contains_negation(const Formula& f);
bool contains_until(const Formula& f);

// Rewrites a bounded until into the equivalent finite disjunction over its
// witness step d:
//
//   a U[lo,hi] b  =  OR_{d=lo..hi} ( G[d,d] b  &  G[0,d] a )
//
// The rewrite is exact for both the language and the score recursion, which
// is what makes negation of until below exact as well.
Formula expand_until(const Formula& until_node);

// Negation normal form.  Negations are pushed inward and eliminated at the
// predicates by flipping <= / >= (valid under the closed-inequality
// convention where a score of zero satisfies both a predicate and its
// negation); !T becomes the bottom constant; temporal operators dualize; a
// negated until is first expanded via expand_until and then dualized.  The
// result contains no Not node, and its score equals the input's score
// exactly on every sufficiently long trace.
Formula to_nnf(const Formula& f);

// Threshold relaxation: every (x >= mu) becomes (x >= mu - eps) and every
// (x <= mu) becomes (x <= mu + eps), leaving the logical structure intact.
// This shifts every score by exactly +eps.  Requires a negation-free
// formula; throws NegationPresentError otherwise.
Formula relax(const Formula& f, const Rat& eps);

}  // namespace stldist
