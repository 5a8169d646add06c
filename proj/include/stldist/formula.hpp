#pragma once

#include <memory>
#include <string>

#include "stldist/rational.hpp"

namespace stldist {

// Discrete time window [lo, hi] attached to a temporal operator, interpreted
// as the step set {lo, lo+1, ..., hi}.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool operator==(const Interval&) const = default;
};

enum class Cmp { Le, Ge };

// Rectangular predicate over one signal component: x<dim> <= mu or
// x<dim> >= mu.  `dim` is 0-based internally; surface syntax is 1-based.
struct Predicate {
  int dim = 0;
  Cmp op = Cmp::Le;
  Rat threshold;
  bool operator==(const Predicate& o) const {
    return dim == o.dim && op == o.op && threshold == o.threshold;
  }
};

enum class NodeKind {
  True,
  False,  // not parseable; introduced by negation normal form of !T
  Pred,
  Not,
  And,
  Or,
  Until,
  Eventually,
  Globally,
};

// Immutable STL formula.  A Formula is a cheap shared handle to a const node
// tree; all constructors validate their arguments.  Safe to share across
// threads.
class Formula {
 public:
  Formula() = default;

  static Formula top();
  static Formula bottom();
  static Formula pred(int dim, Cmp op, Rat threshold);
  static Formula pred(const Predicate& p);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula until(Formula a, Interval w, Formula b);
  static Formula eventually(Interval w, Formula f);
  static Formula globally(Interval w, Formula f);

  bool valid() const { return node_ != nullptr; }
  NodeKind kind() const;
  const Predicate& predicate() const;  // kind() == Pred
  Interval window() const;             // temporal kinds
  const Formula& child() const;        // Not / Eventually / Globally
  const Formula& left() const;         // And / Or / Until
  const Formula& right() const;

  // Stable identity of the underlying node, usable as a memoization key.
  const void* id() const { return node_.get(); }

  bool operator==(const Formula& o) const;  // structural equality

  // Minimum trace window length needed to evaluate the formula at one step.
  int horizon() const;

  // Grammar text; parse_formula(to_string(), dims) reconstructs the formula
  // structurally for any parser-produced tree.  False renders as "!T".
  std::string to_string() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace stldist
