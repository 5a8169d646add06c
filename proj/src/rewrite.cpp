#include "stldist/rewrite.hpp"

namespace stldist {

bool contains_negation(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Not:
      return true;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Until:
      return contains_negation(f.left()) || contains_negation(f.right());
    case NodeKind::Eventually:
    case NodeKind::Globally:
      return contains_negation(f.child());
    default:
      return false;
  }
}

bool contains_until(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Until:
      return true;
    case NodeKind::Not:
      return contains_until(f.child());
    case NodeKind::And:
    case NodeKind::Or:
      return contains_until(f.left()) || contains_until(f.right());
    case NodeKind::Eventually:
    case NodeKind::Globally:
      return contains_until(f.child());
    default:
      return false;
  }
}

Formula expand_until(const Formula& f) {
  if (f.kind() != NodeKind::Until)
    throw std::invalid_argument("expand_until: not an until node");
  Interval w = f.window();
  Formula result;
  for (int d = w.lo; d <= w.hi; ++d) {
    Formula arm = Formula::globally(Interval{d, d}, f.right());
    arm = Formula::conj(arm, Formula::globally(Interval{0, d}, f.left()));
    result = result.valid() ? Formula::disj(result, arm) : arm;
  }
  return result;
}

namespace {

Formula nnf_pos(const Formula& f);

Formula nnf_neg(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::True:
      return Formula::bottom();
    case NodeKind::False:
      return Formula::top();
    case NodeKind::Pred: {
      const Predicate& p = f.predicate();
      return Formula::pred(p.dim, p.op == Cmp::Le ? Cmp::Ge : Cmp::Le,
                           p.threshold);
    }
    case NodeKind::Not:
      return nnf_pos(f.child());
    case NodeKind::And:
      return Formula::disj(nnf_neg(f.left()), nnf_neg(f.right()));
    case NodeKind::Or:
      return Formula::conj(nnf_neg(f.left()), nnf_neg(f.right()));
    case NodeKind::Eventually:
      return Formula::globally(f.window(), nnf_neg(f.child()));
    case NodeKind::Globally:
      return Formula::eventually(f.window(), nnf_neg(f.child()));
    case NodeKind::Until:
      return nnf_neg(expand_until(f));
  }
  throw std::logic_error("unreachable formula kind");
}

Formula nnf_pos(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::True:
    case NodeKind::False:
    case NodeKind::Pred:
      return f;
    case NodeKind::Not:
      return nnf_neg(f.child());
    case NodeKind::And:
      return Formula::conj(nnf_pos(f.left()), nnf_pos(f.right()));
    case NodeKind::Or:
      return Formula::disj(nnf_pos(f.left()), nnf_pos(f.right()));
    case NodeKind::Until:
      return Formula::until(nnf_pos(f.left()), f.window(), nnf_pos(f.right()));
    case NodeKind::Eventually:
      return Formula::eventually(f.window(), nnf_pos(f.child()));
    case NodeKind::Globally:
      return Formula::globally(f.window(), nnf_pos(f.child()));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf_pos(f); }

Formula relax(const Formula& f, const Rat& eps) {
  switch (f.kind()) {
    case NodeKind::True:
    case NodeKind::False:
      return f;
    case NodeKind::Pred: {
      const Predicate& p = f.predicate();
      return Formula::pred(p.dim, p.op,
                           p.op == Cmp::Le ? Rat(p.threshold + eps)
                                           : Rat(p.threshold - eps));
    }
    case NodeKind::Not:
      throw NegationPresentError();
    case NodeKind::And:
      return Formula::conj(relax(f.left(), eps), relax(f.right(), eps));
    case NodeKind::Or:
      return Formula::disj(relax(f.left(), eps), relax(f.right(), eps));
    case NodeKind::Until:
      return Formula::until(relax(f.left(), eps), f.window(),
                            relax(f.right(), eps));
    case NodeKind::Eventually:
      return Formula::eventually(f.window(), relax(f.child(), eps));
    case NodeKind::Globally:
      return Formula::globally(f.window(), relax(f.child(), eps));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace stldist
