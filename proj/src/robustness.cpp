#include "stldist/robustness.hpp"

#include <map>
#include <utility>

namespace stldist {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Trace& s) : s_(s) {}

  RVal eval(const Formula& f, int t) {
    auto key = std::make_pair(f.id(), t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RVal v = compute(f, t);
    memo_.emplace(key, v);
    return v;
  }

 private:
  RVal compute(const Formula& f, int t) {
    switch (f.kind()) {
      case NodeKind::True:
        return RVal::pos_inf();
      case NodeKind::False:
        return RVal::neg_inf();
      case NodeKind::Pred: {
        const Predicate& p = f.predicate();
        const Rat& x = s_.at(t, p.dim);
        return RVal::finite(p.op == Cmp::Le ? Rat(p.threshold - x)
                                            : Rat(x - p.threshold));
      }
      case NodeKind::Not:
        return -eval(f.child(), t);
      case NodeKind::And:
        return std::min(eval(f.left(), t), eval(f.right(), t));
      case NodeKind::Or:
        return std::max(eval(f.left(), t), eval(f.right(), t));
      case NodeKind::Eventually: {
        Interval w = f.window();
        RVal best = eval(f.child(), t + w.lo);
        for (int d = w.lo + 1; d <= w.hi; ++d)
          best = std::max(best, eval(f.child(), t + d));
        return best;
      }
      case NodeKind::Globally: {
        Interval w = f.window();
        RVal worst = eval(f.child(), t + w.lo);
        for (int d = w.lo + 1; d <= w.hi; ++d)
          worst = std::min(worst, eval(f.child(), t + d));
        return worst;
      }
      case NodeKind::Until: {
        Interval w = f.window();
        bool first = true;
        RVal best = RVal::neg_inf();
        for (int d = w.lo; d <= w.hi; ++d) {
          RVal v = eval(f.right(), t + d);
          for (int k = 0; k <= d; ++k)
            v = std::min(v, eval(f.left(), t + k));
          best = first ? v : std::max(best, v);
          first = false;
        }
        return best;
      }
    }
    throw std::logic_error("unreachable formula kind");
  }

  const Trace& s_;
  std::map<std::pair<const void*, int>, RVal> memo_;
};

}  // namespace

RVal robustness(const Trace& s, const Formula& f, int t) {
  if (t < 0) throw std::invalid_argument("evaluation time must be >= 0");
  int h = f.horizon();
  if (t + h > s.max_time()) throw TraceTooShortError(h, t, s.max_time());
  return Evaluator(s).eval(f, t);
}

}  // namespace stldist
