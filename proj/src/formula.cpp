#include "stldist/formula.hpp"

#include <stdexcept>

namespace stldist {

struct Formula::Node {
  NodeKind kind;
  Predicate pred;
  Interval window;
  Formula a, b;
};

namespace {

Interval checked(Interval w) {
  if (w.lo < 0 || w.hi < w.lo)
    throw std::invalid_argument("invalid temporal interval [" +
                                std::to_string(w.lo) + "," +
                                std::to_string(w.hi) + "]");
  return w;
}

void require(const Formula& f, const char* who) {
  if (!f.valid()) throw std::invalid_argument(std::string(who) + ": null operand");
}

}  // namespace

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{NodeKind::True, {}, {}, {}, {}});
  return Formula(n);
}

Formula Formula::bottom() {
  static const auto n = std::make_shared<const Node>(Node{NodeKind::False, {}, {}, {}, {}});
  return Formula(n);
}

Formula Formula::pred(int dim, Cmp op, Rat threshold) {
  if (dim < 0) throw std::invalid_argument("predicate dimension must be >= 0");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Pred, Predicate{dim, op, std::move(threshold)}, {}, {}, {}}));
}

Formula Formula::pred(const Predicate& p) { return pred(p.dim, p.op, p.threshold); }

Formula Formula::negate(Formula f) {
  require(f, "negate");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Not, {}, {}, std::move(f), {}}));
}

Formula Formula::conj(Formula a, Formula b) {
  require(a, "conj");
  require(b, "conj");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::And, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::disj(Formula a, Formula b) {
  require(a, "disj");
  require(b, "disj");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Or, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::until(Formula a, Interval w, Formula b) {
  require(a, "until");
  require(b, "until");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Until, {}, checked(w), std::move(a), std::move(b)}));
}

Formula Formula::eventually(Interval w, Formula f) {
  require(f, "eventually");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Eventually, {}, checked(w), std::move(f), {}}));
}

Formula Formula::globally(Interval w, Formula f) {
  require(f, "globally");
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Globally, {}, checked(w), std::move(f), {}}));
}

NodeKind Formula::kind() const { return node_->kind; }

const Predicate& Formula::predicate() const {
  if (node_->kind != NodeKind::Pred) throw std::logic_error("not a predicate");
  return node_->pred;
}

Interval Formula::window() const { return node_->window; }

const Formula& Formula::child() const { return node_->a; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case NodeKind::True:
    case NodeKind::False:
      return true;
    case NodeKind::Pred:
      return node_->pred == o.node_->pred;
    case NodeKind::Not:
      return node_->a == o.node_->a;
    case NodeKind::And:
    case NodeKind::Or:
      return node_->a == o.node_->a && node_->b == o.node_->b;
    case NodeKind::Until:
      return node_->window == o.node_->window && node_->a == o.node_->a &&
             node_->b == o.node_->b;
    case NodeKind::Eventually:
    case NodeKind::Globally:
      return node_->window == o.node_->window && node_->a == o.node_->a;
  }
  return false;
}

int Formula::horizon() const {
  switch (kind()) {
    case NodeKind::True:
    case NodeKind::False:
    case NodeKind::Pred:
      return 0;
    case NodeKind::Not:
      return child().horizon();
    case NodeKind::And:
    case NodeKind::Or:
      return std::max(left().horizon(), right().horizon());
    case NodeKind::Until:
      return window().hi + std::max(left().horizon(), right().horizon());
    case NodeKind::Eventually:
    case NodeKind::Globally:
      return window().hi + child().horizon();
  }
  return 0;
}

namespace {

// Print precedence: | < & < U < prefix (!, F, G) < atoms.
enum Prec { kOr = 0, kAnd = 1, kUntil = 2, kUnary = 3, kAtom = 4 };

int prec_of(NodeKind k) {
  switch (k) {
    case NodeKind::Or:
      return kOr;
    case NodeKind::And:
      return kAnd;
    case NodeKind::Until:
      return kUntil;
    case NodeKind::Not:
    case NodeKind::Eventually:
    case NodeKind::Globally:
      return kUnary;
    default:
      return kAtom;
  }
}

void print(const Formula& f, int ctx, std::string& out) {
  int p = prec_of(f.kind());
  bool paren = p < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case NodeKind::True:
      out += 'T';
      break;
    case NodeKind::False:
      out += "!T";
      break;
    case NodeKind::Pred: {
      const Predicate& pr = f.predicate();
      out += 'x';
      out += std::to_string(pr.dim + 1);
      out += pr.op == Cmp::Le ? " <= " : " >= ";
      out += rat_to_string(pr.threshold);
      break;
    }
    case NodeKind::Not:
      out += '!';
      print(f.child(), kUnary, out);
      break;
    case NodeKind::And:
      // left-associative chain; parenthesize an And on the right
      print(f.left(), kAnd, out);
      out += " & ";
      print(f.right(), kAnd + 1, out);
      break;
    case NodeKind::Or:
      print(f.left(), kOr, out);
      out += " | ";
      print(f.right(), kOr + 1, out);
      break;
    case NodeKind::Until:
      // right-associative chain
      print(f.left(), kUntil + 1, out);
      out += " U[";
      out += std::to_string(f.window().lo);
      out += ',';
      out += std::to_string(f.window().hi);
      out += "] ";
      print(f.right(), kUntil, out);
      break;
    case NodeKind::Eventually:
    case NodeKind::Globally:
      out += f.kind() == NodeKind::Eventually ? 'F' : 'G';
      out += '[';
      out += std::to_string(f.window().lo);
      out += ',';
      out += std::to_string(f.window().hi);
      out += "] ";
      print(f.child(), kUnary, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, kOr, out);
  return out;
}

}  // namespace stldist
