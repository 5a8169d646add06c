#include "stldist/parser.hpp"

#include <cctype>

namespace stldist {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dims) : text_(text), dims_(dims) {}

  Formula run() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  std::string_view text_;
  int dims_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  int parse_nat(const char* what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    long v = 0;
    for (size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > 1'000'000'000L) fail("time bound too large");
    }
    return static_cast<int>(v);
  }

  Interval parse_interval() {
    expect('[', "to open a time interval");
    int lo = parse_nat("interval lower bound");
    expect(',', "between interval bounds");
    int hi = parse_nat("interval upper bound");
    expect(']', "to close the interval");
    if (hi < lo) fail("interval lower bound exceeds upper bound");
    return Interval{lo, hi};
  }

  Rat parse_number() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    bool any = false;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == '/'))
      ++pos_, any = true;
    if (!any) fail("expected a numeric threshold");
    try {
      return rat_from_string(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed numeric threshold");
    }
  }

  // A temporal operator letter counts only when followed by '['; this keeps
  // room for future bare identifiers.
  bool at_temporal(char letter) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != letter) return false;
    size_t look = pos_ + 1;
    while (look < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[look])))
      ++look;
    return look < text_.size() && text_[look] == '[';
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (consume('|')) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (consume('&')) f = Formula::conj(f, parse_until());
    return f;
  }

  Formula parse_until() {
    Formula lhs = parse_unary();
    if (at_temporal('U')) {
      ++pos_;
      Interval w = parse_interval();
      Formula rhs = parse_until();  // right-associative
      return Formula::until(lhs, w, rhs);
    }
    return lhs;
  }

  Formula parse_unary() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      Formula f = parse_unary();
      if (f.kind() == NodeKind::True) return Formula::bottom();
      if (f.kind() == NodeKind::False) return Formula::top();
      return Formula::negate(f);
    }
    if (at_temporal('F')) {
      ++pos_;
      Interval w = parse_interval();
      return Formula::eventually(w, parse_unary());
    }
    if (at_temporal('G')) {
      ++pos_;
      Interval w = parse_interval();
      return Formula::globally(w, parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      expect(')', "to close the group");
      return f;
    }
    if (c == 'T') {
      ++pos_;
      return Formula::top();
    }
    if (c == 'x') {
      ++pos_;
      int idx = parse_nat("signal component index after 'x'");
      if (idx < 1 || idx > dims_)
        fail("predicate dimension x" + std::to_string(idx) +
             " out of range 1.." + std::to_string(dims_));
      skip_ws();
      Cmp op;
      if (pos_ + 1 < text_.size() && text_[pos_] == '<' && text_[pos_ + 1] == '=') {
        op = Cmp::Le;
      } else if (pos_ + 1 < text_.size() && text_[pos_] == '>' &&
                 text_[pos_ + 1] == '=') {
        op = Cmp::Ge;
      } else {
        fail("expected '<=' or '>=' in predicate");
      }
      pos_ += 2;
      Rat mu = parse_number();
      return Formula::pred(idx - 1, op, std::move(mu));
    }
    fail("expected a formula");
  }
};

}  // namespace

Formula parse_formula(std::string_view text, int dims) {
  if (dims < 1) throw std::invalid_argument("dims must be positive");
  return Parser(text, dims).run();
}

}  // namespace stldist
