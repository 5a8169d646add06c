#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "stldist/formula.hpp"

namespace stldist {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Parses the formula grammar
//
//   phi  := "T" | pred | "!" phi | phi "&" phi | phi "|" phi
//         | phi "U[" a "," b "]" phi
//         | "F[" a "," b "]" phi | "G[" a "," b "]" phi | "(" phi ")"
//   pred := "x" index ("<=" | ">=") decimal
//
// with precedence ! > temporal > & > |, left-associative & and |,
// right-associative U, and insignificant whitespace.  '#' starts a comment
// running to end of line.  Thresholds also accept exact fractions "p/q" so
// printed formulae always re-parse.  "!" applied directly to "T" normalizes
// to the bottom constant so that negation-normal-form output re-parses to
// itself.
//
// `dims` is the declared signal dimensionality; predicates referencing a
// component outside 1..dims are rejected.
Formula parse_formula(std::string_view text, int dims);

}  // namespace stldist
