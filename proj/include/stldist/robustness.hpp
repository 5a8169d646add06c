#pragma once

#include <stdexcept>
#include <string>

#include "stldist/formula.hpp"
#include "stldist/trace.hpp"

namespace stldist {

// Robustness of the truth constants is +/- infinity, so scores form the
// extended rational line.  Finite values stay exact.
class RVal {
 public:
  static RVal finite(Rat q) { return RVal(0, std::move(q)); }
  static RVal pos_inf() { return RVal(+1, Rat(0)); }
  static RVal neg_inf() { return RVal(-1, Rat(0)); }

  bool is_finite() const { return cls_ == 0; }
  bool is_pos_inf() const { return cls_ > 0; }
  bool is_neg_inf() const { return cls_ < 0; }
  const Rat& value() const {
    if (!is_finite()) throw std::logic_error("infinite robustness value");
    return q_;
  }

  // satisfaction convention: score >= 0 satisfies
  bool sat() const { return cls_ > 0 || (cls_ == 0 && q_ >= 0); }

  RVal operator-() const { return RVal(-cls_, -q_); }
  RVal operator+(const Rat& delta) const {
    return cls_ == 0 ? finite(q_ + delta) : *this;
  }

  friend bool operator<(const RVal& a, const RVal& b) {
    if (a.cls_ != b.cls_) return a.cls_ < b.cls_;
    return a.cls_ == 0 && a.q_ < b.q_;
  }
  friend bool operator==(const RVal& a, const RVal& b) {
    return a.cls_ == b.cls_ && (a.cls_ != 0 || a.q_ == b.q_);
  }

  std::string to_string() const {
    if (cls_ > 0) return "+inf";
    if (cls_ < 0) return "-inf";
    return rat_to_string(q_);
  }

 private:
  RVal(int cls, Rat q) : cls_(cls), q_(std::move(q)) {}
  int cls_;
  Rat q_;
};

class TraceTooShortError : public std::runtime_error {
 public:
  TraceTooShortError(int required_horizon, int start, int trace_max_time)
      : std::runtime_error(
            "trace too short: evaluating at t=" + std::to_string(start) +
            " requires horizon " + std::to_string(required_horizon) +
            " (samples up to t=" + std::to_string(start + required_horizon) +
            "), trace ends at t=" + std::to_string(trace_max_time)) {}
};

// Quantitative robustness score rho(s, f, t) under min/max semantics.
// Requires t + f.horizon() <= s.max_time().
RVal robustness(const Trace& s, const Formula& f, int t);

}  // namespace stldist
