#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stldist/rational.hpp"

namespace stldist {

// Compact per-dimension value bounds of the signal space.
struct Domain {
  std::vector<std::pair<Rat, Rat>> bounds;  // [lo, hi] per dimension

  int dims() const { return static_cast<int>(bounds.size()); }
  Rat linf_diameter() const;
  bool contains(int dim, const Rat& v) const;

  static Domain unit(int dims);  // [0,1] in every dimension
};

// Finite discrete-time signal prefix s[0..T] with its value domain.  Samples
// are validated against the domain on construction.
class Trace {
 public:
  Trace(std::vector<std::vector<Rat>> values, Domain domain);

  int dims() const { return domain_.dims(); }
  int length() const { return static_cast<int>(values_.size()); }  // T + 1
  int max_time() const { return length() - 1; }                    // T
  const Rat& at(int t, int dim) const { return values_[t][dim]; }
  const std::vector<std::vector<Rat>>& values() const { return values_; }
  const Domain& domain() const { return domain_; }

 private:
  std::vector<std::vector<Rat>> values_;
  Domain domain_;
};

// Reads the CSV trace format: header "t,x1,...,xn", one row per step, times
// 0..T consecutive.  `source` names the input in error messages.
Trace load_trace_csv(std::istream& in, const Domain& domain,
                     const std::string& source);
Trace load_trace_csv_file(const std::string& path, const Domain& domain);

// Writes the same CSV format with exact decimal values.
void save_trace_csv(std::ostream& out, const Trace& trace);

}  // namespace stldist
