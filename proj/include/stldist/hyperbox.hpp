#pragma once

#include <optional>
#include <vector>

#include "stldist/rational.hpp"

namespace stldist {

// Closed axis-aligned box in R^k, stored as one [lo, hi] interval per
// coordinate.  The box is empty when any interval has lo > hi; degenerate
// (point) coordinates are allowed.
struct HyperBox {
  std::vector<std::pair<Rat, Rat>> iv;

  size_t coords() const { return iv.size(); }
  bool nonempty() const;
  bool contains(const HyperBox& inner) const;
  bool contains_point(const std::vector<Rat>& p) const;
};

std::optional<HyperBox> box_intersect(const HyperBox& a, const HyperBox& b);
HyperBox box_inflate(const HyperBox& b, const Rat& r);

// Exact Lebesgue measure of a union of boxes, by sweeping the coordinate
// arrangement and testing cell midpoints.  Throws std::runtime_error when
// the arrangement would exceed `cell_budget` cells.
Rat boxes_union_measure(const std::vector<HyperBox>& boxes,
                        size_t cell_budget = 50'000'000);

// Closed complement of a box union within `universe`, as a box union.
// Shared faces remain in both the union and its complement (closed-sets
// convention), so the result is the closure of the set difference.
std::vector<HyperBox> boxes_complement(const std::vector<HyperBox>& boxes,
                                       const HyperBox& universe,
                                       size_t box_budget);

// Drops empty boxes and boxes contained in another box of the set.
void prune_boxes(std::vector<HyperBox>& boxes);

// True when every point of union(A) lies within L-infinity distance r of
// union(B), decided exactly (boundary-touching counts as covered).
bool boxes_within_distance(const std::vector<HyperBox>& A,
                           const std::vector<HyperBox>& B, const Rat& r,
                           size_t piece_budget = 2'000'000);

// Directed Hausdorff distance under L-infinity from union(A) to union(B):
// sup over points of A of the distance to B.  Both unions must be nonempty.
//
// The value is found by searching a finite candidate-radius set.  As r grows,
// the faces of the inflated B-boxes move linearly, so the uncovered region
// A \ (B + r*ball) changes combinatorially only where two face positions in
// the same coordinate meet: either a fixed A-face meets an inflated B-face
// (r = |a - b|) or two opposing inflated faces meet (r = (b' - b) / 2).  The
// minimal covering radius is therefore one of those values, and coverage is
// monotone in r, so a binary search over the sorted candidates is exact.
Rat directed_hausdorff_linf(const std::vector<HyperBox>& A,
                            const std::vector<HyperBox>& B,
                            size_t piece_budget = 2'000'000);

}  // namespace stldist
