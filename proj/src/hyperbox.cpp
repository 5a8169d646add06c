#include "stldist/hyperbox.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stldist {

bool HyperBox::nonempty() const {
  for (const auto& [lo, hi] : iv)
    if (lo > hi) return false;
  return true;
}

bool HyperBox::contains(const HyperBox& inner) const {
  for (size_t k = 0; k < iv.size(); ++k)
    if (inner.iv[k].first < iv[k].first || inner.iv[k].second > iv[k].second)
      return false;
  return true;
}

bool HyperBox::contains_point(const std::vector<Rat>& p) const {
  for (size_t k = 0; k < iv.size(); ++k)
    if (p[k] < iv[k].first || p[k] > iv[k].second) return false;
  return true;
}

std::optional<HyperBox> box_intersect(const HyperBox& a, const HyperBox& b) {
  HyperBox out;
  out.iv.reserve(a.iv.size());
  for (size_t k = 0; k < a.iv.size(); ++k) {
    Rat lo = std::max(a.iv[k].first, b.iv[k].first);
    Rat hi = std::min(a.iv[k].second, b.iv[k].second);
    if (lo > hi) return std::nullopt;
    out.iv.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

HyperBox box_inflate(const HyperBox& b, const Rat& r) {
  HyperBox out = b;
  for (auto& [lo, hi] : out.iv) {
    lo -= r;
    hi += r;
  }
  return out;
}

Rat boxes_union_measure(const std::vector<HyperBox>& boxes,
                        size_t cell_budget) {
  if (boxes.empty()) return Rat(0);
  const size_t k = boxes[0].coords();

  std::vector<std::vector<Rat>> coords(k);
  for (size_t c = 0; c < k; ++c) {
    std::set<Rat> vals;
    for (const auto& b : boxes) {
      if (!b.nonempty()) continue;
      vals.insert(b.iv[c].first);
      vals.insert(b.iv[c].second);
    }
    coords[c].assign(vals.begin(), vals.end());
    if (coords[c].size() < 2) coords[c].clear();  // degenerate axis: measure 0
  }
  size_t cells = 1;
  for (size_t c = 0; c < k; ++c) {
    if (coords[c].empty()) return Rat(0);
    cells *= coords[c].size() - 1;
    if (cells > cell_budget)
      throw std::runtime_error("union measure: cell budget exceeded");
  }

  // midpoints and widths per axis
  std::vector<std::vector<Rat>> mid(k), width(k);
  for (size_t c = 0; c < k; ++c) {
    for (size_t i = 0; i + 1 < coords[c].size(); ++i) {
      mid[c].push_back((coords[c][i] + coords[c][i + 1]) / 2);
      width[c].push_back(coords[c][i + 1] - coords[c][i]);
    }
  }

  Rat total(0);
  std::vector<size_t> idx(k, 0);
  std::vector<Rat> point(k);
  while (true) {
    Rat vol(1);
    for (size_t c = 0; c < k; ++c) {
      point[c] = mid[c][idx[c]];
      vol *= width[c][idx[c]];
    }
    for (const auto& b : boxes) {
      if (b.nonempty() && b.contains_point(point)) {
        total += vol;
        break;
      }
    }
    size_t c = 0;
    for (; c < k; ++c) {
      if (++idx[c] < mid[c].size()) break;
      idx[c] = 0;
    }
    if (c == k) break;
  }
  return total;
}

namespace {

// Closed subtraction piece generator: splits `piece` \ `b` into closed boxes,
// keeping shared faces on both sides.
void subtract_closed(const HyperBox& piece, const HyperBox& b,
                     std::vector<HyperBox>& out) {
  if (!box_intersect(piece, b)) {
    out.push_back(piece);
    return;
  }
  HyperBox cur = piece;
  for (size_t k = 0; k < piece.coords(); ++k) {
    if (cur.iv[k].first < b.iv[k].first) {
      HyperBox left = cur;
      left.iv[k].second = b.iv[k].first;
      out.push_back(std::move(left));
    }
    if (b.iv[k].second < cur.iv[k].second) {
      HyperBox right = cur;
      right.iv[k].first = b.iv[k].second;
      out.push_back(std::move(right));
    }
    cur.iv[k].first = std::max(cur.iv[k].first, b.iv[k].first);
    cur.iv[k].second = std::min(cur.iv[k].second, b.iv[k].second);
  }
}

}  // namespace

std::vector<HyperBox> boxes_complement(const std::vector<HyperBox>& boxes,
                                       const HyperBox& universe,
                                       size_t box_budget) {
  std::vector<HyperBox> pieces{universe};
  for (const auto& b : boxes) {
    if (!b.nonempty()) continue;
    std::vector<HyperBox> next;
    for (const auto& p : pieces) subtract_closed(p, b, next);
    if (next.size() > box_budget)
      throw std::runtime_error("complement: box budget exceeded");
    pieces = std::move(next);
  }
  prune_boxes(pieces);
  return pieces;
}

void prune_boxes(std::vector<HyperBox>& boxes) {
  std::erase_if(boxes, [](const HyperBox& b) { return !b.nonempty(); });
  std::vector<bool> dead(boxes.size(), false);
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = 0; j < boxes.size(); ++j) {
      if (i == j || dead[j]) continue;
      if (boxes[j].contains(boxes[i])) {
        // drop i; on exact duplicates keep the earlier one
        if (boxes[i].contains(boxes[j]) && i < j) continue;
        dead[i] = true;
        break;
      }
    }
  }
  size_t w = 0;
  for (size_t i = 0; i < boxes.size(); ++i)
    if (!dead[i]) boxes[w++] = std::move(boxes[i]);
  boxes.resize(w);
}

namespace {

// Half-open interval endpoint used by the exact coverage test.
struct FlaggedIv {
  Rat lo, hi;
  bool lo_open = false, hi_open = false;

  bool nonempty() const {
    if (lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
  }
};

struct Piece {
  std::vector<FlaggedIv> iv;
  size_t next_box = 0;

  bool nonempty() const {
    for (const auto& i : iv)
      if (!i.nonempty()) return false;
    return true;
  }
};

bool piece_meets_box(const Piece& p, const HyperBox& b) {
  for (size_t k = 0; k < p.iv.size(); ++k) {
    const auto& i = p.iv[k];
    const auto& [blo, bhi] = b.iv[k];
    if (i.hi < blo || (i.hi == blo && i.hi_open)) return false;
    if (i.lo > bhi || (i.lo == bhi && i.lo_open)) return false;
  }
  return true;
}

// piece \ closed box, exact with open boundaries facing the removed region.
void subtract_exact(const Piece& p, const HyperBox& b, size_t next_box,
                    std::vector<Piece>& out) {
  Piece cur = p;
  cur.next_box = next_box;
  for (size_t k = 0; k < p.iv.size(); ++k) {
    const auto& [blo, bhi] = b.iv[k];
    {
      Piece left = cur;
      left.iv[k].hi = blo;
      left.iv[k].hi_open = true;
      if (left.nonempty()) out.push_back(std::move(left));
    }
    {
      Piece right = cur;
      right.iv[k].lo = bhi;
      right.iv[k].lo_open = true;
      if (right.nonempty()) out.push_back(std::move(right));
    }
    if (cur.iv[k].lo < blo) {
      cur.iv[k].lo = blo;
      cur.iv[k].lo_open = false;
    }
    if (cur.iv[k].hi > bhi) {
      cur.iv[k].hi = bhi;
      cur.iv[k].hi_open = false;
    }
  }
}

}  // namespace

bool boxes_within_distance(const std::vector<HyperBox>& A,
                           const std::vector<HyperBox>& B, const Rat& r,
                           size_t piece_budget) {
  std::vector<HyperBox> infl;
  infl.reserve(B.size());
  for (const auto& b : B)
    if (b.nonempty()) infl.push_back(box_inflate(b, r));
  // larger boxes first: they kill pieces faster
  std::stable_sort(infl.begin(), infl.end(),
                   [](const HyperBox& x, const HyperBox& y) {
                     Rat vx(1), vy(1);
                     for (const auto& [lo, hi] : x.iv) vx *= hi - lo;
                     for (const auto& [lo, hi] : y.iv) vy *= hi - lo;
                     return vx > vy;
                   });

  size_t produced = 0;
  for (const auto& a : A) {
    if (!a.nonempty()) continue;
    Piece root;
    root.iv.reserve(a.coords());
    for (const auto& [lo, hi] : a.iv) root.iv.push_back({lo, hi});
    std::vector<Piece> stack{std::move(root)};
    while (!stack.empty()) {
      Piece p = std::move(stack.back());
      stack.pop_back();
      size_t j = p.next_box;
      while (j < infl.size() && !piece_meets_box(p, infl[j])) ++j;
      if (j == infl.size()) return false;  // an uncovered piece survives
      std::vector<Piece> children;
      subtract_exact(p, infl[j], j + 1, children);
      produced += children.size();
      if (produced > piece_budget)
        throw std::runtime_error("coverage test: piece budget exceeded");
      for (auto& c : children) stack.push_back(std::move(c));
    }
  }
  return true;
}

Rat directed_hausdorff_linf(const std::vector<HyperBox>& A,
                            const std::vector<HyperBox>& B,
                            size_t piece_budget) {
  std::vector<HyperBox> live_a, live_b;
  for (const auto& b : A)
    if (b.nonempty()) live_a.push_back(b);
  for (const auto& b : B)
    if (b.nonempty()) live_b.push_back(b);
  if (live_a.empty())
    throw std::invalid_argument("directed Hausdorff: empty source set");
  if (live_b.empty())
    throw std::invalid_argument("directed Hausdorff: empty target set");

  const size_t k = live_a[0].coords();
  std::set<Rat> cand;
  cand.insert(Rat(0));
  for (size_t c = 0; c < k; ++c) {
    std::set<Rat> ea, eb;
    for (const auto& b : live_a) {
      ea.insert(b.iv[c].first);
      ea.insert(b.iv[c].second);
    }
    for (const auto& b : live_b) {
      eb.insert(b.iv[c].first);
      eb.insert(b.iv[c].second);
    }
    for (const Rat& a : ea)
      for (const Rat& b : eb) cand.insert(abs(Rat(a - b)));
    for (auto i = eb.begin(); i != eb.end(); ++i)
      for (auto j = std::next(i); j != eb.end(); ++j)
        cand.insert(Rat(*j - *i) / 2);
  }

  std::vector<Rat> cs(cand.begin(), cand.end());
  if (!boxes_within_distance(live_a, live_b, cs.back(), piece_budget))
    throw std::logic_error("directed Hausdorff: no candidate radius covers");

  size_t lo = 0, hi = cs.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (boxes_within_distance(live_a, live_b, cs[mid], piece_budget))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cs[lo];
}

}  // namespace stldist
