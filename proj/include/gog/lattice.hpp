#pragma once

// Entry-wise order on monotone triangles, with r-ary meet and join.

#include <functional>
#include <span>
#include <vector>

#include "gog/triangle.hpp"

namespace gog {

enum class OrderRelation { Less, Equal, Greater, Incomparable };

inline const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::Less: return "less";
    case OrderRelation::Equal: return "equal";
    case OrderRelation::Greater: return "greater";
    case OrderRelation::Incomparable: return "incomparable";
  }
  return "?";
}

inline OrderRelation compare(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "cannot compare sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  bool some_less = false;
  bool some_greater = false;
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    some_less |= x[k] < y[k];
    some_greater |= x[k] > y[k];
  }
  if (some_less && some_greater) return OrderRelation::Incomparable;
  if (some_less) return OrderRelation::Less;
  if (some_greater) return OrderRelation::Greater;
  return OrderRelation::Equal;
}

/// a <= b entry-wise.
inline bool leq(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  const auto rel = compare(a, b);
  return rel == OrderRelation::Less || rel == OrderRelation::Equal;
}

namespace detail {
template <class Pick>
MonotoneTriangle fold(std::span<const MonotoneTriangle> ts, Pick pick) {
  if (ts.empty()) throw Error(Errc::EmptyInput, "need at least one triangle");
  const int n = ts.front().size();
  std::vector<int> acc = ts.front().entries();
  for (const auto& t : ts.subspan(1)) {
    if (t.size() != n) throw Error(Errc::SizeMismatch, "sizes " + std::to_string(n) + " and " + std::to_string(t.size()));
    const auto& e = t.entries();
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = pick(acc[k], e[k]);
  }
  return validate_triangle(n, acc);
}
}  // namespace detail

/// Entry-wise minimum; the greatest lower bound.
inline MonotoneTriangle meet(std::span<const MonotoneTriangle> ts) {
  return detail::fold(ts, [](int x, int y) { return std::min(x, y); });
}
inline MonotoneTriangle meet(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  const MonotoneTriangle both[] = {a, b};
  return meet(both);
}

/// Entry-wise maximum; the least upper bound.
inline MonotoneTriangle join(std::span<const MonotoneTriangle> ts) {
  return detail::fold(ts, [](int x, int y) { return std::max(x, y); });
}
inline MonotoneTriangle join(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  const MonotoneTriangle both[] = {a, b};
  return join(both);
}

enum class LatticeOp { Meet, Join };

/// Meet mode: meet(ts) is the minimal triangle. Join mode: join(ts) is the maximal one.
inline bool is_trivial(std::span<const MonotoneTriangle> ts, LatticeOp which) {
  if (which == LatticeOp::Meet) {
    const auto m = meet(ts);
    return m == extremal_triangle(m.size(), Extreme::Min);
  }
  const auto j = join(ts);
  return j == extremal_triangle(j.size(), Extreme::Max);
}

}  // namespace gog
