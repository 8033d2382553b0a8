#pragma once

// Exact counts of r-tuples with trivial meet (every row distinguished in some
// component), computed two independent ways, plus the class decomposition by
// longest distinguished block and the first/second-order term reports.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <vector>

#include "gog/bignum.hpp"
#include "gog/counting.hpp"
#include "gog/enumeration.hpp"
#include "gog/lattice.hpp"
#include "gog/triangle.hpp"

namespace gog {

inline constexpr int kDefaultInclusionExclusionLimit = 18;

namespace detail {

/// #{τ : D(τ) ∩ T = ∅} from the gap recursion; `a` holds A(0..n).
inline BigInt avoid_count(int n, std::uint64_t t_bits, const std::vector<BigCount>& a) {
  std::vector<int> t;
  std::vector<BigInt> s;
  BigInt g = a[n];
  while (t_bits != 0) {
    const int tj = std::countr_zero(t_bits) + 1;
    t_bits &= t_bits - 1;
    BigInt sj = -a[tj];
    for (std::size_t i = 0; i < t.size(); ++i) sj -= s[i] * a[tj - t[i]];
    g += sj * a[n - tj];
    t.push_back(tj);
    s.push_back(std::move(sj));
  }
  return g;
}

inline BigInt alternating_power_sum(std::uint64_t lo, std::uint64_t hi, unsigned r,
                                    const std::function<BigInt(std::uint64_t)>& avoid) {
  BigInt acc = 0;
  for (std::uint64_t t = lo; t < hi; ++t) {
    BigInt term = pow(avoid(t), r);
    if (std::popcount(t) & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

/// sum_{T ⊆ [n-1]} (-1)^|T| avoid(T)^r, split over `workers` bitmask ranges.
inline BigInt outer_inclusion_exclusion(int n, int r, int workers, const std::function<BigInt(std::uint64_t)>& avoid) {
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  const auto ur = static_cast<unsigned>(r);
  if (workers <= 1 || subsets < 64) return alternating_power_sum(0, subsets, ur, avoid);
  std::vector<std::future<BigInt>> parts;
  const std::uint64_t chunk = (subsets + workers - 1) / workers;
  for (std::uint64_t lo = 0; lo < subsets; lo += chunk) {
    const std::uint64_t hi = std::min(subsets, lo + chunk);
    parts.push_back(std::async(std::launch::async, [lo, hi, ur, &avoid] { return alternating_power_sum(lo, hi, ur, avoid); }));
  }
  BigInt total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

inline void check_r(int r) {
  if (r < 1) throw Error(Errc::IndexOutOfRange, "r must be positive");
}

}  // namespace detail

/// g(T) = #{τ ∈ M_n : D(τ) ∩ T = ∅} = sum_{U ⊆ T} (-1)^|U| eta_n(U), in
/// O(|T|^2) big-integer operations.
inline BigCount avoid_count(int n, const RowSet& t_set) {
  if (n < 1) throw Error(Errc::RowOutOfRange, "n must be positive");
  for (int i : t_set.members())
    if (i >= n) throw Error(Errc::RowOutOfRange, "row " + std::to_string(i) + " is not in [n-1]");
  return detail::avoid_count(n, t_set.bits(), asm_table(n));
}

/// Number of r-tuples whose meet is the minimal triangle, by inclusion-exclusion
/// over the rows left uncovered.
inline BigCount n_min_exact(int n, int r, int workers = 1, int limit = kDefaultInclusionExclusionLimit) {
  detail::check_limit(n, limit, "inclusion-exclusion");
  detail::check_r(r);
  const auto a = asm_table(n);
  return detail::outer_inclusion_exclusion(n, r, workers, [&](std::uint64_t t) { return detail::avoid_count(n, t, a); });
}

/// Number of r-tuples whose rows are covered, drawing each component from a
/// weighted family of row sets (every key must contain row n). Subset sums
/// over the lower n-1 bits give each avoid count in O(1).
inline BigCount covering_tuple_count(int n, int r, const std::map<std::uint64_t, BigCount>& weights) {
  detail::check_r(r);
  const std::uint64_t lower = (std::uint64_t{1} << (n - 1)) - 1;
  std::vector<BigCount> within(lower + 1, 0);  // within[S] = total weight of keys inside S ∪ {n}
  for (const auto& [bits, w] : weights) within[bits & lower] += w;
  for (int b = 0; b < n - 1; ++b)
    for (std::uint64_t s = 0; s <= lower; ++s)
      if ((s >> b) & 1U) within[s] += within[s ^ (std::uint64_t{1} << b)];
  return detail::outer_inclusion_exclusion(n, r, 1, [&](std::uint64_t t) { return BigInt(within[lower & ~t]); });
}

/// Same count as n_min_exact, taken from the exact distinguished-set census.
inline BigCount n_min_census(int n, int r, const CensusTable& census) {
  if (census.n != n) throw Error(Errc::SizeMismatch, "census is for n=" + std::to_string(census.n));
  return covering_tuple_count(n, r, census.counts);
}
inline BigCount n_min_census(int n, int r, int workers = 1, int limit = kDefaultEnumerationLimit) {
  detail::check_r(r);
  return n_min_census(n, r, build_census(n, workers, limit));
}

/// Census of maximal rows taken over the rank-reversed triangles.
inline CensusTable build_reversed_max_census(int n, int workers = 1, int limit = kDefaultEnumerationLimit) {
  return build_row_census(n, [](const MonotoneTriangle& t) { return maximal_rows(rank_reverse(t)); }, workers, limit);
}

/// Min: N_min / A(n)^r. Max: r-tuples with trivial join, counted from the
/// maximal-row census of rank-reversed triangles (enumeration limit applies).
inline BigRational p_extreme(int n, int r, Extreme which, int workers = 1) {
  detail::check_r(r);
  BigCount hits;
  if (which == Extreme::Min) {
    hits = n_min_exact(n, r, workers);
  } else {
    hits = covering_tuple_count(n, r, build_reversed_max_census(n, workers).counts);
  }
  return BigRational(hits, pow(asm_number(n), static_cast<unsigned>(r)));
}

// ---------------------------------------------------------------------------
// Classes by longest distinguished block

/// |C_L| for L = n, n-1, ..., n-6r (L >= 1): trivial-meet tuples with some
/// component whose longest distinguished block is exactly L. Membership is
/// not exclusive. `at_most` counts tuples where every block is <= at_most_run.
struct ClassSizes {
  int n = 0;
  int r = 0;
  std::map<int, BigCount, std::greater<>> exact;
  int at_most_run = 0;
  BigCount at_most = 0;
};

inline ClassSizes class_sizes(int n, int r, const CensusTable& census) {
  detail::check_r(r);
  if (census.n != n) throw Error(Errc::SizeMismatch, "census is for n=" + std::to_string(census.n));
  auto restricted = [&](auto keep) {
    std::map<std::uint64_t, BigCount> w;
    for (const auto& [bits, c] : census.counts)
      if (keep(max_consecutive_run(bits))) w.emplace(bits, c);
    return covering_tuple_count(n, r, w);
  };
  ClassSizes out;
  out.n = n;
  out.r = r;
  const BigCount all = covering_tuple_count(n, r, census.counts);
  for (int i = 0; i <= 6 * r && n - i >= 1; ++i) {
    const int run = n - i;
    out.exact[run] = all - restricted([run](int L) { return L != run; });
  }
  out.at_most_run = n - 6 * r - 1;
  const int cap = out.at_most_run;
  out.at_most = cap >= 1 ? restricted([cap](int L) { return L <= cap; }) : BigCount(0);
  return out;
}
inline ClassSizes class_sizes(int n, int r, int workers = 1, int limit = kDefaultEnumerationLimit) {
  return class_sizes(n, r, build_census(n, workers, limit));
}

/// Upper bound on |C_{n-i}|: r A(n)^{r-1} for i = 0, r(r-1) A(n-1) A(n)^{r-2}
/// for i = 1, and r(r-1)^2 i A(i+1) A(i) A(n-i+1) A(n)^{r-2} for 2 <= i <= 6r.
/// Empty when the bound is undefined (r = 1 with i >= 1, or i outside [0, 6r]).
inline std::optional<BigCount> class_bound(int n, int r, int i) {
  detail::check_r(r);
  if (i < 0 || i > 6 * r || i >= n) return std::nullopt;
  const BigCount an = asm_number(n);
  const BigCount ur = r;
  if (i == 0) return ur * pow(an, static_cast<unsigned>(r - 1));
  if (r < 2) return std::nullopt;
  const BigCount tail = pow(an, static_cast<unsigned>(r - 2));
  if (i == 1) return ur * (r - 1) * asm_number(n - 1) * tail;
  return ur * (r - 1) * (r - 1) * i * asm_number(i + 1) * asm_number(i) * asm_number(n - i + 1) * tail;
}

/// Longest-block histogram, checked against the block counts 1, 1, 6 at
/// runs n, n-1, n-2 and A(n) - 8 at runs <= n-3.
struct BlockReport {
  RunHistogram histogram;
  BigCount at_most_n_minus_3 = 0;
  bool top_counts_match = false;  // (1, 1, 6)
  bool tail_matches = false;      // A(n) - 8
};

inline BlockReport run_histogram_report(const CensusTable& census) {
  BlockReport rep;
  rep.histogram = run_histogram(census);
  const int n = census.n;
  for (const auto& [run, c] : rep.histogram.counts)
    if (run <= n - 3) rep.at_most_n_minus_3 += c;
  rep.top_counts_match = rep.histogram.at(n) == 1 && rep.histogram.at(n - 1) == 1 && rep.histogram.at(n - 2) == 6;
  rep.tail_matches = rep.at_most_n_minus_3 == asm_number(n) - 8;
  return rep;
}
inline BlockReport run_histogram_report(int n, int workers = 1, int limit = kDefaultEnumerationLimit) {
  return run_histogram_report(build_census(n, workers, limit));
}

// ---------------------------------------------------------------------------
// Theorem reports

struct MeetCensusReport {
  int n = 0;
  int r = 0;
  BigCount n_min;
  BigRational p_min;
  BigRational ratio;   // p_min A(n) / r
  BigCount main_term;  // r A(n)^{r-1}
  BigCount second_term;  // 2 r (r-1) A(n-1) A(n)^{r-2}
  BigInt error_term;   // n_min - main - second
  BigRational theta_ratio;  // error / (A(n-2) A(n)^{r-2})
};

inline MeetCensusReport meet_census_report(int n, int r, int workers = 1) {
  detail::check_r(r);
  if (n < 2) throw Error(Errc::IndexOutOfRange, "reports start at n = 2");
  MeetCensusReport rep;
  rep.n = n;
  rep.r = r;
  rep.n_min = n_min_exact(n, r, workers);
  const BigCount an = asm_number(n);
  const BigCount ur = r;
  rep.p_min = BigRational(rep.n_min, pow(an, static_cast<unsigned>(r)));
  rep.ratio = rep.p_min * BigRational(an, ur);
  rep.main_term = ur * pow(an, static_cast<unsigned>(r - 1));
  if (r >= 2) {
    const BigCount tail = pow(an, static_cast<unsigned>(r - 2));
    rep.second_term = 2 * ur * (r - 1) * asm_number(n - 1) * tail;
    rep.error_term = rep.n_min - rep.main_term - rep.second_term;
    rep.theta_ratio = BigRational(rep.error_term, asm_number(n - 2) * tail);
  } else {
    // r = 1: n_min = main = 1, nothing left over.
    rep.second_term = 0;
    rep.error_term = rep.n_min - rep.main_term;
    rep.theta_ratio = 0;
  }
  return rep;
}

/// One report per n = 2..n_max.
inline std::vector<MeetCensusReport> theorem_report(int n_max, int r, int workers = 1) {
  detail::check_limit(n_max, kDefaultInclusionExclusionLimit, "inclusion-exclusion");
  std::vector<MeetCensusReport> out;
  for (int n = 2; n <= n_max; ++n) out.push_back(meet_census_report(n, r, workers));
  return out;
}

/// 8 (r-1) (2/3)^{n-1}: allowed distance of p_min A(n) / r from 1.
inline BigRational theorem1_tolerance(int n, int r) {
  return BigRational(BigInt(8) * (r - 1) * pow(BigInt(2), static_cast<unsigned>(n - 1)),
                     pow(BigInt(3), static_cast<unsigned>(n - 1)));
}

}  // namespace gog
