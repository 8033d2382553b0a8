#pragma once

// Exact values of A(n) and of the distinguished-row counts built from it,
// plus the inequality margins that the asymptotic argument rests on.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <random>
#include <vector>

#include "gog/bignum.hpp"
#include "gog/triangle.hpp"

namespace gog {

inline constexpr int kDefaultDpLimit = 12;

namespace detail {

inline BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

/// prod_{k<n} (3k+1)! / (n+k)!, as one exact division.
inline BigCount asm_product_formula(int n) {
  BigInt num = 1;
  BigInt den = 1;
  for (int k = 0; k < n; ++k) {
    num *= factorial(3 * k + 1);
    den *= factorial(n + k);
  }
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("A(" + std::to_string(n) + ") division left a remainder");
  return quot;
}

struct AsmCache {
  std::mutex mu;
  std::vector<BigCount> values;  // values[n] = A(n); append-only
};

inline AsmCache& asm_cache() {
  static AsmCache cache;
  return cache;
}

}  // namespace detail

/// A(n), the number of monotone triangles of size n; A(0) = 1.
inline BigCount asm_number(int n) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "A(n) needs n >= 0");
  auto& cache = detail::asm_cache();
  std::lock_guard lock(cache.mu);
  while (static_cast<int>(cache.values.size()) <= n)
    cache.values.push_back(detail::asm_product_formula(static_cast<int>(cache.values.size())));
  return cache.values[n];
}

/// A(0), ..., A(n_max).
inline std::vector<BigCount> asm_table(int n_max) {
  asm_number(n_max);
  auto& cache = detail::asm_cache();
  std::lock_guard lock(cache.mu);
  return {cache.values.begin(), cache.values.begin() + n_max + 1};
}

/// A(n) by counting chains of interlacing rows from the top row down to
/// (1, ..., n). Independent of the product formula; cost grows like 4^n.
inline BigCount asm_number_dp(int n, int limit = kDefaultDpLimit) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "n must be positive");
  if (n > limit) throw Error(Errc::LimitExceeded, "DP limited to n <= " + std::to_string(limit));
  const std::uint32_t universe = 1U << n;
  auto values_of = [](std::uint32_t m) {
    std::vector<int> v;
    for (int b = 0; m != 0; ++b, m >>= 1)
      if (m & 1U) v.push_back(b + 1);
    return v;
  };
  // s (size k+1) sits below r (size k): s_j <= r_j <= s_{j+1}.
  auto interlaces = [](const std::vector<int>& r, const std::vector<int>& s) {
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!(s[j] <= r[j] && r[j] <= s[j + 1])) return false;
    return true;
  };
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  std::vector<std::vector<int>> values(universe);
  for (std::uint32_t m = 1; m < universe; ++m) {
    by_size[std::popcount(m)].push_back(m);
    values[m] = values_of(m);
  }

  std::vector<BigCount> ways(universe, 0);
  for (auto m : by_size[1]) ways[m] = 1;
  for (int k = 1; k < n; ++k) {
    for (auto r : by_size[k]) {
      if (ways[r] == 0) continue;
      for (auto s : by_size[k + 1])
        if (interlaces(values[r], values[s])) ways[s] += ways[r];
    }
  }
  return ways[universe - 1];
}

/// Number of triangles whose distinguished rows contain rows ∪ {n}:
/// A(i1) A(i2-i1) ... A(n-ik).
inline BigCount eta(int n, const RowSet& rows) {
  if (n < 1) throw Error(Errc::RowOutOfRange, "n must be positive");
  BigCount product = 1;
  int prev = 0;
  for (int i : rows.members()) {
    if (i >= n) throw Error(Errc::RowOutOfRange, "row " + std::to_string(i) + " is not in [n-1] for n=" + std::to_string(n));
    product *= asm_number(i - prev);
    prev = i;
  }
  return product * asm_number(n - prev);
}
inline BigCount eta(int n, std::uint64_t bits) { return eta(n, RowSet(std::max(n, 1), bits)); }

// ---------------------------------------------------------------------------
// Inequality margins

/// A(i1+1) A(i2-1) - A(i1) A(i2) for i1 >= i2 >= 1.
struct IncreaseMargin {
  int i1;
  int i2;
  BigInt margin;
};

/// Ratio bound A(n-c)/A(n) <= (2/3)^e, e = c(2n-c-1)/2, cross-multiplied:
/// margin = A(n) 2^e - A(n-c) 3^e.
struct RatioMargin {
  int n;
  int c;
  BigInt margin;
};

/// A(n-|I|) - eta_n(I).
struct CorollaryMargin {
  int n;
  std::uint64_t rows;
  BigInt margin;
};

struct LemmaReport {
  std::vector<IncreaseMargin> increase;
  std::vector<RatioMargin> ratio;
  std::vector<CorollaryMargin> corollary;

  std::size_t checks() const { return increase.size() + ratio.size() + corollary.size(); }
  bool all_nonnegative() const {
    auto ok = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& m) { return m.margin >= 0; }); };
    return ok(increase) && ok(ratio) && ok(corollary);
  }
};

inline constexpr int kCorollaryExhaustiveLimit = 14;

/// Margins for every 1 <= i2 <= i1 <= n_max, every 1 <= c <= n <= n_max, and
/// row sets I ⊆ [n-1] for 2 <= n <= n_max: all of them up to
/// kCorollaryExhaustiveLimit, beyond that the prefix/suffix blocks plus 256
/// subsets drawn with a fixed seed.
inline LemmaReport lemma_margins(int n_max) {
  if (n_max < 2) throw Error(Errc::IndexOutOfRange, "n_max must be at least 2");
  const auto a = asm_table(n_max + 1);
  LemmaReport report;
  for (int i1 = 1; i1 <= n_max; ++i1)
    for (int i2 = 1; i2 <= i1; ++i2)
      report.increase.push_back({i1, i2, a[i1 + 1] * a[i2 - 1] - a[i1] * a[i2]});

  for (int n = 1; n <= n_max; ++n)
    for (int c = 1; c <= n; ++c) {
      const unsigned e = static_cast<unsigned>(c * (2 * n - c - 1) / 2);
      report.ratio.push_back({n, c, a[n] * pow(BigInt(2), e) - a[n - c] * pow(BigInt(3), e)});
    }

  std::mt19937_64 rng(0x5eedULL);
  for (int n = 2; n <= n_max; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    auto add = [&](std::uint64_t bits) {
      report.corollary.push_back({n, bits, a[n - std::popcount(bits)] - eta(n, bits)});
    };
    if (n <= kCorollaryExhaustiveLimit) {
      for (std::uint64_t bits = 0; bits < subsets; ++bits) add(bits);
    } else {
      for (int k = 0; k < n; ++k) {
        add((std::uint64_t{1} << k) - 1);                          // rows 1..k
        add(((std::uint64_t{1} << k) - 1) << (n - 1 - k));         // rows n-k..n-1
      }
      for (int s = 0; s < 256; ++s) add(rng() & (subsets - 1));
    }
  }
  return report;
}

/// exp(log A(n) - n^2 log(3√3/4) + (5/36) log n). Tends to the unknown
/// constant of the Bleher-Fokin asymptotic; a drift diagnostic only.
inline double bleher_fokin_estimate(int n) {
  if (n < 2) throw Error(Errc::IndexOutOfRange, "estimate needs n >= 2");
  const double base = std::log(3.0 * std::numbers::sqrt3 / 4.0);
  const double nn = static_cast<double>(n);
  return std::exp(log_big(asm_number(n)) - nn * nn * base + (5.0 / 36.0) * std::log(nn));
}

}  // namespace gog
