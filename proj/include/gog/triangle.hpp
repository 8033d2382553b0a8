#pragma once

// Monotone triangles and their companion objects: alternating-sign matrices,
// column-sum matrices, permutations and distinguished-row sets.
//
// Storage is 0-based (row i holds i+1 entries); every value is 1-based, and so
// are the positions reported in errors and all text formats.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gog/error.hpp"

namespace gog {

namespace detail {
struct Validated {
  explicit Validated() = default;
};

inline std::size_t row_offset(int i) { return static_cast<std::size_t>(i) * (i + 1) / 2; }
}  // namespace detail

class MonotoneTriangle {
 public:
  MonotoneTriangle(detail::Validated, int n, std::vector<int> entries)
      : n_(n), entries_(std::move(entries)) {}

  int size() const { return n_; }

  /// 0-based row i, holding i+1 strictly increasing values.
  std::span<const int> row(int i) const {
    return std::span<const int>(entries_).subspan(detail::row_offset(i), static_cast<std::size_t>(i) + 1);
  }
  int at(int i, int j) const { return entries_[detail::row_offset(i) + j]; }

  /// Entries in reading order (top to bottom, left to right).
  const std::vector<int>& entries() const { return entries_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
  }

  /// Row i as a bitmask over values (bit v-1 for value v).
  std::uint64_t row_mask(int i) const {
    std::uint64_t m = 0;
    for (int v : row(i)) m |= std::uint64_t{1} << (v - 1);
    return m;
  }

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
  /// Size first, then lexicographic on the reading sequence.
  friend auto operator<=>(const MonotoneTriangle&, const MonotoneTriangle&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

/// Subset of [n], bit (i-1) standing for row i.
class RowSet {
 public:
  RowSet() = default;
  RowSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > 63) throw Error(Errc::RowOutOfRange, "universe size " + std::to_string(n));
    if (n < 63 && (bits >> n) != 0) throw Error(Errc::RowOutOfRange, "member beyond " + std::to_string(n));
  }
  static RowSet of(int n, std::initializer_list<int> members) {
    return of(n, std::vector<int>(members));
  }
  static RowSet of(int n, const std::vector<int>& members) {
    std::uint64_t bits = 0;
    for (int i : members) {
      if (i < 1 || i > n) throw Error(Errc::RowOutOfRange, "row " + std::to_string(i));
      bits |= std::uint64_t{1} << (i - 1);
    }
    return RowSet(n, bits);
  }
  static RowSet full(int n) { return RowSet(n, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))); }

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U); }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  /// Ascending 1-based members.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n || seen[v]) throw Error(Errc::NotAPermutation, "value " + std::to_string(v));
      seen[v] = true;
    }
    if (n == 0) throw Error(Errc::NotAPermutation, "empty");
  }
  /// One-line notation with single digits, e.g. "312".
  static Permutation from_string(const std::string& s) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '0');
    return Permutation(std::move(v));
  }
  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  /// p(i) for 1-based i.
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

template <class Tag>
class SquareMatrix {
 public:
  SquareMatrix(detail::Validated, int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}

  int size() const { return n_; }
  /// 0-based entry.
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_);
    for (int i = 0; i < n_; ++i) out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

struct AsmTag {};
struct ColumnSumTag {};
using AlternatingSignMatrix = SquareMatrix<AsmTag>;
using ColumnSumMatrix = SquareMatrix<ColumnSumTag>;

// ---------------------------------------------------------------------------
// Validation

/// The only way to obtain a MonotoneTriangle. Defects are reported at the
/// first offending position in reading order; at a single position the
/// strict-increase check runs before interlacing, which runs before the
/// bottom-row check.
inline MonotoneTriangle validate_triangle(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1) throw Error(Errc::ShapeMismatch, "size must be positive");
  if (static_cast<int>(rows.size()) != n)
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != i + 1)
      throw Error(Errc::ShapeMismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries",
                  Position{i + 1, 0});
  }
  std::vector<int> flat;
  flat.reserve(detail::row_offset(n));
  for (int i = 0; i < n; ++i) {
    const auto& r = rows[i];
    for (int j = 0; j <= i; ++j) {
      const Position here{i + 1, j + 1};
      if (j < i && !(r[j] < r[j + 1]))
        throw Error(Errc::StrictIncreaseViolated,
                    std::to_string(r[j]) + " is not below " + std::to_string(r[j + 1]), here);
      if (i > 0 && j < i) {
        const int above = rows[i - 1][j];
        if (!(r[j] <= above && above <= r[j + 1]))
          throw Error(Errc::InterlacingViolated,
                      "need " + std::to_string(r[j]) + " <= " + std::to_string(above) + " <= " + std::to_string(r[j + 1]),
                      here);
      }
      if (i == n - 1 && r[j] != j + 1)
        throw Error(Errc::BadBottomRow, "expected " + std::to_string(j + 1) + ", got " + std::to_string(r[j]), here);
      flat.push_back(r[j]);
    }
  }
  return MonotoneTriangle(detail::Validated{}, n, std::move(flat));
}

/// Same checks, taking entries in reading order.
inline MonotoneTriangle validate_triangle(int n, std::span<const int> reading) {
  if (n < 1 || reading.size() != detail::row_offset(n))
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(n < 1 ? 0 : detail::row_offset(n)) + " entries");
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) rows[i].assign(reading.begin() + detail::row_offset(i), reading.begin() + detail::row_offset(i + 1));
  return validate_triangle(n, rows);
}

namespace detail {
template <class Tag>
SquareMatrix<Tag> square(const std::vector<std::vector<int>>& rows, Errc code) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw Error(code, "empty matrix");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(code, "matrix is not square", Position{i + 1, 0});
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return SquareMatrix<Tag>(Validated{}, n, std::move(flat));
}
}  // namespace detail

/// Every row and column sums to 1 and its nonzero entries alternate +1, -1, ..., +1.
inline AlternatingSignMatrix validate_asm(const std::vector<std::vector<int>>& rows) {
  auto m = detail::square<AsmTag>(rows, Errc::NotAnASM);
  const int n = m.size();
  auto check_line = [&](auto get, bool is_row, int k) {
    int expect = 1;
    int sum = 0;
    for (int t = 0; t < n; ++t) {
      const int v = get(t);
      const Position where = is_row ? Position{k + 1, t + 1} : Position{t + 1, k + 1};
      if (v < -1 || v > 1) throw Error(Errc::NotAnASM, "entry " + std::to_string(v), where);
      if (v == 0) continue;
      if (v != expect) throw Error(Errc::NotAnASM, "signs do not alternate", where);
      expect = -expect;
      sum += v;
    }
    if (sum != 1)
      throw Error(Errc::NotAnASM, std::string(is_row ? "row " : "column ") + std::to_string(k + 1) + " sums to " + std::to_string(sum));
  };
  for (int i = 0; i < n; ++i) check_line([&](int t) { return m.at(i, t); }, true, i);
  for (int j = 0; j < n; ++j) check_line([&](int t) { return m.at(t, j); }, false, j);
  return m;
}

// ---------------------------------------------------------------------------
// Extremal and special triangles

enum class Extreme { Min, Max };

/// min: a(i,j) = j.  max: a(i,j) = n-i+j.
inline MonotoneTriangle extremal_triangle(int n, Extreme which) {
  if (n < 1) throw Error(Errc::SizeTooSmall, "n must be positive");
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) rows[i - 1].push_back(which == Extreme::Min ? j : n - i + j);
  return validate_triangle(n, rows);
}

enum class NearMinimal { Top, Penult };

/// The minimal triangle with its top row raised to 2 (Top), or with row n-1
/// replaced by 1, 2, ..., n-2, n (Penult).
inline MonotoneTriangle near_minimal_triangle(int n, NearMinimal which) {
  if (n < 2) throw Error(Errc::SizeTooSmall, "near-minimal triangles need n >= 2");
  auto rows = extremal_triangle(n, Extreme::Min).rows();
  if (which == NearMinimal::Top)
    rows[0][0] = 2;
  else
    rows[n - 2].back() = n;
  return validate_triangle(n, rows);
}

// ---------------------------------------------------------------------------
// Distinguished rows

/// Rows equal to (1, 2, ..., i). Always contains n.
inline RowSet distinguished_rows(const MonotoneTriangle& t) {
  std::uint64_t bits = 0;
  for (int i = 0; i < t.size(); ++i)
    if (t.at(i, i) == i + 1) bits |= std::uint64_t{1} << i;  // a(i,j) >= j, so the last entry pins the row
  return RowSet(t.size(), bits);
}

/// Rows equal to (n-i+1, ..., n). Always contains n.
inline RowSet maximal_rows(const MonotoneTriangle& t) {
  const int n = t.size();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    if (t.at(i, 0) == n - i) bits |= std::uint64_t{1} << i;
  return RowSet(n, bits);
}

/// Longest block of consecutive members; 0 for the empty set.
inline int max_consecutive_run(std::uint64_t bits) {
  int best = 0;
  while (bits != 0) {
    bits >>= std::countr_zero(bits);
    const int run = std::countr_one(bits);
    best = std::max(best, run);
    bits = run == 64 ? 0 : bits >> run;
  }
  return best;
}
inline int max_consecutive_run(const RowSet& d) { return max_consecutive_run(d.bits()); }

// ---------------------------------------------------------------------------
// Bijections

/// Entry (i,j) is 1 iff value j+1 appears in triangle row i.
inline ColumnSumMatrix to_column_sum(const MonotoneTriangle& t) {
  const int n = t.size();
  std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int v : t.row(i)) flat[static_cast<std::size_t>(i) * n + (v - 1)] = 1;
  return ColumnSumMatrix(detail::Validated{}, n, std::move(flat));
}

/// Inverse of to_column_sum. Row i must hold exactly i ones (1-based) and the
/// rows must interlace; the result goes through validate_triangle.
inline MonotoneTriangle from_column_sum(const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n < 1) throw Error(Errc::NotAColumnSumMatrix, "empty matrix");
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) throw Error(Errc::NotAColumnSumMatrix, "matrix is not square", Position{i + 1, 0});
    for (int j = 0; j < n; ++j) {
      const int v = matrix[i][j];
      if (v != 0 && v != 1) throw Error(Errc::NotAColumnSumMatrix, "entry " + std::to_string(v), Position{i + 1, j + 1});
      if (v == 1) rows[i].push_back(j + 1);
    }
    if (static_cast<int>(rows[i].size()) != i + 1)
      throw Error(Errc::NotAColumnSumMatrix,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " ones", Position{i + 1, 0});
  }
  try {
    return validate_triangle(n, rows);
  } catch (const Error& e) {
    throw Error(Errc::NotAColumnSumMatrix, e.what(), e.where());
  }
}
inline MonotoneTriangle from_column_sum(const ColumnSumMatrix& c) { return from_column_sum(c.rows()); }

inline ColumnSumMatrix validate_column_sum(const std::vector<std::vector<int>>& rows) {
  return to_column_sum(from_column_sum(rows));
}

/// Successive row differences of the column-sum matrix.
inline AlternatingSignMatrix to_asm(const MonotoneTriangle& t) {
  const auto c = to_column_sum(t);
  const int n = c.size();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = c.at(i, j) - (i > 0 ? c.at(i - 1, j) : 0);
  return AlternatingSignMatrix(detail::Validated{}, n, std::move(flat));
}

/// Column partial sums, then from_column_sum.
inline MonotoneTriangle from_asm(const AlternatingSignMatrix& a) {
  const int n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = a.at(i, j) + (i > 0 ? c[i - 1][j] : 0);
  return from_column_sum(c);
}
inline MonotoneTriangle from_asm(const std::vector<std::vector<int>>& rows) { return from_asm(validate_asm(rows)); }

inline AlternatingSignMatrix permutation_matrix(const Permutation& p) {
  const int n = p.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) rows[i - 1][p(i) - 1] = 1;
  return validate_asm(rows);
}

/// Row i is the sorted set {p(1), ..., p(i)}.
inline MonotoneTriangle perm_to_triangle(const Permutation& p) {
  const int n = p.size();
  std::vector<std::vector<int>> rows(n);
  std::vector<int> acc;
  for (int i = 1; i <= n; ++i) {
    acc.insert(std::upper_bound(acc.begin(), acc.end(), p(i)), p(i));
    rows[i - 1] = acc;
  }
  return validate_triangle(n, rows);
}

/// True iff every row is a subset of the next one.
inline bool is_permutation_triangle(const MonotoneTriangle& t) {
  for (int i = 0; i + 1 < t.size(); ++i)
    if ((t.row_mask(i) & ~t.row_mask(i + 1)) != 0) return false;
  return true;
}

/// v -> n-v+1 on every entry, then each row reversed. An involution that
/// swaps the minimal and maximal triangles.
inline MonotoneTriangle rank_reverse(const MonotoneTriangle& t) {
  const int n = t.size();
  auto rows = t.rows();
  for (auto& r : rows) {
    for (int& v : r) v = n - v + 1;
    std::reverse(r.begin(), r.end());
  }
  return validate_triangle(n, rows);
}

}  // namespace gog
