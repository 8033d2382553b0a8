#pragma once

// Exhaustive enumeration of monotone triangles in reading-sequence
// lexicographic order, completion counts, ranking/unranking, exact uniform
// sampling, and the exact distinguished-set census with its file format.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gog/bignum.hpp"
#include "gog/counting.hpp"
#include "gog/triangle.hpp"

namespace gog {

inline constexpr int kDefaultEnumerationLimit = 7;

namespace detail {

inline std::uint64_t mask_of(std::span<const int> values) {
  std::uint64_t m = 0;
  for (int v : values) m |= std::uint64_t{1} << (v - 1);
  return m;
}

inline std::vector<int> values_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

template <class F>
bool successors_from(int n, std::span<const int> r, std::vector<int>& s, std::size_t j, F& f) {
  const std::size_t k = r.size();
  if (j == k + 1) return f(std::span<const int>(s));
  int lo = 1;
  if (j > 0) lo = std::max(r[j - 1], s[j - 1] + 1);
  const int hi = j < k ? r[j] : n;
  for (int v = lo; v <= hi; ++v) {
    s[j] = v;
    if (!successors_from(n, r, s, j + 1, f)) return false;
  }
  return true;
}

/// Calls f(row) for every strictly increasing (k+1)-row interlacing below the
/// k-row r, in lexicographic order. An empty r yields the n singletons.
/// Stops early when f returns false.
template <class F>
void for_each_successor(int n, std::span<const int> r, F&& f) {
  std::vector<int> s(r.size() + 1);
  successors_from(n, r, s, 0, f);
}

inline void check_limit(int n, int limit, const char* what) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "n must be positive");
  if (n > limit) throw Error(Errc::LimitExceeded, std::string(what) + " limited to n <= " + std::to_string(limit));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Completion counts

/// Last fixed row of a partially built triangle (rows 1..level).
struct TrianglePrefix {
  int n = 0;
  int level = 0;
  std::vector<int> row;

  TrianglePrefix(int size, std::vector<int> last_row) : n(size), level(static_cast<int>(last_row.size())), row(std::move(last_row)) {
    if (n < 1 || level > n) throw Error(Errc::ShapeMismatch, "prefix level out of range");
    for (int j = 0; j < level; ++j) {
      if (row[j] < j + 1 || row[j] > n - level + j + 1)
        throw Error(Errc::ShapeMismatch, "entry out of range", Position{level, j + 1});
      if (j > 0 && row[j - 1] >= row[j]) throw Error(Errc::StrictIncreaseViolated, "prefix row", Position{level, j});
    }
  }
};

/// Number of completions for every possible last row of size n, keyed by the
/// row's value mask. Filled once at construction and immutable afterwards.
class CompletionTable {
 public:
  explicit CompletionTable(int n) : n_(n), counts_(std::size_t{1} << n) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::uint64_t>> by_size(n + 1);
    for (std::uint64_t m = 0; m <= full; ++m) by_size[std::popcount(m)].push_back(m);
    counts_[full] = 1;
    for (int k = n - 1; k >= 0; --k) {
      for (auto m : by_size[k]) {
        BigCount total = 0;
        const auto r = detail::values_of(m);
        detail::for_each_successor(n, r, [&](std::span<const int> s) {
          total += counts_[detail::mask_of(s)];
          return true;
        });
        counts_[m] = std::move(total);
      }
    }
  }

  int size() const { return n_; }
  const BigCount& count(std::uint64_t row_mask) const { return counts_[row_mask]; }
  const BigCount& total() const { return counts_[0]; }

 private:
  int n_;
  std::vector<BigCount> counts_;
};

/// Shared per-n completion table; filled once and safe for concurrent lookup.
inline const CompletionTable& completion_table(int n, int limit = kDefaultDpLimit) {
  detail::check_limit(n, limit, "completion DP");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CompletionTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<const CompletionTable>(n);
  return *slot;
}

/// Ways to extend the prefix down to the bottom row (1, ..., n).
inline BigCount completions_count(const TrianglePrefix& p, int limit = kDefaultDpLimit) {
  return completion_table(p.n, limit).count(detail::mask_of(p.row));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {
template <class F>
void enumerate_below(int n, std::vector<int>& reading, std::span<const int> last, F& f) {
  if (static_cast<int>(last.size()) == n) {
    f(validate_triangle(n, reading));
    return;
  }
  const std::vector<int> prev(last.begin(), last.end());
  for_each_successor(n, prev, [&](std::span<const int> s) {
    const std::size_t mark = reading.size();
    reading.insert(reading.end(), s.begin(), s.end());
    enumerate_below(n, reading, std::span<const int>(reading).subspan(mark), f);
    reading.resize(mark);
    return true;
  });
}

template <class F>
void enumerate_with_top(int n, int top, F& f) {
  std::vector<int> reading{top};
  reading.reserve(row_offset(n));
  enumerate_below(n, reading, std::span<const int>(reading), f);
}
}  // namespace detail

/// Visits every triangle of size n exactly once, in lexicographic order of
/// the reading sequence. With workers > 1 the space is split by top entry and
/// the pieces are replayed in order, so the visit order is unchanged.
template <class F>
void for_each_triangle(int n, F&& f, int workers = 1, int limit = kDefaultEnumerationLimit) {
  detail::check_limit(n, limit, "enumeration");
  if (workers <= 1) {
    for (int top = 1; top <= n; ++top) detail::enumerate_with_top(n, top, f);
    return;
  }
  std::vector<std::future<std::vector<MonotoneTriangle>>> parts;
  for (int top = 1; top <= n; ++top) {
    parts.push_back(std::async(std::launch::async, [n, top] {
      std::vector<MonotoneTriangle> out;
      auto collect = [&](MonotoneTriangle t) { out.push_back(std::move(t)); };
      detail::enumerate_with_top(n, top, collect);
      return out;
    }));
    // Cap concurrency: wait for the oldest when `workers` are in flight.
    if (static_cast<int>(parts.size()) >= workers) parts[parts.size() - workers].wait();
  }
  for (auto& part : parts)
    for (auto& t : part.get()) f(std::move(t));
}

inline std::vector<MonotoneTriangle> enumerate_triangles(int n, int workers = 1, int limit = kDefaultEnumerationLimit) {
  std::vector<MonotoneTriangle> out;
  for_each_triangle(n, [&](MonotoneTriangle t) { out.push_back(std::move(t)); }, workers, limit);
  return out;
}

// ---------------------------------------------------------------------------
// Ranking

/// Position of t in enumeration order.
inline BigCount rank(const MonotoneTriangle& t, int limit = kDefaultDpLimit) {
  const int n = t.size();
  const auto& table = completion_table(n, limit);
  BigCount before = 0;
  std::vector<int> prev;
  for (int i = 0; i < n; ++i) {
    const auto target = t.row(i);
    detail::for_each_successor(n, prev, [&](std::span<const int> s) {
      if (std::equal(s.begin(), s.end(), target.begin(), target.end())) return false;
      before += table.count(detail::mask_of(s));
      return true;
    });
    prev.assign(target.begin(), target.end());
  }
  return before;
}

namespace detail {
/// Walks down from the empty prefix. At each level `pick(weight, leftover)`
/// returns an offset below `weight` (the completion count of the current
/// prefix); the successor whose cumulative-count interval holds the offset is
/// taken, and the offset's remainder inside that interval becomes `leftover`.
template <class Pick>
MonotoneTriangle descend(int n, const CompletionTable& table, Pick pick) {
  std::vector<int> reading;
  std::vector<int> prev;
  std::uint64_t prev_mask = 0;
  BigCount leftover = 0;
  for (int i = 0; i < n; ++i) {
    BigCount offset = pick(table.count(prev_mask), leftover);
    std::vector<int> chosen;
    for_each_successor(n, prev, [&](std::span<const int> s) {
      const auto& c = table.count(mask_of(s));
      if (offset < c) {
        chosen.assign(s.begin(), s.end());
        return false;
      }
      offset -= c;
      return true;
    });
    leftover = std::move(offset);
    reading.insert(reading.end(), chosen.begin(), chosen.end());
    prev = std::move(chosen);
    prev_mask = mask_of(prev);
  }
  return validate_triangle(n, reading);
}
}  // namespace detail

/// The k-th triangle (0-based) in enumeration order.
inline MonotoneTriangle unrank(int n, const BigCount& k, int limit = kDefaultDpLimit) {
  const auto& table = completion_table(n, limit);
  if (k < 0 || k >= table.total())
    throw Error(Errc::IndexOutOfRange, "index " + k.str() + " not below A(" + std::to_string(n) + ") = " + table.total().str());
  bool first = true;
  return detail::descend(n, table, [&](const BigCount&, const BigCount& leftover) {
    if (!first) return leftover;
    first = false;
    return k;
  });
}

/// Exactly uniform samples: each row is drawn among the successors of the
/// previous one with probability proportional to its completion count.
inline std::vector<MonotoneTriangle> sample_uniform(int n, int count, std::uint64_t seed, int limit = kDefaultDpLimit) {
  if (count < 1) throw Error(Errc::IndexOutOfRange, "count must be positive");
  const auto& table = completion_table(n, limit);
  std::mt19937_64 rng(seed);
  std::vector<MonotoneTriangle> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s)
    out.push_back(detail::descend(n, table, [&](const BigCount& weight, const BigCount&) { return uniform_below(weight, rng); }));
  return out;
}

// ---------------------------------------------------------------------------
// Census

/// Triangle counts keyed by exact distinguished-row bitmask. Zero counts are absent.
struct CensusTable {
  int n = 0;
  std::map<std::uint64_t, BigCount> counts;

  BigCount total() const {
    BigCount t = 0;
    for (const auto& [_, c] : counts) t += c;
    return t;
  }
  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Triangle counts keyed by the longest block of consecutive distinguished rows.
struct RunHistogram {
  int n = 0;
  std::map<int, BigCount> counts;

  BigCount at(int run) const {
    auto it = counts.find(run);
    return it == counts.end() ? BigCount(0) : it->second;
  }
  friend bool operator==(const RunHistogram&, const RunHistogram&) = default;
};

template <class RowsOf>
CensusTable build_row_census(int n, RowsOf rows_of, int workers = 1, int limit = kDefaultEnumerationLimit) {
  std::map<std::uint64_t, std::uint64_t> tally;
  for_each_triangle(n, [&](const MonotoneTriangle& t) { ++tally[rows_of(t).bits()]; }, workers, limit);
  CensusTable table{n, {}};
  for (const auto& [k, c] : tally) table.counts.emplace(k, BigCount(c));
  return table;
}

inline CensusTable build_census(int n, int workers = 1, int limit = kDefaultEnumerationLimit) {
  return build_row_census(n, [](const MonotoneTriangle& t) { return distinguished_rows(t); }, workers, limit);
}

inline RunHistogram run_histogram(const CensusTable& census) {
  RunHistogram h{census.n, {}};
  for (const auto& [bits, c] : census.counts) h.counts[max_consecutive_run(bits)] += c;
  return h;
}

inline std::string format_census(const CensusTable& census) {
  std::ostringstream out;
  out << "MTCENSUS v1 n=" << census.n << " total=" << census.total().str() << '\n';
  for (const auto& [bits, c] : census.counts) out << std::hex << bits << std::dec << ' ' << c.str() << '\n';
  return out.str();
}

/// Inverse of format_census; rejects anything format_census would not produce.
inline CensusTable parse_census(const std::string& text) {
  auto fail = [](int line, const std::string& why) -> Error {
    return Error(Errc::ParseError, "census line " + std::to_string(line) + ": " + why);
  };
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw fail(1, "missing header");
  std::istringstream hs(header);
  std::string magic, version, n_field, total_field, extra;
  hs >> magic >> version >> n_field >> total_field;
  if (magic != "MTCENSUS" || version != "v1" || n_field.rfind("n=", 0) != 0 || total_field.rfind("total=", 0) != 0 || (hs >> extra))
    throw fail(1, "bad header");
  CensusTable table;
  BigCount declared;
  try {
    table.n = std::stoi(n_field.substr(2));
    declared = BigCount(total_field.substr(6));
  } catch (const std::exception&) {
    throw fail(1, "bad header values");
  }
  if (table.n < 1 || table.n > 63) throw fail(1, "n out of range");
  const std::uint64_t bottom = std::uint64_t{1} << (table.n - 1);
  std::string line;
  int lineno = 1;
  std::optional<std::uint64_t> prev;
  while (std::getline(in, line)) {
    ++lineno;
    const auto sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || line.find(' ', sp + 1) != std::string::npos) throw fail(lineno, "expected '<hex> <count>'");
    std::uint64_t bits = 0;
    BigCount count;
    try {
      std::size_t used = 0;
      bits = std::stoull(line.substr(0, sp), &used, 16);
      if (used != sp) throw std::invalid_argument("hex");
      const std::string digits = line.substr(sp + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("count");
      count = BigCount(digits);
    } catch (const std::exception&) {
      throw fail(lineno, "malformed entry");
    }
    if (prev && bits <= *prev) throw fail(lineno, "keys not ascending");
    if ((bits & bottom) == 0 || (table.n < 64 && (bits >> table.n) != 0)) throw fail(lineno, "key is not a distinguished set");
    if (count == 0) throw fail(lineno, "zero count");
    prev = bits;
    table.counts.emplace(bits, std::move(count));
  }
  if (!text.empty() && text.back() != '\n') throw fail(lineno, "missing final newline");
  if (table.total() != declared) throw fail(1, "counts do not sum to total");
  return table;
}

/// Flag value, else $GOG_CACHE_DIR, else ".cache".
inline std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("GOG_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".cache";
}

inline std::filesystem::path census_path(const std::filesystem::path& dir, int n) {
  return dir / ("census_n" + std::to_string(n) + ".txt");
}

/// Reads the cached census for n if present (it must parse and match A(n)),
/// otherwise builds it and writes the file.
inline CensusTable load_or_build_census(int n, const std::filesystem::path& dir, int workers = 1,
                                        int limit = kDefaultEnumerationLimit) {
  detail::check_limit(n, limit, "census");
  const auto path = census_path(dir, n);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    auto table = parse_census(buf.str());
    if (table.n != n || table.total() != asm_number(n))
      throw Error(Errc::ParseError, "cached census " + path.string() + " does not match n=" + std::to_string(n));
    return table;
  }
  auto table = build_census(n, workers, limit);
  std::filesystem::create_directories(dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << format_census(table);
  }
  std::filesystem::rename(tmp, path);
  return table;
}

}  // namespace gog
