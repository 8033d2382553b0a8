#pragma once

// Self-check suites behind `gog verify`. Each suite walks its invariants
// exhaustively (or over a fixed-seed sample) and records the first failure.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gog/counting.hpp"
#include "gog/enumeration.hpp"
#include "gog/io.hpp"
#include "gog/lattice.hpp"
#include "gog/meet_census.hpp"
#include "gog/triangle.hpp"

namespace gog {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }

  template <class Detail>
  void check(bool passed, Detail&& detail) {
    ++checks;
    if (passed) return;
    if (failures++ == 0) first_failure = detail();
  }

  std::string summary() const {
    std::string s = (ok() ? "OK " : "FAIL ") + name + " checks=" + std::to_string(checks);
    if (!ok()) s += " failures=" + std::to_string(failures) + " first=" + first_failure;
    return s;
  }
};

enum class Suite { Bijections, Lattice, Lemmas, Census, Theorems };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Bijections: return "bijections";
    case Suite::Lattice: return "lattice";
    case Suite::Lemmas: return "lemmas";
    case Suite::Census: return "census";
    case Suite::Theorems: return "theorems";
  }
  return "?";
}

inline int suite_default_n_max(Suite s) {
  switch (s) {
    case Suite::Bijections: return 5;
    case Suite::Lattice: return 6;
    case Suite::Lemmas: return 25;
    case Suite::Census: return 6;
    case Suite::Theorems: return 6;
  }
  return 1;
}

inline int suite_n_max_limit(Suite s) { return s == Suite::Lemmas ? 60 : kDefaultEnumerationLimit; }

namespace detail {

inline std::string show(const MonotoneTriangle& t) {
  std::string s = "[";
  for (int i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j <= i; ++j) s += (j ? "," : "") + std::to_string(t.at(i, j));
    s += "]";
  }
  return s + "]";
}

inline void verify_bijections(int n_max, SuiteResult& res) {
  {
    const auto example = validate_triangle(4, {{3}, {2, 4}, {1, 3, 4}, {1, 2, 3, 4}});
    const std::vector<std::vector<int>> cs{{0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}};
    const std::vector<std::vector<int>> am{{0, 0, 1, 0}, {0, 1, -1, 1}, {1, -1, 1, 0}, {0, 1, 0, 0}};
    res.check(to_column_sum(example).rows() == cs, [] { return std::string("worked example column-sum matrix"); });
    res.check(to_asm(example).rows() == am, [] { return std::string("worked example ASM"); });
  }
  for (int n = 1; n <= n_max; ++n) {
    for_each_triangle(n, [&](const MonotoneTriangle& t) {
      const auto c = to_column_sum(t);
      const auto a = to_asm(t);
      res.check(from_column_sum(c) == t, [&] { return "column-sum roundtrip " + show(t); });
      res.check(from_asm(validate_asm(a.rows())) == t, [&] { return "ASM roundtrip " + show(t); });
      const bool has_minus = std::find(a.entries().begin(), a.entries().end(), -1) != a.entries().end();
      res.check(is_permutation_triangle(t) == !has_minus, [&] { return "permutation test vs -1 entries " + show(t); });
      res.check(distinguished_rows(t).contains(n), [&] { return "bottom row not distinguished " + show(t); });
      bool bounds = true;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) bounds &= j <= t.at(i - 1, j - 1) && t.at(i - 1, j - 1) <= n - i + j;
      res.check(bounds, [&] { return "entry bounds " + show(t); });
      res.check(rank_reverse(rank_reverse(t)) == t, [&] { return "rank reversal involution " + show(t); });
    });
    if (n <= 6) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      do {
        const Permutation perm(p);
        res.check(perm_to_triangle(perm) == from_asm(permutation_matrix(perm)),
                  [&] { return "permutation embedding " + detail::join_ints(p); });
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

inline void verify_lattice(int n_max, SuiteResult& res) {
  const int exhaustive_n = std::min(n_max, 4);
  const auto all = enumerate_triangles(exhaustive_n);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto m = meet(a, b);
      const auto j = join(a, b);
      res.check(m == meet(b, a) && j == join(b, a), [&] { return "commutativity " + show(a) + " " + show(b); });
      res.check(meet(a, j) == a && join(a, m) == a, [&] { return "absorption " + show(a) + " " + show(b); });
      res.check(leq(m, a) && leq(m, b) && leq(a, j) && leq(b, j), [&] { return "bound order " + show(a) + " " + show(b); });
      for (const auto& c : all) {
        if (leq(c, a) && leq(c, b)) res.check(leq(c, m), [&] { return "meet not greatest " + show(c); });
        if (leq(a, c) && leq(b, c)) res.check(leq(j, c), [&] { return "join not least " + show(c); });
        res.check(meet(meet(a, b), c) == meet(a, meet(b, c)) && join(join(a, b), c) == join(a, join(b, c)),
                  [&] { return "associativity " + show(a) + " " + show(b) + " " + show(c); });
      }
    }
    res.check(meet(a, a) == a && join(a, a) == a, [&] { return "idempotence " + show(a); });
  }

  // Coverage characterization and duality, exhaustively for r <= 3.
  const RowSet full = RowSet::full(exhaustive_n);
  std::vector<MonotoneTriangle> tuple;
  auto visit_tuples = [&](auto&& self, int r) -> void {
    if (static_cast<int>(tuple.size()) == r) {
      std::uint64_t covered = 0;
      std::vector<MonotoneTriangle> reversed;
      for (const auto& t : tuple) {
        covered |= distinguished_rows(t).bits();
        reversed.push_back(rank_reverse(t));
      }
      const bool trivial = is_trivial(tuple, LatticeOp::Meet);
      res.check(trivial == (covered == full.bits()), [&] { return "coverage characterization at " + show(tuple.front()); });
      res.check(trivial == is_trivial(reversed, LatticeOp::Join), [&] { return "meet/join duality at " + show(tuple.front()); });
      return;
    }
    for (const auto& t : all) {
      tuple.push_back(t);
      self(self, r);
      tuple.pop_back();
    }
  };
  for (int r = 1; r <= 3; ++r) visit_tuples(visit_tuples, r);

  // Random triples at the largest size.
  const auto sample = sample_uniform(n_max, 3 * 10000, 20240601ULL);
  const auto tmin = extremal_triangle(n_max, Extreme::Min);
  for (std::size_t k = 0; k + 2 < sample.size(); k += 3) {
    const auto& a = sample[k];
    const auto& b = sample[k + 1];
    const auto& c = sample[k + 2];
    const auto m = meet(a, b);
    const auto j = join(a, b);
    res.check(meet(meet(a, b), c) == meet(a, meet(b, c)) && join(join(a, b), c) == join(a, join(b, c)),
              [&] { return "random associativity " + show(a); });
    res.check(m == meet(b, a) && j == join(b, a) && meet(a, j) == a && join(a, m) == a,
              [&] { return "random commutativity/absorption " + show(a); });
    res.check(leq(m, a) && leq(m, b) && leq(a, j) && leq(b, j), [&] { return "random bound order " + show(a); });
    const MonotoneTriangle triple[] = {a, b, c};
    const bool covered = (distinguished_rows(a).bits() | distinguished_rows(b).bits() | distinguished_rows(c).bits()) ==
                         RowSet::full(n_max).bits();
    res.check((meet(triple) == tmin) == covered, [&] { return "random coverage characterization " + show(a); });
  }

  const auto p312 = perm_to_triangle(Permutation::from_string("312"));
  const auto p231 = perm_to_triangle(Permutation::from_string("231"));
  res.check(!is_permutation_triangle(meet(p312, p231)), [] { return std::string("Bruhat meet witness"); });
}

inline void verify_lemmas(int n_max, SuiteResult& res) {
  const auto report = lemma_margins(n_max);
  for (const auto& m : report.increase)
    res.check(m.margin >= 0, [&] { return "increase margin (" + std::to_string(m.i1) + "," + std::to_string(m.i2) + ")"; });
  for (const auto& m : report.ratio)
    res.check(m.margin >= 0, [&] { return "ratio margin (" + std::to_string(m.n) + "," + std::to_string(m.c) + ")"; });
  for (const auto& m : report.corollary)
    res.check(m.margin >= 0, [&] { return "corollary margin n=" + std::to_string(m.n) + " rows=" + std::to_string(m.rows); });
  BigCount fact = 1;
  for (int n = 1; n <= n_max; ++n) {
    fact *= n;
    res.check(asm_number(n) >= fact, [&] { return "A(n) >= n! at n=" + std::to_string(n); });
  }
}

inline void verify_census(int n_max, SuiteResult& res) {
  for (int n = 1; n <= n_max; ++n) {
    const auto census = build_census(n);
    const auto an = asm_number(n);
    res.check(census.total() == an, [&] { return "census total n=" + std::to_string(n); });
    res.check(asm_number_dp(n) == an, [&] { return "DP count n=" + std::to_string(n); });
    res.check(completion_table(n).total() == an, [&] { return "completion total n=" + std::to_string(n); });
    const std::uint64_t bottom = std::uint64_t{1} << (n - 1);
    for (const auto& [bits, c] : census.counts) res.check((bits & bottom) != 0 && c > 0, [&] { return "census key " + std::to_string(bits); });
    for (std::uint64_t rows = 0; rows < bottom; ++rows) {
      BigCount containing = 0;
      for (const auto& [bits, c] : census.counts)
        if ((bits & rows) == rows) containing += c;
      const auto e = eta(n, rows);
      res.check(containing == e, [&] { return "eta n=" + std::to_string(n) + " rows=" + std::to_string(rows); });
      res.check(e <= asm_number(n - std::popcount(rows)), [&] { return "eta corollary n=" + std::to_string(n); });
    }
    res.check(parse_census(format_census(census)) == census, [&] { return "census file roundtrip n=" + std::to_string(n); });
    if (n <= 5) {
      BigCount k = 0;
      for_each_triangle(n, [&](const MonotoneTriangle& t) {
        res.check(rank(t) == k && unrank(n, k) == t, [&] { return "rank/unrank " + show(t); });
        ++k;
      });
    }
    if (n >= 4) {
      const auto rep = run_histogram_report(census);
      res.check(rep.top_counts_match && rep.tail_matches, [&] { return "block counts n=" + std::to_string(n); });
    }
  }
}

inline void verify_theorems(int n_max, SuiteResult& res) {
  for (int n = 1; n <= n_max; ++n) {
    const auto census = build_census(n);
    const auto reversed = build_reversed_max_census(n);
    const auto an = asm_number(n);
    for (int r = 1; r <= 3; ++r) {
      const auto exact = n_min_exact(n, r);
      const auto tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      res.check(exact == n_min_census(n, r, census), [&] { return "IE vs census " + tag; });
      res.check(exact == covering_tuple_count(n, r, reversed.counts), [&] { return "min/max duality " + tag; });
      res.check(exact >= r * pow(an - 1, static_cast<unsigned>(r - 1)), [&] { return "lower bound " + tag; });
      if (n >= 2) {
        const auto rep = meet_census_report(n, r);
        res.check(rep.main_term + rep.second_term + rep.error_term == rep.n_min, [&] { return "decomposition " + tag; });
      }
      const auto classes = class_sizes(n, r, census);
      res.check(classes.exact.at(n) <= *class_bound(n, r, 0), [&] { return "class C_n bound " + tag; });
      if (r >= 2 && n >= 2)
        res.check(classes.exact.at(n - 1) <= *class_bound(n, r, 1), [&] { return "class C_{n-1} bound " + tag; });
    }
  }
}

}  // namespace detail

inline SuiteResult verify_suite(Suite which, int n_max) {
  if (n_max < 1) throw Error(Errc::IndexOutOfRange, "n-max must be positive");
  if (n_max > suite_n_max_limit(which))
    throw Error(Errc::LimitExceeded, std::string(suite_name(which)) + " suite limited to n-max <= " + std::to_string(suite_n_max_limit(which)));
  SuiteResult res;
  res.name = suite_name(which);
  switch (which) {
    case Suite::Bijections: detail::verify_bijections(n_max, res); break;
    case Suite::Lattice: detail::verify_lattice(n_max, res); break;
    case Suite::Lemmas: detail::verify_lemmas(std::max(n_max, 2), res); break;
    case Suite::Census: detail::verify_census(n_max, res); break;
    case Suite::Theorems: detail::verify_theorems(n_max, res); break;
  }
  return res;
}

}  // namespace gog
