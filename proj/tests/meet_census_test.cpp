#include <gtest/gtest.h>

#include "gog/meet_census.hpp"

namespace gog {
namespace {

// Counts r-tuples over M_n with meet equal to the minimal triangle, by
// folding the lattice meet over every tuple.
BigCount brute_n_min(int n, int r) {
  const auto all = enumerate_triangles(n);
  const auto bottom = extremal_triangle(n, Extreme::Min);
  BigCount hits = 0;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    MonotoneTriangle m = all[idx[0]];
    for (int k = 1; k < r; ++k) m = meet(m, all[idx[k]]);
    if (m == bottom) hits += 1;
    int k = 0;
    while (k < r && ++idx[k] == all.size()) idx[k++] = 0;
    if (k == r) break;
  }
  return hits;
}

TEST(AvoidCount, MatchesFilter) {
  EXPECT_EQ(avoid_count(3, RowSet(3, 0)), 7);
  EXPECT_EQ(avoid_count(3, RowSet::of(3, {1})), 5);
  EXPECT_EQ(avoid_count(3, RowSet::of(3, {1, 2})), 4);
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_triangles(n);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (n - 1)); ++t) {
      BigCount c = 0;
      for (const auto& tri : all)
        if ((distinguished_rows(tri).bits() & t) == 0) c += 1;
      EXPECT_EQ(avoid_count(n, RowSet(n, t)), c) << n << " " << t;
    }
  }
  EXPECT_THROW(avoid_count(3, RowSet::of(3, {3})), Error);
}

TEST(NMin, SpotValues) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(n_min_exact(n, 1), 1);
  EXPECT_EQ(n_min_exact(2, 2), 3);
  EXPECT_EQ(n_min_exact(3, 2), 15);
  EXPECT_EQ(brute_n_min(2, 2), 3);
  EXPECT_EQ(brute_n_min(3, 2), 15);
  EXPECT_THROW(n_min_exact(3, 0), Error);
  EXPECT_THROW(n_min_exact(19, 2), Error);
}

TEST(NMin, AgreesWithBruteForceTuples) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(n_min_exact(n, r), brute_n_min(n, r)) << n << "," << r;
}

TEST(NMin, InclusionExclusionEqualsCensus) {
  for (int n = 1; n <= 6; ++n) {
    const auto census = build_census(n);
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(n_min_exact(n, r), n_min_census(n, r, census)) << n << "," << r;
  }
}

TEST(NMin, WorkersAgree) {
  for (int n : {8, 12, 14}) EXPECT_EQ(n_min_exact(n, 2, 4), n_min_exact(n, 2, 1));
  EXPECT_EQ(n_min_exact(10, 3, 3), n_min_exact(10, 3));
}

TEST(NMin, LowerBoundFromSingleCoverer) {
  // A tuple is trivial whenever one component is the minimal triangle.
  for (int n = 2; n <= 14; ++n)
    for (int r = 1; r <= 3; ++r) {
      const BigCount an = asm_number(n);
      EXPECT_GE(n_min_exact(n, r), pow(an, r) - pow(an - 1, r)) << n << "," << r;
    }
}

TEST(PExtreme, Duality) {
  EXPECT_EQ(p_extreme(3, 2, Extreme::Min), BigRational(15, 49));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(p_extreme(n, 1, Extreme::Min), BigRational(1, asm_number(n)));
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(p_extreme(n, r, Extreme::Min), p_extreme(n, r, Extreme::Max)) << n << "," << r;
  }
}

TEST(Classes, ThreeTwo) {
  const auto cs = class_sizes(3, 2);
  EXPECT_EQ(cs.exact.at(3), 13);
  EXPECT_EQ(cs.exact.at(2), 4);
  EXPECT_EQ(*class_bound(3, 2, 0), 14);
  EXPECT_EQ(*class_bound(3, 2, 1), 4);
  EXPECT_FALSE(class_bound(3, 1, 1).has_value());
  EXPECT_FALSE(class_bound(5, 2, 13).has_value());
}

TEST(Classes, MatchBruteForceAtFourTwo) {
  const auto all = enumerate_triangles(4);
  const auto full = RowSet::full(4).bits();
  std::map<int, BigCount> brute;
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto da = distinguished_rows(a).bits();
      const auto db = distinguished_rows(b).bits();
      if ((da | db) != full) continue;
      const int ra = max_consecutive_run(da);
      const int rb = max_consecutive_run(db);
      brute[ra] += 1;
      if (rb != ra) brute[rb] += 1;
    }
  const auto cs = class_sizes(4, 2);
  for (const auto& [run, size] : cs.exact) EXPECT_EQ(size, brute[run]) << run;
  // The pair (rows {1,2,4}, rows {3,4}) lives in C_2.
  EXPECT_GE(cs.exact.at(2), 1);
  EXPECT_EQ(cs.exact.at(4), 83);
  EXPECT_EQ(cs.exact.at(3), 14);
}

TEST(Classes, BoundsAndCoverage) {
  for (int n = 2; n <= 6; ++n) {
    const auto census = build_census(n);
    for (int r = 1; r <= 3; ++r) {
      const auto cs = class_sizes(n, r, census);
      for (const auto& [run, size] : cs.exact)
        if (auto b = class_bound(n, r, n - run)) {
          EXPECT_LE(size, *b) << n << "," << r << " run " << run;
        }
      // Every trivial tuple has a component with some longest block.
      BigCount sum = cs.at_most;
      for (const auto& [run, size] : cs.exact) sum += size;
      EXPECT_GE(sum, n_min_census(n, r, census));
    }
  }
}

TEST(Blocks, Histograms) {
  const auto rep3 = run_histogram_report(3);
  EXPECT_EQ(rep3.histogram.counts, (std::map<int, BigCount>{{1, 5}, {2, 1}, {3, 1}}));
  EXPECT_FALSE(rep3.top_counts_match);
  for (int n = 4; n <= 7; ++n) {
    const auto rep = run_histogram_report(n);
    EXPECT_TRUE(rep.top_counts_match) << n;
    EXPECT_TRUE(rep.tail_matches) << n;
  }
  for (int n = 3; n <= 9; ++n) {
    EXPECT_GT(max_consecutive_run(distinguished_rows(near_minimal_triangle(n, NearMinimal::Top))), n - 3);
    EXPECT_GT(max_consecutive_run(distinguished_rows(near_minimal_triangle(n, NearMinimal::Penult))), n - 3);
  }
}

TEST(Reports, ThreeTwo) {
  const auto rep = meet_census_report(3, 2);
  EXPECT_EQ(rep.n_min, 15);
  EXPECT_EQ(rep.main_term, 14);
  EXPECT_EQ(rep.second_term, 8);
  EXPECT_EQ(rep.error_term, -7);
  EXPECT_EQ(rep.theta_ratio, BigRational(-7));
  EXPECT_EQ(rep.ratio, BigRational(15, 14));
  const auto one = meet_census_report(5, 1);
  EXPECT_EQ(one.n_min, 1);
  EXPECT_EQ(one.error_term, 0);
  EXPECT_EQ(one.ratio, BigRational(1));
  EXPECT_THROW(meet_census_report(1, 2), Error);
}

TEST(Reports, DecompositionIsExact) {
  for (int r = 1; r <= 4; ++r)
    for (const auto& rep : theorem_report(14, r)) {
      EXPECT_EQ(BigInt(rep.main_term) + BigInt(rep.second_term) + rep.error_term, BigInt(rep.n_min));
      EXPECT_EQ(rep.p_min, BigRational(rep.n_min, pow(asm_number(rep.n), r)));
    }
}

TEST(Reports, TrendWithinTolerance) {
  for (int r = 2; r <= 3; ++r) {
    BigRational prev_gap = -1;
    for (int n = 6; n <= 14; ++n) {
      const auto rep = meet_census_report(n, r);
      const BigRational gap = abs(rep.ratio - 1);
      EXPECT_LE(gap, theorem1_tolerance(n, r)) << n << "," << r;
      if (n >= 9) {
        EXPECT_LT(gap, prev_gap) << n << "," << r;
      }
      prev_gap = gap;
    }
  }
}

}  // namespace
}  // namespace gog
