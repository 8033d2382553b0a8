#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "gog/counting.hpp"
#include "gog/enumeration.hpp"

namespace gog {
namespace {

// Brute force: triangles whose distinguished rows contain `rows` ∪ {n}.
BigCount containing_count(int n, std::uint64_t rows) {
  BigCount c = 0;
  for_each_triangle(n, [&](const MonotoneTriangle& t) {
    if ((distinguished_rows(t).bits() & rows) == rows) ++c;
  });
  return c;
}

TEST(AsmNumber, SmallValues) {
  EXPECT_EQ(asm_number(0), 1);
  EXPECT_EQ(asm_number(1), 1);
  EXPECT_EQ(asm_number(2), 2);
  EXPECT_EQ(asm_number(3), 7);
  EXPECT_EQ(asm_number(4), 42);
  EXPECT_THROW(asm_number(-1), Error);
}

TEST(AsmNumber, ThreeMethodsAgree) {
  for (int n = 1; n <= 7; ++n) {
    const auto formula = asm_number(n);
    EXPECT_EQ(asm_number_dp(n), formula) << n;
    EXPECT_EQ(BigCount(enumerate_triangles(n).size()), formula) << n;
  }
  for (int n = 8; n <= 12; ++n) EXPECT_EQ(asm_number_dp(n), asm_number(n)) << n;
}

TEST(AsmNumber, DpLimit) {
  try {
    asm_number_dp(13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LimitExceeded);
  }
  EXPECT_EQ(asm_number_dp(3), 7);
  EXPECT_EQ(asm_number_dp(1), 1);
}

TEST(AsmNumber, AtLeastFactorial) {
  BigCount fact = 1;
  for (int n = 1; n <= 12; ++n) {
    fact *= n;
    EXPECT_GE(asm_number(n), fact);
  }
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(5, RowSet(5, 0)), asm_number(5));
  EXPECT_EQ(eta(3, RowSet::of(3, {1})), 2);
  EXPECT_EQ(eta(4, RowSet::of(4, {1, 3})), 2);
  EXPECT_EQ(eta(4, RowSet::of(4, {2})), 4);
  try {
    eta(4, RowSet::of(4, {4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RowOutOfRange);
  }
}

TEST(Eta, MatchesBruteForceContainmentUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t rows = 0; rows < (std::uint64_t{1} << (n - 1)); ++rows) {
      const auto e = eta(n, rows);
      EXPECT_EQ(e, containing_count(n, rows)) << "n=" << n << " rows=" << rows;
      EXPECT_LE(e, asm_number(n - std::popcount(rows)));
    }
}

TEST(Eta, PrefixAndSuffixBlocks) {
  for (int n = 2; n <= 20; ++n)
    for (int k = 0; k < n; ++k) {
      const std::uint64_t prefix = (std::uint64_t{1} << k) - 1;
      const std::uint64_t suffix = prefix << (n - 1 - k);
      EXPECT_EQ(eta(n, prefix), asm_number(n - k));
      EXPECT_EQ(eta(n, suffix), asm_number(n - k));
    }
}

TEST(LemmaMargins, SpotValues) {
  const auto rep = lemma_margins(3);
  ASSERT_FALSE(rep.increase.empty());
  EXPECT_EQ(rep.increase.front().i1, 1);
  EXPECT_EQ(rep.increase.front().i2, 1);
  EXPECT_EQ(rep.increase.front().margin, 1);  // A(2)A(0) - A(1)A(1)
  bool found = false;
  for (const auto& m : rep.ratio)
    if (m.n == 3 && m.c == 1) {
      EXPECT_EQ(m.margin, 28 - 18);
      found = true;
    }
  EXPECT_TRUE(found);
  const auto rep4 = lemma_margins(4);
  for (const auto& m : rep4.corollary)
    if (m.n == 4 && m.rows == 0b010) {
      EXPECT_EQ(m.margin, 7 - 4);
    }
}

TEST(LemmaMargins, NonnegativeThrough25) {
  const auto rep = lemma_margins(25);
  EXPECT_TRUE(rep.all_nonnegative());
  EXPECT_EQ(rep.increase.size(), 25U * 26 / 2);
  EXPECT_EQ(rep.ratio.size(), 25U * 26 / 2);
  for (const auto& m : rep.increase) EXPECT_GE(m.margin, 0) << m.i1 << "," << m.i2;
  for (const auto& m : rep.ratio) EXPECT_GE(m.margin, 0) << m.n << "," << m.c;
}

TEST(BleherFokin, TrajectorySettles) {
  std::vector<double> est;
  for (int n = 8; n <= 16; ++n) {
    const double e = bleher_fokin_estimate(n);
    EXPECT_GT(e, 0.0);
    EXPECT_TRUE(std::isfinite(e));
    est.push_back(e);
  }
  // Successive ratios move monotonically toward 1.
  for (std::size_t k = 2; k < est.size(); ++k)
    EXPECT_LT(std::abs(est[k] / est[k - 1] - 1), std::abs(est[k - 1] / est[k - 2] - 1));
  // Two significant digits agree over n = 12..16 (recorded trajectory: 0.77463 .. 0.77465).
  for (int n = 12; n <= 16; ++n) EXPECT_NEAR(bleher_fokin_estimate(n), 0.7746, 0.0005);
}

}  // namespace
}  // namespace gog
