#include <gtest/gtest.h>

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "gog/counting.hpp"
#include "gog/enumeration.hpp"

namespace gog {
namespace {

using Rows = std::vector<std::vector<int>>;

// Every stack of strictly increasing rows that passes validation.
std::set<std::vector<int>> brute_triangles(int n) {
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    std::vector<int> row;
    for (int v = 1; v <= n; ++v)
      if ((m >> (v - 1)) & 1U) row.push_back(v);
    choices[row.size() - 1].push_back(row);
  }
  std::set<std::vector<int>> out;
  Rows rows(n);
  auto go = [&](auto&& self, int i) -> void {
    if (i == n) {
      try {
        const auto t = validate_triangle(n, rows);
        out.insert(std::vector<int>(t.entries().begin(), t.entries().end()));
      } catch (const Error&) {
      }
      return;
    }
    for (const auto& r : choices[i]) {
      rows[i] = r;
      self(self, i + 1);
    }
  };
  go(go, 0);
  return out;
}

TEST(Enumerate, SmallOrders) {
  EXPECT_EQ(enumerate_triangles(1).size(), 1U);
  const auto three = enumerate_triangles(3);
  ASSERT_EQ(three.size(), 7U);
  EXPECT_EQ(three.front().rows(), Rows({{1}, {1, 2}, {1, 2, 3}}));
  EXPECT_EQ(three[1].rows(), Rows({{1}, {1, 3}, {1, 2, 3}}));
  EXPECT_EQ(three.back().rows(), Rows({{3}, {2, 3}, {1, 2, 3}}));
  EXPECT_THROW(enumerate_triangles(8), Error);
}

TEST(Enumerate, LexOrderExtremesNoDuplicates) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_triangles(n);
    EXPECT_EQ(BigCount(all.size()), asm_number(n));
    EXPECT_EQ(all.front(), extremal_triangle(n, Extreme::Min));
    EXPECT_EQ(all.back(), extremal_triangle(n, Extreme::Max));
    for (std::size_t k = 1; k < all.size(); ++k) ASSERT_LT(all[k - 1], all[k]);
  }
}

TEST(Enumerate, MatchesBruteForceSets) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> got;
    for (const auto& t : enumerate_triangles(n)) got.insert(std::vector<int>(t.entries().begin(), t.entries().end()));
    EXPECT_EQ(got, brute_triangles(n)) << n;
  }
}

TEST(Enumerate, WorkersKeepOrder) {
  EXPECT_EQ(enumerate_triangles(6, 4), enumerate_triangles(6, 1));
  EXPECT_EQ(build_census(6, 3), build_census(6, 1));
}

TEST(Completions, TopRowBuckets) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigCount> bucket(n + 1, 0);
    for_each_triangle(n, [&](const MonotoneTriangle& t) { bucket[t.at(0, 0)] += 1; });
    for (int v = 1; v <= n; ++v) EXPECT_EQ(completions_count(TrianglePrefix(n, {v})), bucket[v]);
  }
  EXPECT_EQ(completions_count(TrianglePrefix(3, {1})), 2);
  EXPECT_EQ(completions_count(TrianglePrefix(3, {2})), 3);
  EXPECT_EQ(completions_count(TrianglePrefix(3, {3})), 2);
  EXPECT_EQ(completions_count(TrianglePrefix(3, {1, 3})), 1);
  EXPECT_EQ(completions_count(TrianglePrefix(4, {})), 42);
  EXPECT_THROW(TrianglePrefix(3, {3, 2}), Error);
}

TEST(Completions, TotalIsAsmNumber) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(completion_table(n).total(), asm_number(n)) << n;
}

TEST(Rank, RoundTrip) {
  EXPECT_EQ(rank(extremal_triangle(3, Extreme::Min)), 0);
  EXPECT_EQ(unrank(3, 6), extremal_triangle(3, Extreme::Max));
  for (int n = 1; n <= 5; ++n) {
    BigCount k = 0;
    for_each_triangle(n, [&](const MonotoneTriangle& t) {
      ASSERT_EQ(rank(t), k);
      ASSERT_EQ(unrank(n, k), t);
      k += 1;
    });
  }
  const BigCount last = asm_number(12) - 1;
  EXPECT_EQ(rank(unrank(12, last)), last);
  EXPECT_EQ(unrank(12, last), extremal_triangle(12, Extreme::Max));
  for (BigCount k : {BigCount(-1), BigCount(7)}) {
    try {
      unrank(3, k);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
    }
  }
}

TEST(Sample, DeterministicPerSeed) {
  EXPECT_EQ(sample_uniform(6, 50, 11), sample_uniform(6, 50, 11));
  EXPECT_NE(sample_uniform(6, 50, 11), sample_uniform(6, 50, 12));
  for (const auto& t : sample_uniform(10, 20, 3)) EXPECT_EQ(t.size(), 10);
}

TEST(Sample, ChiSquareOverM4) {
  const int samples = 42000;
  std::map<BigCount, int> hist;
  for (const auto& t : sample_uniform(4, samples, 20240601)) ++hist[rank(t)];
  const double expected = samples / 42.0;
  double chi2 = 0;
  for (int k = 0; k < 42; ++k) {
    const double d = hist[BigCount(k)] - expected;
    chi2 += d * d / expected;
  }
  EXPECT_LT(chi2, 74.74493839842374);
}

TEST(Census, SmallTables) {
  const auto c3 = build_census(3);
  EXPECT_EQ(c3.counts, (std::map<std::uint64_t, BigCount>{{0b100, 4}, {0b101, 1}, {0b110, 1}, {0b111, 1}}));
  const auto h = run_histogram(c3);
  EXPECT_EQ(h.counts, (std::map<int, BigCount>{{1, 5}, {2, 1}, {3, 1}}));
}

TEST(Census, SupersetSumsAreEta) {
  for (int n = 1; n <= 6; ++n) {
    const auto c = build_census(n);
    EXPECT_EQ(c.total(), asm_number(n));
    for (std::uint64_t rows = 0; rows < (std::uint64_t{1} << (n - 1)); ++rows) {
      BigCount sum = 0;
      for (const auto& [bits, cnt] : c.counts)
        if ((bits & rows) == rows) sum += cnt;
      EXPECT_EQ(sum, eta(n, rows));
    }
  }
}

TEST(CensusFile, RoundTripAndRejects) {
  const auto c = build_census(5);
  const auto text = format_census(c);
  EXPECT_EQ(text.substr(0, text.find('\n')), "MTCENSUS v1 n=5 total=429");
  EXPECT_EQ(parse_census(text), c);
  const std::string good = "MTCENSUS v1 n=3 total=7\n4 4\n5 1\n6 1\n7 1\n";
  EXPECT_EQ(parse_census(good), build_census(3));
  for (const std::string bad : {
           "MTCENSUS v2 n=3 total=7\n4 4\n5 1\n6 1\n7 1\n",
           "MTCENSUS v1 n=3 total=8\n4 4\n5 1\n6 1\n7 1\n",
           "MTCENSUS v1 n=3 total=7\n5 1\n4 4\n6 1\n7 1\n",
           "MTCENSUS v1 n=3 total=7\n4 4\n5 1\n6 1\n3 1\n",
           "MTCENSUS v1 n=3 total=7\n4 4\n5 1\n6 1\n7 1",
           "MTCENSUS v1 n=3 total=7\n4 4\n5 x\n6 1\n7 1\n",
           "MTCENSUS v1 n=3 total=7\n4 4\n5 1\n6 1\n7 1\n8 0\n",
           "",
       }) {
    try {
      parse_census(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError);
    }
  }
}

TEST(CensusFile, CacheDirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir(std::string("flagdir")), std::filesystem::path("flagdir"));
  ::setenv("GOG_CACHE_DIR", "envdir", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), std::filesystem::path("envdir"));
  EXPECT_EQ(resolve_cache_dir(std::string("flagdir")), std::filesystem::path("flagdir"));
  ::unsetenv("GOG_CACHE_DIR");
  EXPECT_EQ(resolve_cache_dir(std::nullopt), std::filesystem::path(".cache"));
}

TEST(CensusFile, LoadOrBuildWritesThenReads) {
  const auto dir = std::filesystem::temp_directory_path() / "gog_census_test";
  std::filesystem::remove_all(dir);
  const auto built = load_or_build_census(5, dir);
  ASSERT_TRUE(std::filesystem::exists(census_path(dir, 5)));
  EXPECT_EQ(load_or_build_census(5, dir), built);
  {
    std::ofstream out(census_path(dir, 5), std::ios::trunc);
    out << "garbage\n";
  }
  EXPECT_THROW(load_or_build_census(5, dir), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace gog
