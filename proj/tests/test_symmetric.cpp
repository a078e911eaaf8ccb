#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "quokka/symmetric.hpp"

using namespace quokka;

namespace {

// Oracle: walk every permutation of {0..n-1} with std::next_permutation and
// collect its cycle lengths. Nothing here touches partitions or Stirling code.
std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

std::uint64_t order_of(const std::vector<int>& cycles) {
  std::uint64_t o = 1;
  for (int c : cycles) o = std::lcm(o, static_cast<std::uint64_t>(c));
  return o;
}

}  // namespace

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling_c(3, 2), 3);
  EXPECT_EQ(stirling_s(3, 2), -3);
  EXPECT_EQ(stirling_c(1, 1), 1);
  for (int l = 1; l <= 40; ++l) EXPECT_EQ(stirling_s(l, l), 1);
}

TEST(Stirling, MatchesPermutationEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    std::map<int, long> by_cycles;
    for_each_permutation(n, [&](const std::vector<int>& p) { ++by_cycles[static_cast<int>(cycle_lengths(p).size())]; });
    for (int k = 1; k <= n; ++k) EXPECT_EQ(stirling_c(n, k), by_cycles[k]) << n << "," << k;
  }
  EXPECT_EQ(stirling_c(4, 2), 11);
  EXPECT_EQ(stirling_s(4, 2), 11);
}

TEST(Stirling, RowSumsAreFactorials) {
  for (int l = 1; l <= 200; ++l) {
    BigInt s = 0;
    for (int k = 1; k <= l; ++k) s += stirling_c(l, k);
    EXPECT_EQ(s, factorial(static_cast<unsigned long>(l))) << l;
  }
}

TEST(Stirling, RejectsBadIndices) {
  EXPECT_THROW(stirling_c(3, 0), domain_error);
  EXPECT_THROW(stirling_c(3, 4), domain_error);
  EXPECT_THROW(stirling_s(0, 0), domain_error);
  EXPECT_THROW(c1_c2(2, 3), domain_error);
}

TEST(SNot, AgreesWithPermutationCensus) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t p0 : {2u, 3u, 4u, 5u, 7u, 8u}) {
      long hit = 0, total = 0;
      for_each_permutation(n, [&](const std::vector<int>& p) {
        ++total;
        if (order_of(cycle_lengths(p)) % p0 != 0) ++hit;
      });
      EXPECT_EQ(s_not(n, p0), make_rational(hit, total)) << n << " " << p0;
    }
  }
  EXPECT_EQ(s_not(2, 2), make_rational(1, 2));
  EXPECT_EQ(s_not(4, 2), make_rational(3, 8));
  EXPECT_EQ(s_not(5, 3), make_rational(2, 3));
}

TEST(SNot, EmptyProductAndErrors) {
  EXPECT_EQ(s_not(3, 4), 1);
  EXPECT_EQ(s_not(0, 2), 1);
  EXPECT_THROW(s_not(5, 6), domain_error);
  EXPECT_THROW(s_not(5, 1), domain_error);
  EXPECT_THROW(s_not(-1, 2), domain_error);
}

TEST(SNot, MonotoneAndInUnitInterval) {
  for (std::uint64_t p0 : {2u, 3u, 4u, 8u, 9u, 16u}) {
    Rational prev = 1;
    for (int n = 1; n <= 120; ++n) {
      Rational v = s_not(n, p0);
      EXPECT_GT(v, 0);
      EXPECT_LE(v, 1);
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(PTwoPart, S4Values) {
  EXPECT_EQ(p_two_part(4, 2), make_rational(1, 4));
  EXPECT_EQ(p_two_part(4, 1), make_rational(3, 8));
  EXPECT_EQ(p_two_part(4, 3), 0);
  for (int n = 1; n <= 50; ++n) EXPECT_EQ(p_two_part(n, 0), s_not(n, 2));
}

TEST(PTwoPart, SumsToOne) {
  for (int n = 1; n <= 200; ++n) {
    Rational s = 0;
    for (int j = 0; (1 << j) <= n; ++j) s += p_two_part(n, j);
    EXPECT_EQ(s, 1) << n;
  }
}

TEST(SnCensus, MatchesPermutationWalk) {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::uint64_t, long> counts;
    long total = 0;
    for_each_permutation(n, [&](const std::vector<int>& p) {
      ++total;
      ++counts[two_part(order_of(cycle_lengths(p)))];
    });
    auto census = sn_census(n);
    ASSERT_EQ(census.size(), counts.size()) << n;
    for (auto& [k, c] : counts) EXPECT_EQ(census[k], make_rational(c, total));
  }
}

TEST(SnCensus, KnownValuesAndFormulaAgreement) {
  auto c4 = sn_census(4);
  EXPECT_EQ(c4[1], make_rational(3, 8));
  EXPECT_EQ(c4[2], make_rational(3, 8));
  EXPECT_EQ(c4[4], make_rational(1, 4));
  EXPECT_EQ(sn_census(1).at(1), 1);
  for (int n = 1; n <= 14; ++n) {
    auto c = sn_census(n);
    for (int j = 0; (1 << j) <= n; ++j) {
      auto it = c.find(std::uint64_t{1} << j);
      Rational v = it == c.end() ? Rational(0) : it->second;
      EXPECT_EQ(v, p_two_part(n, j)) << n << " " << j;
    }
  }
  EXPECT_THROW(sn_census(17), domain_error);
  EXPECT_THROW(sn_census(0), domain_error);
}

TEST(Partitions, EnumerationOrderAndCount) {
  auto ps = partitions(5);
  ASSERT_EQ(ps.size(), 7u);
  EXPECT_EQ(ps.front().parts, std::vector<int>({5}));
  EXPECT_EQ(ps.back().parts, std::vector<int>({1, 1, 1, 1, 1}));
  for (auto& p : ps) {
    EXPECT_TRUE(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    EXPECT_EQ(std::accumulate(p.parts.begin(), p.parts.end(), 0), 5);
  }
  Rational total = 0;
  for (auto& p : partitions(12)) total += class_proportion(p);
  EXPECT_EQ(total, 1);
}

TEST(C1C2, KnownCases) {
  EXPECT_EQ(c1_c2(4, 2), std::make_pair(BigInt(11), BigInt(0)));
  EXPECT_EQ(c1_c2(3, 2), std::make_pair(BigInt(0), BigInt(3)));
  for (int l = 1; l <= 20; ++l) EXPECT_EQ(c1_c2(l, l), std::make_pair(BigInt(1), BigInt(0)));
}

TEST(C1C2, MatchesPartitionParityCount) {
  // Oracle: count permutations by classes, splitting on the number of even parts.
  for (int l = 1; l <= 12; ++l) {
    std::map<int, Rational> c1, c2;
    for (auto& p : partitions(l)) {
      int evens = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(), [](int a) { return a % 2 == 0; }));
      auto& target = (evens % 2 == 0) ? c1 : c2;
      target[static_cast<int>(p.parts.size())] += class_proportion(p);
    }
    const Rational lf(factorial(static_cast<unsigned long>(l)));
    for (int k = 1; k <= l; ++k) {
      auto [a, b] = c1_c2(l, k);
      EXPECT_EQ(Rational(a), c1[k] * lf) << l << "," << k;
      EXPECT_EQ(Rational(b), c2[k] * lf) << l << "," << k;
    }
  }
}
