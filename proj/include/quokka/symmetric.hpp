#pragma once

// Element-order statistics of the symmetric group S_n: partitions, Stirling
// numbers of the first kind, Erdos-Turan products and a class-sum census.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/rational.hpp"

namespace quokka {

/// Cycle type of a permutation: parts in non-increasing order summing to n.
struct Partition {
  std::vector<int> parts;
  int n = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Visit every partition of n in reverse-lexicographic order, starting at (n).
inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw domain_error("partitions are enumerated for n >= 1");
  Partition p;
  p.n = n;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      visit(p);
      return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
      p.parts.push_back(a);
      rec(remaining - a, a);
      p.parts.pop_back();
    }
  };
  rec(n, n);
}

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Proportion of S_n lying in the class with this cycle type: 1 / prod a^{m_a} m_a!.
inline Rational class_proportion(const Partition& p) {
  BigInt z = 1;
  std::size_t i = 0;
  while (i < p.parts.size()) {
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p.parts[i]), mult);
    z *= pw * factorial(mult);
    i = j;
  }
  return Rational(BigInt(1), z);
}

/// 2-part of the order of a permutation with this cycle type (max 2-part over the parts).
inline std::uint64_t two_part_of_order(const Partition& p) {
  std::uint64_t best = 1;
  for (int a : p.parts) best = std::max(best, two_part(static_cast<std::uint64_t>(a)));
  return best;
}

namespace detail {

// Rows of unsigned Stirling numbers of the first kind, grown on demand. Rows are
// immutable once appended and std::deque never relocates existing elements.
class StirlingTable {
 public:
  const std::vector<BigInt>& row(int l) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});  // row 0: c(0,0) = 1
    while (static_cast<int>(rows_.size()) <= l) {
      const auto& prev = rows_.back();
      const long m = static_cast<long>(rows_.size()) - 1;  // previous row index
      std::vector<BigInt> next(prev.size() + 1, 0);
      for (std::size_t k = 1; k < next.size(); ++k) {
        next[k] = prev[k - 1];
        if (k < prev.size()) next[k] += m * prev[k];
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(l)];
  }

 private:
  std::mutex mutex_;
  std::deque<std::vector<BigInt>> rows_;
};

inline StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace detail

/// Row c(l, 0..l) of unsigned Stirling numbers of the first kind.
inline const std::vector<BigInt>& stirling_row(int l) {
  if (l < 0) throw domain_error("Stirling row index must be non-negative");
  return detail::stirling_table().row(l);
}

/// Unsigned Stirling number of the first kind: permutations of l points with k cycles.
inline BigInt stirling_c(int l, int k) {
  if (l < 1 || k < 1 || k > l) throw domain_error("stirling_c requires 1 <= k <= l");
  return stirling_row(l)[static_cast<std::size_t>(k)];
}

/// Signed Stirling number of the first kind, (-1)^{l-k} c(l,k).
inline BigInt stirling_s(int l, int k) {
  BigInt c = stirling_c(l, k);
  return ((l - k) % 2 == 0) ? c : BigInt(-c);
}

/// Proportion of S_n whose order is not divisible by the prime power p0.
/// The empty product (p0 > n, or n = 0) is 1.
inline Rational s_not(int n, std::uint64_t p0) {
  if (n < 0) throw domain_error("s_not requires n >= 0");
  if (!is_prime_power(p0)) throw domain_error("s_not requires p0 to be a prime power");
  const std::uint64_t terms = static_cast<std::uint64_t>(n) / p0;
  BigInt num = 1, den = 1;
  for (std::uint64_t u = 1; u <= terms; ++u) {
    const BigInt f = big_from_u64(u) * big_from_u64(p0);
    num *= f - 1;
    den *= f;
  }
  return make_rational(num, den);
}

/// Proportion of S_n whose elements have 2-part order exactly 2^j.
inline Rational p_two_part(int n, int j) {
  if (n < 1) throw domain_error("p_two_part requires n >= 1");
  if (j < 0) throw domain_error("p_two_part requires j >= 0");
  if (j >= 62 || (std::uint64_t{1} << j) > static_cast<std::uint64_t>(n)) return 0;
  const std::uint64_t pj = std::uint64_t{1} << j;
  if (j == 0) return s_not(n, 2);
  return s_not(n, 2 * pj) - s_not(n, pj);
}

/// Brute-force class sum over all partitions of n, keyed by 2-part order.
inline std::map<std::uint64_t, Rational> sn_census(int n) {
  if (n < 1 || n > 16) throw domain_error("sn_census is limited to 1 <= n <= 16");
  std::map<std::uint64_t, Rational> out;
  for_each_partition(n, [&](const Partition& p) { out[two_part_of_order(p)] += class_proportion(p); });
  return out;
}

/// Split of c(l,k) into permutations with an even (first) / odd (second) number
/// of even-length cycles.
inline std::pair<BigInt, BigInt> c1_c2(int l, int k) {
  BigInt c = stirling_c(l, k);
  if ((l - k) % 2 == 0) return {c, BigInt(0)};
  return {BigInt(0), c};
}

}  // namespace quokka
