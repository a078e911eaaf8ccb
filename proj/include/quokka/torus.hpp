#pragma once

// Maximal tori as explicit products of cyclic groups, and the distribution of the
// largest 2-part order over their elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/rational.hpp"

namespace quokka {

/// Cyclic factor of order q^degree - sign.
struct TorusFactor {
  int degree = 1;
  int sign = 1;
  BigInt order;
  unsigned two_val = 0;  // 2-adic valuation of order
};

/// A torus T = prod C_i. When det_modulus is nonzero the torus is the kernel of
/// the map prod C_i -> Z/det_modulus summing exponents (SL/SU tori).
struct TorusShape {
  std::vector<TorusFactor> factors;
  std::uint64_t det_modulus = 0;
  std::uint64_t two_exp = 1;  // largest 2-part order of an element

  bool constrained() const { return det_modulus != 0 && det_modulus % 2 == 0; }

  std::vector<BigInt> orders() const {
    std::vector<BigInt> out;
    for (auto& f : factors) out.push_back(f.order);
    return out;
  }
};

enum class BoundMode { paper, exact };

inline std::string mode_name(BoundMode m) { return m == BoundMode::paper ? "paper" : "exact"; }

namespace detail {

inline void require_power_of_two(std::uint64_t target) {
  if (!is_power_of_two(target)) throw domain_error("target 2-part order must be a power of 2, got " + std::to_string(target));
}

inline BigInt pow2_big(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

// P(max 2-part order <= 2^j) for an unconstrained product: prod 2^{min(j,b_i)-b_i}.
inline std::vector<Rational> free_distribution(const std::vector<TorusFactor>& factors) {
  unsigned top = 0;
  for (auto& f : factors) top = std::max(top, f.two_val);
  std::vector<Rational> cdf(top + 1);
  for (unsigned j = 0; j <= top; ++j) {
    long shift = 0;
    for (auto& f : factors) shift += static_cast<long>(std::min(j, f.two_val)) - static_cast<long>(f.two_val);
    cdf[j] = pow2_rational(shift);
  }
  std::vector<Rational> pmf(top + 1);
  for (unsigned j = 0; j <= top; ++j) pmf[j] = cdf[j] - (j == 0 ? Rational(0) : cdf[j - 1]);
  return pmf;
}

// Kernel of sum-of-exponents mod M. Only the 2-primary parts matter: with 2^m || M,
// the odd part of the condition cuts every 2-part class evenly, so we count tuples
// x_i in Z/2^{b_i} with sum x_i = 0 mod 2^m, tracking max 2-part order.
inline std::vector<Rational> kernel_distribution(const std::vector<TorusFactor>& factors, std::uint64_t modulus) {
  const unsigned m = valuation2(modulus);
  const std::uint64_t width = std::uint64_t{1} << m;
  unsigned top = 0;
  for (auto& f : factors) {
    if (f.two_val < m) throw consistency_error("torus factor order not divisible by the determinant modulus 2-part");
    top = std::max(top, f.two_val);
  }
  // state[r][j]: number of partial tuples with residue r and max 2-part 2^j
  std::vector<std::vector<BigInt>> state(width, std::vector<BigInt>(top + 1, 0));
  state[0][0] = 1;
  for (auto& f : factors) {
    const unsigned b = f.two_val;
    // residue/2-part profile of one factor Z/2^b
    std::vector<std::vector<BigInt>> single(width, std::vector<BigInt>(b + 1, 0));
    single[0][0] = 1;
    for (unsigned j = 1; j <= b; ++j) {
      const unsigned s = b - j;  // valuation of x
      if (s >= m) {
        single[0][j] += pow2_big(j - 1);
      } else {
        for (std::uint64_t r = 1; r < width; ++r)
          if (valuation2(r) == s) single[r][j] += pow2_big(b - m);
      }
    }
    std::vector<std::vector<BigInt>> next(width, std::vector<BigInt>(top + 1, 0));
    for (std::uint64_t r1 = 0; r1 < width; ++r1)
      for (unsigned j1 = 0; j1 <= top; ++j1) {
        if (state[r1][j1] == 0) continue;
        for (std::uint64_t r2 = 0; r2 < width; ++r2)
          for (unsigned j2 = 0; j2 <= b; ++j2) {
            if (single[r2][j2] == 0) continue;
            next[(r1 + r2) % width][std::max(j1, j2)] += state[r1][j1] * single[r2][j2];
          }
      }
    state = std::move(next);
  }
  BigInt kernel = 0;
  for (unsigned j = 0; j <= top; ++j) kernel += state[0][j];
  std::vector<Rational> pmf(top + 1);
  for (unsigned j = 0; j <= top; ++j) pmf[j] = make_rational(state[0][j], kernel);
  return pmf;
}

}  // namespace detail

/// Exact P(max 2-part order = 2^j), indexed by j.
inline std::vector<Rational> two_part_distribution(const TorusShape& shape) {
  if (shape.factors.empty()) return {Rational(1)};
  return shape.constrained() ? detail::kernel_distribution(shape.factors, shape.det_modulus)
                             : detail::free_distribution(shape.factors);
}

/// Fill in two_exp from the exact distribution.
inline void finalize_shape(TorusShape& shape) {
  const auto pmf = two_part_distribution(shape);
  std::size_t top = 0;
  for (std::size_t j = 0; j < pmf.size(); ++j)
    if (pmf[j] > 0) top = j;
  shape.two_exp = std::uint64_t{1} << top;
}

inline TorusFactor make_factor(std::uint64_t q, int degree, int sign) {
  if (degree < 1) throw domain_error("torus factor degree must be positive");
  TorusFactor f;
  f.degree = degree;
  f.sign = sign;
  mpz_ui_pow_ui(f.order.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(degree));
  f.order -= sign;
  if (f.order <= 0) throw domain_error("torus factor of non-positive order");
  f.two_val = valuation2(f.order);
  return f;
}

/// Shape from explicit cyclic orders (used for ad-hoc products such as C4 x C4).
inline TorusShape torus_from_orders(const std::vector<BigInt>& orders, std::uint64_t det_modulus = 0) {
  TorusShape s;
  for (auto& o : orders) {
    if (o < 1) throw domain_error("cyclic factor order must be positive");
    TorusFactor f;
    f.order = o;
    f.two_val = valuation2(o);
    s.factors.push_back(f);
  }
  s.det_modulus = det_modulus;
  finalize_shape(s);
  return s;
}

/// Proportion of torus elements whose 2-part order is exactly target.
/// exact: from the explicit product. paper: the cyclic formula, the all-even
/// exponent-2 formula, or the one-half floor at the torus exponent.
inline Rational torus_fraction(const TorusShape& shape, std::uint64_t target, BoundMode mode) {
  detail::require_power_of_two(target);
  if (target > shape.two_exp) return 0;
  const unsigned j = valuation2(target);
  if (mode == BoundMode::exact) {
    const auto pmf = two_part_distribution(shape);
    return j < pmf.size() ? pmf[j] : Rational(0);
  }
  if (shape.two_exp == 1) return 1;
  if (shape.constrained()) return target == shape.two_exp ? make_rational(1, 2) : Rational(0);
  if (shape.factors.size() == 1) {
    const long b = shape.factors.front().two_val;
    return j == 0 ? pow2_rational(-b) : pow2_rational(static_cast<long>(j) - 1 - b);
  }
  const bool all_even = std::all_of(shape.factors.begin(), shape.factors.end(), [](const TorusFactor& f) { return f.two_val > 0; });
  if (shape.two_exp == 2 && all_even) {
    const long k = static_cast<long>(shape.factors.size());
    return j == 0 ? pow2_rational(-k) : 1 - pow2_rational(-k);
  }
  return target == shape.two_exp ? make_rational(1, 2) : Rational(0);
}

}  // namespace quokka
