#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <string>

#include "quokka/errors.hpp"

namespace quokka {

using BigInt = mpz_class;
/// Exact rational; mpq_class keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline Rational pow2_rational(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// "num/den", or "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Ten significant digits, the fixed float format used in all emitted tables.
inline std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// 2-adic valuation of a positive integer.
inline unsigned valuation2(const BigInt& v) {
  if (v <= 0) throw domain_error("2-adic valuation of a non-positive integer");
  return static_cast<unsigned>(mpz_scan1(v.get_mpz_t(), 0));
}

inline unsigned valuation2(std::uint64_t v) {
  if (v == 0) throw domain_error("2-adic valuation of zero");
  return static_cast<unsigned>(__builtin_ctzll(v));
}

/// Largest power of 2 dividing v.
inline std::uint64_t two_part(std::uint64_t v) { return std::uint64_t{1} << valuation2(v); }

inline bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace quokka
