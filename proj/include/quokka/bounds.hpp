#pragma once

// Lower bounds on the proportion of elements of a given 2-part order in a finite
// classical group: the torus-sum machine, the named closed-form rows, the odd and
// twice-odd estimates, and the projective corrections.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/group_spec.hpp"
#include "quokka/rational.hpp"
#include "quokka/stirling_sums.hpp"
#include "quokka/symmetric.hpp"
#include "quokka/torus.hpp"
#include "quokka/weyl.hpp"

namespace quokka {

/// a = 1 / (log(3 + sqrt 5) - log 2).
inline const double kA = 1.0 / (std::log(3.0 + std::sqrt(5.0)) - std::log(2.0));

struct BoundReport {
  GroupSpec group;
  std::uint64_t target = 1;
  BoundMode mode = BoundMode::paper;
  std::optional<Rational> exact;  // set when the bound is an exact rational
  double value = 0;               // the bound itself (float rows carry the float here)
  std::string provenance;
  bool applicable = true;
  std::string note;  // reason when not applicable, or extra detail
};

namespace detail {

inline BoundReport not_applicable(const GroupSpec& g, std::uint64_t target, std::string why) {
  BoundReport r;
  r.group = g;
  r.target = target;
  r.applicable = false;
  r.provenance = "none";
  r.note = std::move(why);
  return r;
}

inline BoundReport exact_report(const GroupSpec& g, std::uint64_t target, BoundMode mode, const Rational& v, std::string prov) {
  BoundReport r;
  r.group = g;
  r.target = target;
  r.mode = mode;
  r.exact = v;
  r.value = to_double(v);
  r.provenance = std::move(prov);
  return r;
}

}  // namespace detail

/// Sum over F-classes of weight x torus fraction. Paper mode takes the classes
/// whose torus exponent is the target (plus exponent-2 tori for odd order) with
/// the published fractions; exact mode takes every class with its exact mass.
inline BoundReport quokka_lower_bound(const GroupSpec& spec, std::uint64_t target, BoundMode mode) {
  spec.validate();
  detail::require_power_of_two(target);
  if (spec.projective || spec.omega)
    throw domain_error("the torus sum is stated for " + spec.base().name() + "; use projective_adjust or odd_twice_odd for " + spec.name());
  Rational total = 0;
  for_each_fclass(spec, [&](const FClass& f) {
    const TorusShape shape = torus_shape(spec, f.cls);
    if (mode == BoundMode::paper) {
      const bool take = shape.two_exp == target || (target == 1 && shape.two_exp == 2);
      if (!take) return;
    }
    total += f.weight * torus_fraction(shape, target, mode);
  });
  return detail::exact_report(spec, target, mode, total,
                              mode == BoundMode::paper ? "torus sum, published torus fractions" : "torus sum, exact torus distributions");
}

/// Projective correction for a bound computed on the non-projective group.
inline BoundReport projective_adjust(const BoundReport& base, const GroupSpec& spec) {
  spec.validate();
  BoundReport out = base;
  out.group = spec;
  const std::uint64_t t = t_of_q(spec.q);
  const std::uint64_t target = base.target;
  if (target == 1) {
    out.note = "odd-order elements map to odd-order elements modulo the centre";
    return out;
  }
  if (target % t != 0) throw domain_error("no projective correction for target " + std::to_string(target) + " below t = " + std::to_string(t));
  const std::uint64_t r = target / t;
  if (r < 2) throw domain_error("no projective correction when target / t = 1");
  const int rank = spec.rank;
  if (static_cast<std::uint64_t>(rank) % r != 0) {
    out.note = "target / t does not divide the rank; bound unchanged";
    return out;
  }
  const double c = is_linear_type(spec.family) ? 2.0 : 4.0;
  const double corr = 3.0 / (c * std::pow(static_cast<double>(rank), 1.0 - 1.0 / (2.0 * static_cast<double>(r))));
  out.exact.reset();
  out.value = base.value - corr;
  out.provenance = base.provenance + " minus semiregular-class correction";
  out.note = "subtracted " + format_float(corr);
  return out;
}

/// Closed-form row bound for the target, or an explicit not-applicable result.
inline BoundReport named_bound(const GroupSpec& spec, std::uint64_t target) {
  spec.validate();
  detail::require_power_of_two(target);
  const std::uint64_t q = spec.q, t = t_of_q(q);
  const int n = spec.rank;
  if (spec.omega) return detail::not_applicable(spec, target, "closed-form rows cover SO, not Omega");

  if (is_linear_type(spec.family)) {
    const bool unitary = is_unitary(spec.family);
    const std::uint64_t first_row_target = two_part(unitary ? q + 1 : q - 1);
    if (target == first_row_target) {
      const double pi = std::numbers::pi;
      BoundReport r = detail::exact_report(spec, target, BoundMode::paper, p_two_part(n, 0) / 2,
                                           "cycle-free torus row: 1/(2 sqrt(2 pi n))");
      r.value = 1.0 / (2.0 * std::sqrt(2.0 * pi * n));
      r.note = "float bound; exact p_n(1)/2 alongside";
      if (spec.projective) {
        r.value -= 1.0 / (2.0 * n);
        if (n % 2 == 1) r.exact = *r.exact - make_rational(1, 2L * n);
        r.provenance += " minus 1/(2n) for the quotient by the centre";
      }
      return r;
    }
    if (target % t != 0 || target / t < 2) return detail::not_applicable(spec, target, "target / t must be at least 2 for this family");
    const std::uint64_t r = target / t;
    if (r > static_cast<std::uint64_t>(n)) return detail::not_applicable(spec, target, "target / t exceeds n");
    if (is_special_linear(spec.family) && r == static_cast<std::uint64_t>(n))
      return detail::not_applicable(spec, target, "target / t = n: no torus of this exponent in the special group");
    const int j = static_cast<int>(valuation2(r));
    BoundReport out = detail::exact_report(spec.base(), target, BoundMode::paper, p_two_part(n, j) / 2, "linear/unitary row: p_n(target/t)/2");
    return spec.projective ? projective_adjust(out, spec) : out;
  }

  if (target % t != 0) return detail::not_applicable(spec, target, "target must be a multiple of t for this family");
  const std::uint64_t r = target / t;
  if (r < 1 || r > static_cast<std::uint64_t>(n)) return detail::not_applicable(spec, target, "target / t outside 1..l");
  if (spec.projective && r == 1) return detail::not_applicable(spec, target, "no quotient bound when target / t = 1");
  const int j = static_cast<int>(valuation2(r));
  Rational v = p_two_part(n, j) / 4;
  std::string prov = "symplectic/odd orthogonal row: p_l(target/t)/4";
  if (is_even_orthogonal(spec.family)) {
    prov = "even orthogonal row: p_l(target/t)/4";
    if (two_part(static_cast<std::uint64_t>(n)) == r) {
      v -= make_rational(1, 4L * n);
      prov += " - 1/(4l)";
    }
  }
  BoundReport out = detail::exact_report(spec.base(), target, BoundMode::paper, v, prov);
  return spec.projective ? projective_adjust(out, spec) : out;
}

struct OddTwiceOdd {
  BoundReport odd;             // target 1
  BoundReport twice;           // target 2
  double odd_simplified = 0;   // sqrt(pi) / fractional power floors
  double twice_simplified = 0;
  double odd_scaled = 0;       // d^{3/4} * odd
  double twice_scaled = 0;     // d^{1/2} * twice
  int delta1 = 1;
  int delta2 = 1;
};

/// Whether an even orthogonal group's exponent-2 classes come from odd cycle counts.
inline bool orthogonal_uses_odd_counts(Family f, std::uint64_t q, int l) {
  const bool minus = f == Family::SO_minus;
  if (q % 4 == 1) return minus;
  return minus ? l % 2 == 0 : l % 2 == 1;
}

inline OddTwiceOdd odd_twice_odd(const GroupSpec& spec) {
  spec.validate();
  if (is_linear_type(spec.family)) throw domain_error("odd/twice-odd estimates cover Sp and SO families, not " + family_name(spec.family));
  OddTwiceOdd res;
  res.delta1 = spec.omega ? 2 : 1;
  res.delta2 = (spec.omega ? 2 : 1) * (spec.projective ? 2 : 1);
  const int l = spec.rank;
  const Rational lf(factorial(static_cast<unsigned long>(l)));
  const long double ld = l, pi = std::numbers::pi_v<long double>;
  const long double p34 = std::pow(ld + 1, 0.75L), p54 = std::pow(ld + 1, 1.25L);
  const long double d1 = res.delta1, d2 = res.delta2;
  Rational odd, twice;
  long double odd_s, twice_s;
  std::string prov;
  if (!is_even_orthogonal(spec.family)) {
    odd = res.delta1 * sum_C(l) / lf;
    twice = sum_A(l) / lf - res.delta2 * sum_C(l) / lf;
    odd_s = d1 / (4 * p34);
    twice_s = 25 / (29 * std::sqrt(pi * ld)) - 3 * d2 / (5 * p34);
    prov = "all-negative (or sign-matched) cycle classes, Stirling sums at 1/2 and 1/4";
  } else {
    const bool odd_counts = orthogonal_uses_odd_counts(spec.family, spec.q, l);
    const Rational half2 = odd_counts ? half_sum_odd_2(l) : half_sum_even_2(l);
    const Rational half4 = odd_counts ? half_sum_odd_4(l) : half_sum_even_4(l);
    odd = 2 * res.delta1 * half4 / lf;
    twice = 2 * half2 / lf - 2 * res.delta2 * half4 / lf;
    const long double lead = 50 * (odd_counts ? ld : ld - 1) / (29 * (2 * ld - 1) * std::sqrt(pi * ld));
    if (odd_counts) {
      odd_s = d1 / (4 * p34) + d1 / (5 * p54);
      twice_s = lead - 2 * d2 * (3 / (10 * p34) + 9 / (25 * p54));
    } else {
      odd_s = d1 / (4 * p34) - 18 * d1 / (25 * p54);
      twice_s = lead - 2 * d2 * (3 / (10 * p34) - 1 / (10 * p54));
    }
    prov = std::string("parity-restricted cycle classes (") + (odd_counts ? "odd" : "even") + " cycle counts)";
  }
  auto clamp = [](Rational v) { return v < 0 ? Rational(0) : v; };
  const bool twice_clamped = twice < 0;
  res.odd = detail::exact_report(spec, 1, BoundMode::paper, clamp(odd), "odd order: " + prov);
  res.twice = detail::exact_report(spec, 2, BoundMode::paper, clamp(twice), "2-part order 2: " + prov);
  if (twice_clamped) res.twice.note = "formula value negative, clamped to 0";
  res.odd_simplified = static_cast<double>(odd_s);
  res.twice_simplified = static_cast<double>(twice_s);
  const double d = spec.dimension();
  res.odd_scaled = std::pow(d, 0.75) * res.odd.value;
  res.twice_scaled = std::sqrt(d) * res.twice.value;
  return res;
}

struct IntervalI {
  double lo = 0;
  double hi = 0;
  std::vector<std::uint64_t> powers;  // powers of 2 in [lo, hi)
};

/// [a t log(n) / 2, 4 a t log(n)).
inline IntervalI interval_I(std::uint64_t n, std::uint64_t q) {
  if (n < 9) throw domain_error("interval_I needs n >= 9");
  const double t = static_cast<double>(t_of_q(q));
  const double base = kA * t * std::log(static_cast<double>(n));
  IntervalI iv{base / 2, 4 * base, {}};
  for (std::uint64_t p = 1; p < iv.hi && p != 0; p <<= 1)
    if (p >= iv.lo) iv.powers.push_back(p);
  return iv;
}

/// Exponents j (possibly negative) with 2^j in [a log(m) / 2, a log(m)).
inline std::vector<int> p0_exponents_in(std::uint64_t m) {
  if (m < 2) throw domain_error("p0 selection needs m >= 2");
  const double hi = kA * std::log(static_cast<double>(m)), lo = hi / 2;
  std::vector<int> out;
  for (int j = static_cast<int>(std::floor(std::log2(lo))) - 1; std::ldexp(1.0, j) < hi; ++j)
    if (std::ldexp(1.0, j) >= lo) out.push_back(j);
  return out;
}

/// The unique j with 2^j in [a log(m) / 2, a log(m)).
inline int p0_exponent_for(std::uint64_t m) {
  const auto js = p0_exponents_in(m);
  if (js.size() != 1) throw consistency_error("expected exactly one power of 2 in the p0 window for m = " + std::to_string(m));
  return js.front();
}

}  // namespace quokka
