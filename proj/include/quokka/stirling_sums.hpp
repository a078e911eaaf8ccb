#pragma once

// Closed forms for sums of c(l,k)/2^k, s(l,k)/2^k, c(l,k)/4^k and s(l,k)/4^k, their
// even-k / odd-k halves, and a floating-point sweep of the simplified bounds that
// bracket them.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/rational.hpp"

namespace quokka {

namespace detail {

inline void require_positive_rank(int l) {
  if (l < 1) throw domain_error("Stirling sums are defined for l >= 1");
}

inline BigInt pow_ui(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// prod_{i=1}^{count} (4i - offset)
inline BigInt quarter_product(int count, int offset) {
  BigInt r = 1;
  for (int i = 1; i <= count; ++i) r *= 4 * i - offset;
  return r;
}

}  // namespace detail

/// sum_k c(l,k)/2^k = (2l)! / (2^{2l} l!).
inline Rational sum_A(int l) {
  detail::require_positive_rank(l);
  const auto ul = static_cast<unsigned long>(l);
  return make_rational(factorial(2 * ul), detail::pow_ui(2, 2 * ul) * factorial(ul));
}

/// sum_k s(l,k)/2^k = (-1)^{l-1} (2l-2)! / (2^{2l-1} (l-1)!).
inline Rational sum_B(int l) {
  detail::require_positive_rank(l);
  const auto ul = static_cast<unsigned long>(l);
  Rational r = make_rational(factorial(2 * ul - 2), detail::pow_ui(2, 2 * ul - 1) * factorial(ul - 1));
  return (l % 2 == 1) ? r : Rational(-r);
}

/// sum_k c(l,k)/4^k = prod_{i=1}^{l} (4i-3) / 4^l, the exact value of Gamma(l+1/4)/Gamma(1/4).
inline Rational sum_C(int l) {
  detail::require_positive_rank(l);
  return make_rational(detail::quarter_product(l, 3), detail::pow_ui(4, static_cast<unsigned long>(l)));
}

/// prod_{i=1}^{l-1} (4i-1) / 4^l, the exact value of Gamma(l-1/4)/(4 Gamma(3/4)).
inline Rational quarter_gamma_term(int l) {
  detail::require_positive_rank(l);
  return make_rational(detail::quarter_product(l - 1, 1), detail::pow_ui(4, static_cast<unsigned long>(l)));
}

/// sum_k s(l,k)/4^k = (-1)^{l-1} prod_{i=1}^{l-1} (4i-1) / 4^l.
inline Rational sum_D(int l) {
  Rational r = quarter_gamma_term(l);
  return (l % 2 == 1) ? r : Rational(-r);
}

/// sum over even k of c(l,k)/2^k.
inline Rational half_sum_even_2(int l) {
  detail::require_positive_rank(l);
  const auto ul = static_cast<unsigned long>(l);
  Rational base = make_rational(factorial(2 * ul), detail::pow_ui(2, 2 * ul + 1) * factorial(ul));
  return base * make_rational(2 * l - 2, 2 * l - 1);
}

/// sum over odd k of c(l,k)/2^k.
inline Rational half_sum_odd_2(int l) {
  detail::require_positive_rank(l);
  const auto ul = static_cast<unsigned long>(l);
  Rational base = make_rational(factorial(2 * ul), detail::pow_ui(2, 2 * ul + 1) * factorial(ul));
  return base * make_rational(2 * l, 2 * l - 1);
}

/// sum over even k of c(l,k)/4^k.
inline Rational half_sum_even_4(int l) {
  Rational r = (sum_C(l) - quarter_gamma_term(l)) / 2;
  return r;
}

/// sum over odd k of c(l,k)/4^k.
inline Rational half_sum_odd_4(int l) {
  Rational r = (sum_C(l) + quarter_gamma_term(l)) / 2;
  return r;
}

/// One failed inequality from the simplified-bound sweep.
struct BoundViolation {
  int l = 0;
  std::string inequality;
  long double lhs = 0;
  long double rhs = 0;
};

struct SimplifiedBoundReport {
  int l_max = 0;
  long checks = 0;
  std::vector<BoundViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Relative slack applied to every comparison in the sweep.
inline constexpr long double kSimplifiedBoundSlack = 1e-12L;

/// Sweep l = 2..l_max over the floating-point brackets of the central binomial
/// ratio and the quarter sums divided by l!. The exact quantities are tracked as
/// running long double products, never through a Gamma routine.
inline SimplifiedBoundReport check_simplified_bounds(int l_max) {
  if (l_max < 2) throw domain_error("check_simplified_bounds requires l_max >= 2");
  SimplifiedBoundReport report;
  report.l_max = l_max;

  auto less = [&](int l, const char* name, long double a, long double b) {
    ++report.checks;
    const long double scale = std::max(std::fabs(a), std::fabs(b));
    if (!(a < b + kSimplifiedBoundSlack * scale)) report.violations.push_back({l, name, a, b});
  };

  const long double pi = std::numbers::pi_v<long double>;
  // l = 1 values of the running products.
  long double central = 0.5L;      // (2l)! / ((l!)^2 4^l)
  long double c_ratio = 0.25L;     // sum_C(l) / l!
  long double gamma_prod = 1.0L;   // prod_{i=1}^{l-1} (4i-1)/(4i)
  for (int l = 2; l <= l_max; ++l) {
    const long double ld = l;
    central *= (2 * ld - 1) / (2 * ld);
    c_ratio *= (4 * ld - 3) / (4 * ld);
    gamma_prod *= (4 * ld - 5) / (4 * ld - 4);
    const long double g_ratio = gamma_prod / (4 * ld);  // quarter_gamma_term(l) / l!
    const long double even4 = (c_ratio - g_ratio) / 2;
    const long double odd4 = (c_ratio + g_ratio) / 2;
    const long double p34 = std::pow(ld + 1, 0.75L);
    const long double p54 = std::pow(ld + 1, 1.25L);

    less(l, "central binomial >= 25/(29 sqrt(pi l))", 25 / (29 * std::sqrt(pi * ld)), central);
    less(l, "sum_C/l! > 1/(4(l+1)^{3/4})", 1 / (4 * p34), c_ratio);
    less(l, "sum_C/l! < 3/(5(l+1)^{3/4})", c_ratio, 3 / (5 * p34));
    less(l, "gamma term/l! > 1/(5(l+1)^{5/4})", 1 / (5 * p54), g_ratio);
    less(l, "gamma term/l! < 18/(25(l+1)^{5/4})", g_ratio, 18 / (25 * p54));
    less(l, "even quarter sum lower", 1 / (8 * p34) - 9 / (25 * p54), even4);
    less(l, "even quarter sum upper", even4, 3 / (10 * p34) - 1 / (10 * p54));
    less(l, "odd quarter sum lower", 1 / (8 * p34) + 1 / (10 * p54), odd4);
    less(l, "odd quarter sum upper", odd4, 3 / (10 * p34) + 9 / (25 * p54));
  }
  return report;
}

}  // namespace quokka
