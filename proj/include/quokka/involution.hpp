#pragma once

// Lower bounds for P_m = P(|x|_2 > |y|_2) with (x, y) uniform in a centralizer
// Cl_m(q) x Cl_{d-m}(q): balanced involutions, the general formula tables and the
// K / sqrt(d) corollary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quokka/bounds.hpp"
#include "quokka/errors.hpp"
#include "quokka/group_spec.hpp"
#include "quokka/rational.hpp"
#include "quokka/stirling_sums.hpp"
#include "quokka/symmetric.hpp"
#include "quokka/table1.hpp"

namespace quokka {

struct CentralizerSpec {
  GroupSpec ambient;
  int m = 2;

  int d() const { return ambient.dimension(); }
  int l() const { return is_linear_type(ambient.family) ? ambient.rank : d() / 2; }
  int k() const { return is_linear_type(ambient.family) ? m : m / 2; }
};

/// Build the centralizer data from the ambient dimension. Even-dimensional
/// orthogonal ambients are taken as SO+ (the sign does not enter the bounds).
inline CentralizerSpec make_centralizer(Family family, int d, int m, std::uint64_t q) {
  if (is_special_linear(family)) throw domain_error("centralizer bounds cover GL, GU, Sp and SO ambients");
  if (d < 4) throw domain_error("centralizer bounds need d >= 4");
  int rank = d;
  if (family == Family::Sp) {
    if (d % 2) throw domain_error("Sp needs even dimension");
    rank = d / 2;
  } else if (is_orthogonal(family)) {
    family = d % 2 ? Family::SO_odd : (family == Family::SO_minus ? Family::SO_minus : Family::SO_plus);
    rank = d / 2;
  }
  CentralizerSpec cs{make_spec(family, rank, q), m};
  if (m < 2 || m > d - 2) throw domain_error("need 2 <= m <= d - 2, got m = " + std::to_string(m));
  if (family == Family::Sp && m % 2) throw domain_error("Sp centralizer needs even m");
  return cs;
}

namespace detail {

inline long double central_binomial_ratio(int x) {
  long double v = 1;
  for (int i = 1; i <= x; ++i) v *= (2.0L * i - 1) / (2.0L * i);
  return v;
}

inline std::uint64_t pow2u(int j) { return std::uint64_t{1} << j; }

}  // namespace detail

// ---------------------------------------------------------------- strong involutions

struct Table2Row {
  std::string interval;
  double alpha_factor = 0;  // alpha = alpha_factor * a
  double factor = 0;        // exponential factor
  std::string sym_bound;    // symmetric-group bound as printed
  double contribution = 0;
};

struct Table2 {
  bool upper = false;
  std::vector<Table2Row> rows;
  double total = 0;
};

/// Interval-sum calculation for m >= 400. Lower range: factor
/// exp(-(1 + log 2 / log 400) / alpha) with weight 399/400; upper range (d/2 <= m
/// <= 2d/3): factor exp(-1/alpha) with weight 398/400. alpha is the left endpoint.
inline Table2 table2(const std::vector<Table1Row>& t1, bool upper = false) {
  if (t1.size() != 8) throw domain_error("table2 needs the 8 published rows");
  Table2 out;
  out.upper = upper;
  const double shrink = upper ? 1.0 : 1.0 + std::log(2.0) / std::log(400.0);
  const double weight = upper ? 398.0 / 400.0 : 399.0 / 400.0;
  for (std::size_t i = 1; i < t1.size(); ++i) {
    Table2Row r;
    r.interval = t1[i].interval;
    r.alpha_factor = t1[i].lo_factor;
    const double alpha = r.alpha_factor * kA;
    r.factor = std::exp(-shrink / alpha);
    r.sym_bound = t1[i].sym;
    r.contribution = r.factor * t1[i].sym_value() * weight;
    out.total += r.contribution;
    out.rows.push_back(r);
  }
  return out;
}

inline Table2 table2(bool upper = false) { return table2(load_table1(), upper); }

struct BalancedBound {
  double value = 0;     // max(computed, floor)
  double computed = 0;  // the evaluated sum
  double floor = 0;     // published constant for the range
  bool upper_range = false;
  std::string method;
};

inline BalancedBound pm_balanced_bound(const CentralizerSpec& cs, const std::vector<Table1Row>& t1) {
  cs.ambient.validate();
  const int d = cs.d(), m = cs.m;
  const Family f = cs.ambient.family;
  if (is_special_linear(f)) throw domain_error("balanced bounds cover GL, GU, Sp and SO");
  if (m < 2 || m > d - 2) throw domain_error("need 2 <= m <= d - 2");
  const bool lower = 3 * m >= d && 2 * m <= d;
  const bool upper = 2 * m >= d && 3 * m <= 2 * d;
  if (!lower && !upper) throw domain_error("balanced bound needs d/3 <= m <= 2d/3 (m = " + std::to_string(m) + ", d = " + std::to_string(d) + ")");
  BalancedBound b;
  b.upper_range = !lower;
  const bool linear = is_linear_type(f);
  if (f == Family::Sp && m % 2) throw domain_error("Sp needs even m");
  if (is_orthogonal(f) && m == 2) throw domain_error("first factor SO_2 is excluded");
  if (lower && is_orthogonal(f) && m < 3) throw domain_error("orthogonal balanced bound needs m >= 3");
  if (linear) b.floor = lower ? 0.078125 : 0.087683;
  else if (lower) b.floor = 0.039062;
  else b.floor = 0.043216;

  const int k = cs.k(), l = cs.l();
  const int small_limit = 399;
  if ((linear ? m : k) > small_limit) {
    const double total = table2(t1, !lower).total;
    if (linear) {
      b.computed = total / 2;
    } else {
      b.computed = total / 4;
      if (is_orthogonal(f)) b.computed -= 1.0 / 1600;
    }
    b.method = std::string(lower ? "interval sum" : "upper-range interval sum") + " over the published symmetric-group bounds";
  } else if (linear) {
    Rational s = 0;
    for (int j = 1; detail::pow2u(j) <= static_cast<std::uint64_t>(m); ++j)
      s += p_two_part(m, j) / 2 * s_not(d - m, detail::pow2u(j));
    b.computed = to_double(s);
    b.method = "sum over 2 <= 2^j <= m of p_m(2^j)/2 * s_not(d-m, 2^j)";
  } else if (f == Family::Sp) {
    Rational s = 0;
    for (int j = 1; detail::pow2u(j) <= static_cast<std::uint64_t>(k); ++j)
      s += p_two_part(k, j) / 4 * s_not(l - k, detail::pow2u(j));
    b.computed = to_double(s);
    b.method = "sum over 2 <= 2^j <= k of p_k(2^j)/4 * s_not(l-k, 2^j)";
  } else {
    const int x = l - k;
    const std::uint64_t k2 = two_part(static_cast<std::uint64_t>(k));
    Rational s = 0;
    for (int j = 1; detail::pow2u(j) <= static_cast<std::uint64_t>(k); ++j) {
      Rational term = p_two_part(k, j) / 4;
      if (k % 2 == 0 && detail::pow2u(j) == k2) term -= make_rational(1, 4L * k);
      s += term * s_not(x, detail::pow2u(j));
    }
    const long double ratio = x >= 1 ? (2.0L * x - 2) / (2.0L * x - 1) : 0.0L;
    const long double tail_coeff = k % 2 == 0 ? to_double(p_two_part(k, 0) / 4) : to_double((p_two_part(k, 0) - make_rational(1, k)) / 4);
    b.computed = static_cast<double>(to_double(s) + tail_coeff * detail::central_binomial_ratio(x) * ratio);
    b.method = "orthogonal sum with the 1/(4k) correction and central-binomial tail";
  }
  b.value = std::max(b.computed, b.floor);
  return b;
}

inline BalancedBound pm_balanced_bound(const CentralizerSpec& cs) { return pm_balanced_bound(cs, load_table1()); }

// ---------------------------------------------------------------- general formula tables

/// One displayed row: c8 s(8) + c4 s(4) + c2 s(2) + sqrt_coef * chi / sqrt(pi * x).
struct FormulaRow {
  std::string table;  // "GL", "Sp" or "SO"
  int lo = 0;         // m range for GL, k range otherwise
  int hi = 0;
  Rational c8, c4, c2;
  Rational sqrt_coef;
  bool chi = false;
  int sqrt_offset = 0;  // 0: x = l - k; otherwise x = l - sqrt_offset
  bool m3_only = false;
  std::string text;
};

inline const std::vector<FormulaRow>& formula_rows() {
  auto R = [](long a, long b) { return make_rational(a, b); };
  static const std::vector<FormulaRow> rows = {
      {"GL", 2, 3, 0, 0, R(1, 4), 0, false, 0, false, "s(2)/4"},
      {"GL", 4, 5, 0, R(1, 8), R(3, 16), 0, false, 0, false, "s(4)/8 + 3 s(2)/16"},
      {"GL", 6, 7, 0, R(1, 8), R(7, 32), 0, false, 0, false, "s(4)/8 + 7 s(2)/32"},
      {"GL", 8, 11, R(1, 16), R(7, 64), R(49, 256), 0, false, 0, false, "s(8)/16 + 7 s(4)/64 + 49 s(2)/256"},
      {"GL", 12, 15, R(1, 16), R(35, 256), R(385, 2048), 0, false, 0, false, "s(8)/16 + 35 s(4)/256 + 385 s(2)/2048"},
      {"Sp", 1, 1, 0, 0, 0, R(25, 116), false, 1, false, "25/(116 sqrt(pi (l-1)))"},
      {"Sp", 2, 3, 0, 0, R(1, 8), R(25, 232), false, 0, false, "s(2)/8 + 25/(232 sqrt(pi (l-k)))"},
      {"Sp", 4, 5, 0, R(1, 16), R(3, 32), R(75, 928), false, 0, false, "s(4)/16 + 3 s(2)/32 + 75/(928 sqrt(pi (l-k)))"},
      {"Sp", 6, 7, 0, R(1, 16), R(7, 64), R(125, 1856), false, 0, false, "s(4)/16 + 7 s(2)/64 + 125/(1856 sqrt(pi (l-k)))"},
      {"Sp", 8, 11, R(1, 32), R(7, 128), R(49, 512), R(1575, 29696), false, 0, false,
       "s(8)/32 + 7 s(4)/128 + 49 s(2)/512 + 1575/(29696 sqrt(pi (l-k)))"},
      {"Sp", 12, 16, R(1, 32), R(35, 512), R(385, 4096), R(10725, 237568), false, 0, false,
       "s(8)/32 + 35 s(4)/512 + 385 s(2)/4096 + 10725/(237568 sqrt(pi (l-k)))"},
      {"SO", 1, 1, 0, 0, 0, R(25, 116), false, 2, true, "25/(116 sqrt(pi (l-2))), m = 3"},
      {"SO", 2, 2, 0, 0, 0, R(25, 232), true, 0, false, "25 chi/(232 sqrt(pi (l-k)))"},
      {"SO", 3, 3, 0, 0, R(1, 8), R(25, 232), true, 0, false, "s(2)/8 + 25 chi/(232 sqrt(pi (l-k)))"},
      {"SO", 4, 4, 0, 0, R(3, 32), R(75, 928), true, 0, false, "3 s(2)/32 + 75 chi/(928 sqrt(pi (l-k)))"},
      {"SO", 5, 5, 0, R(1, 16), R(3, 32), R(75, 928), true, 0, false, "s(4)/16 + 3 s(2)/32 + 75 chi/(928 sqrt(pi (l-k)))"},
      {"SO", 6, 7, 0, R(1, 16), R(13, 192), R(125, 1856), true, 0, false, "s(4)/16 + 13 s(2)/192 + 125 chi/(1856 sqrt(pi (l-k)))"},
      {"SO", 8, 8, 0, R(7, 128), R(49, 512), R(1575, 29696), true, 0, false, "7 s(4)/128 + 49 s(2)/512 + 1575 chi/(29696 sqrt(pi (l-k)))"},
      {"SO", 9, 11, R(1, 32), R(7, 128), R(397, 5120), R(1575, 29696), true, 0, false,
       "s(8)/32 + 7 s(4)/128 + 397 s(2)/5120 + 1575 chi/(29696 sqrt(pi (l-k)))"},
      {"SO", 12, 16, R(1, 32), R(35, 512), R(385, 4096), R(10725, 237568), true, 0, false,
       "s(8)/32 + 35 s(4)/512 + 385 s(2)/4096 + 10725 chi/(237568 sqrt(pi (l-k)))"},
  };
  return rows;
}

/// Coefficients of the large-m linear combinations, for (8 p0, 4 p0, 2 p0, p0).
inline const std::vector<Rational>& large_linear_coefficients() {
  static const std::vector<Rational> c = {make_rational(15, 1000), make_rational(30, 1000), make_rational(76, 1000), make_rational(117, 1000)};
  return c;
}
inline const std::vector<Rational>& large_other_coefficients() {
  static const std::vector<Rational> c = {make_rational(2, 500), make_rational(7, 500), make_rational(19, 500), make_rational(29, 500)};
  return c;
}

struct GeneralBound {
  bool covered = false;
  double value = 0;
  Rational s_part;        // exact part from s_not terms
  double sqrt_part = 0;   // float part from the 1/sqrt(pi x) term
  std::string row;
  std::string note;       // reason when not covered
};

inline GeneralBound pm_general_bound(const CentralizerSpec& cs) {
  GeneralBound g;
  const Family f = cs.ambient.family;
  const int d = cs.d(), m = cs.m;
  auto not_covered = [&](std::string why) {
    g.covered = false;
    g.note = std::move(why);
    return g;
  };
  if (is_special_linear(f)) return not_covered("the formulas cover GL, GU, Sp and SO ambients");
  if (d < 4) return not_covered("needs d >= 4");
  if (m < 2 || m > d - 2) return not_covered("needs 2 <= m <= d - 2");
  if (is_orthogonal(f) && m == 2) return not_covered("first factor would be SO_2");
  if (f == Family::Sp && m % 2) return not_covered("Sp needs even m");

  if (is_linear_type(f)) {
    const int rest = d - m;
    if (m >= 16) {
      const std::uint64_t p0 = detail::pow2u(p0_exponent_for(static_cast<std::uint64_t>(m)));
      const auto& c = large_linear_coefficients();
      g.s_part = c[0] * s_not(rest, 8 * p0) + c[1] * s_not(rest, 4 * p0) + c[2] * s_not(rest, 2 * p0) + c[3] * s_not(rest, p0);
      g.row = "(15 s(8p0) + 30 s(4p0) + 76 s(2p0) + 117 s(p0))/1000, p0 = " + std::to_string(p0);
    } else {
      const auto& rows = formula_rows();
      auto it = std::find_if(rows.begin(), rows.end(), [&](const FormulaRow& r) { return r.table == "GL" && r.lo <= m && m <= r.hi; });
      g.s_part = it->c8 * s_not(rest, 8) + it->c4 * s_not(rest, 4) + it->c2 * s_not(rest, 2);
      g.row = it->text;
    }
    g.covered = true;
    g.value = to_double(g.s_part);
    return g;
  }

  const int k = cs.k(), l = cs.l(), rest = l - k;
  if (k >= 17) {
    const std::uint64_t p0 = detail::pow2u(p0_exponent_for(static_cast<std::uint64_t>(k)));
    const auto& c = large_other_coefficients();
    g.s_part = c[0] * s_not(rest, 8 * p0) + c[1] * s_not(rest, 4 * p0) + c[2] * s_not(rest, 2 * p0) + c[3] * s_not(rest, p0);
    g.row = "(2 s(8p0) + 7 s(4p0) + 19 s(2p0) + 29 s(p0))/500, p0 = " + std::to_string(p0);
    g.covered = true;
    g.value = to_double(g.s_part);
    return g;
  }
  const std::string table = f == Family::Sp ? "Sp" : "SO";
  const auto& rows = formula_rows();
  auto it = std::find_if(rows.begin(), rows.end(), [&](const FormulaRow& r) { return r.table == table && r.lo <= k && k <= r.hi; });
  if (it == rows.end()) return not_covered("no row for k = " + std::to_string(k));
  if (it->m3_only && m != 3) return not_covered("the k = 1 orthogonal row needs m = 3");
  const int x = it->sqrt_offset ? l - it->sqrt_offset : rest;
  if (it->sqrt_coef != 0 && x < 1) return not_covered("the 1/sqrt(pi x) term needs x >= 1");
  g.s_part = it->c8 * s_not(rest, 8) + it->c4 * s_not(rest, 4) + it->c2 * s_not(rest, 2);
  if (it->sqrt_coef != 0) {
    double chi = 1;
    if (it->chi && (d - m) % 2 == 0) chi = (2.0 * rest - 2) / (2.0 * rest - 1);
    g.sqrt_part = to_double(it->sqrt_coef) * chi / std::sqrt(std::numbers::pi * x);
  }
  g.row = it->text;
  g.covered = true;
  g.value = to_double(g.s_part) + g.sqrt_part;
  return g;
}

// ---------------------------------------------------------------- corollary

struct CorollaryTerm {
  std::string row;
  double k_case = 0;
};

struct CorollaryBound {
  int d = 0;
  double K = 0;
  double value = 0;  // K / sqrt(d)
  std::vector<CorollaryTerm> trace;
  std::string binding_row;
};

/// Floor for s_not(n, 2^a), a >= 1: s_not(n, 2) >= 1/sqrt(2 pi n) for n >= 1.
inline const double kSNotFloor = 1.0 / std::sqrt(2.0 * std::numbers::pi);

/// K / sqrt(d). Every s_not(., 2^a) term is floored by kSNotFloor / sqrt(d) and every
/// chi / sqrt(pi x) term by chi_min / sqrt(pi d) with chi_min = 2/3, so each row gives
/// K_row / sqrt(d); K is the smallest K_row.
inline CorollaryBound corollary_bound(int d) {
  if (d < 4) throw domain_error("corollary bound needs d >= 4");
  CorollaryBound out;
  out.d = d;
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  auto add = [&](const std::string& row, const Rational& s_sum, const Rational& sqrt_coef, bool chi) {
    const double chi_min = chi ? 2.0 / 3.0 : 1.0;
    const double kc = to_double(s_sum) * kSNotFloor + to_double(sqrt_coef) * chi_min * inv_sqrt_pi;
    out.trace.push_back({row, kc});
  };
  for (const auto& r : formula_rows()) add(r.table + " " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + ": " + r.text, r.c8 + r.c4 + r.c2, r.sqrt_coef, r.chi);
  Rational lin = 0, oth = 0;
  for (auto& c : large_linear_coefficients()) lin += c;
  for (auto& c : large_other_coefficients()) oth += c;
  add("GL m >= 16: (15, 30, 76, 117)/1000", lin, 0, false);
  add("Sp/SO k >= 17: (2, 7, 19, 29)/500", oth, 0, false);
  auto best = std::min_element(out.trace.begin(), out.trace.end(), [](const CorollaryTerm& a, const CorollaryTerm& b) { return a.k_case < b.k_case; });
  out.K = best->k_case;
  out.binding_row = best->row;
  out.value = out.K / std::sqrt(static_cast<double>(d));
  return out;
}

}  // namespace quokka
