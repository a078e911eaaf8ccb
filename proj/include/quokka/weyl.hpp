#pragma once

// F-classes of the Weyl group of each classical family, their weights, the
// matching maximal tori and the 2-part exponent of those tori.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/group_spec.hpp"
#include "quokka/rational.hpp"
#include "quokka/symmetric.hpp"
#include "quokka/torus.hpp"

namespace quokka {

inline std::uint64_t t_of_q(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw domain_error("t(q) needs an odd q >= 3, got " + std::to_string(q));
  return q % 4 == 1 ? two_part(q - 1) : two_part(q + 1);
}

/// 2-part of q^i + sign (sign = +1 or -1), from the closed form; small inputs are
/// cross-checked against the direct valuation.
inline std::uint64_t two_part_qpm(std::uint64_t q, int i, int sign) {
  if (q % 2 == 0) throw domain_error("two_part_qpm needs odd q");
  if (i < 1) throw domain_error("two_part_qpm needs i >= 1");
  if (sign != 1 && sign != -1) throw domain_error("sign must be +1 or -1");
  std::uint64_t closed;
  if (sign == 1) {
    closed = (i % 2 == 0) ? 2 : two_part(q + 1);
  } else if (i % 2 == 1) {
    closed = two_part(q - 1);
  } else {
    const std::uint64_t i2 = two_part(static_cast<std::uint64_t>(i));
    closed = i2 * (q % 4 == 1 ? two_part(q - 1) : two_part(q + 1));
  }
  if (i <= 64) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
    v += sign;
    if ((std::uint64_t{1} << valuation2(v)) != closed)
      throw consistency_error("2-part of q^i +/- 1 disagrees with its closed form");
  }
  return closed;
}

/// Cycle type of an F-class. Linear and unitary families use pos_parts only.
struct SignedPartition {
  std::vector<int> pos_parts;  // non-increasing
  std::vector<int> neg_parts;  // non-increasing

  int size() const {
    int s = 0;
    for (int a : pos_parts) s += a;
    for (int a : neg_parts) s += a;
    return s;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    auto put = [&](int a, char sg) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(a);
      if (sg) s += sg;
    };
    const bool signed_type = !neg_parts.empty();
    for (int a : pos_parts) put(a, signed_type ? '+' : 0);
    for (int a : neg_parts) put(a, '-');
    return s + "}";
  }

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

struct FClass {
  SignedPartition cls;
  Rational weight;
};

namespace detail {

// 1/prod((2a)^m m!) over the multiplicities of one sign.
inline Rational hyperoctahedral_half_weight(const std::vector<int>& parts) {
  BigInt den = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned long m = j - i;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2UL * static_cast<unsigned long>(parts[i]), m);
    den *= pw * factorial(m);
    i = j;
  }
  return make_rational(BigInt(1), den);
}

struct WeightedParts {
  std::vector<int> parts;
  Rational weight;
};

inline std::vector<WeightedParts> signed_half_list(int n) {
  if (n == 0) return {WeightedParts{{}, Rational(1)}};
  std::vector<WeightedParts> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back({p.parts, hyperoctahedral_half_weight(p.parts)}); });
  return out;
}

}  // namespace detail

/// Visit every F-class of spec's Weyl group with its exact weight, in a fixed order:
/// for signed types the positive total runs from rank down to 0, and within each
/// split both halves go in reverse-lexicographic order.
inline void for_each_fclass(const GroupSpec& spec, const std::function<void(const FClass&)>& visit) {
  spec.validate();
  if (is_linear_type(spec.family)) {
    for_each_partition(spec.rank, [&](const Partition& p) { visit(FClass{SignedPartition{p.parts, {}}, class_proportion(p)}); });
    return;
  }
  const int l = spec.rank;
  std::vector<std::vector<detail::WeightedParts>> cache(static_cast<std::size_t>(l) + 1);
  auto halves = [&](int n) -> const std::vector<detail::WeightedParts>& {
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (slot.empty()) slot = detail::signed_half_list(n);
    return slot;
  };
  const bool even_type = is_even_orthogonal(spec.family);
  const int parity = spec.family == Family::SO_minus ? 1 : 0;
  FClass fc;
  for (int a = l; a >= 0; --a) {
    const auto& pos = halves(a);
    const auto& neg = halves(l - a);
    for (const auto& pp : pos)
      for (const auto& np : neg) {
        if (even_type && static_cast<int>(np.parts.size() % 2) != parity) continue;
        fc.cls.pos_parts = pp.parts;
        fc.cls.neg_parts = np.parts;
        fc.weight = pp.weight * np.weight;
        if (even_type) fc.weight *= 2;
        visit(fc);
      }
  }
}

inline std::vector<FClass> fclass_enum(const GroupSpec& spec) {
  std::vector<FClass> out;
  for_each_fclass(spec, [&](const FClass& f) { out.push_back(f); });
  return out;
}

/// Maximal torus of the F-class.
inline TorusShape torus_shape(const GroupSpec& spec, const SignedPartition& cls) {
  if (cls.size() != spec.rank) throw domain_error("class " + cls.str() + " does not partition the rank");
  TorusShape shape;
  if (is_linear_type(spec.family)) {
    if (!cls.neg_parts.empty()) throw domain_error("linear and unitary classes carry no negative cycles");
    const bool unitary = is_unitary(spec.family);
    for (int a : cls.pos_parts) shape.factors.push_back(make_factor(spec.q, a, unitary && a % 2 == 1 ? -1 : 1));
    if (is_special_linear(spec.family)) shape.det_modulus = unitary ? spec.q + 1 : spec.q - 1;
  } else {
    if (is_even_orthogonal(spec.family)) {
      const std::size_t parity = spec.family == Family::SO_minus ? 1 : 0;
      if (cls.neg_parts.size() % 2 != parity) throw domain_error("negative-cycle parity does not match " + family_name(spec.family));
    }
    for (int b : cls.pos_parts) shape.factors.push_back(make_factor(spec.q, b, 1));
    for (int b : cls.neg_parts) shape.factors.push_back(make_factor(spec.q, b, -1));
  }
  finalize_shape(shape);
  return shape;
}

/// Closed-form 2-part exponent of the torus of cls, without building the torus.
inline std::uint64_t closed_form_two_exp(const GroupSpec& spec, const SignedPartition& cls) {
  const std::uint64_t q = spec.q, t = t_of_q(q);
  if (is_linear_type(spec.family)) {
    const bool unitary = is_unitary(spec.family);
    const std::uint64_t base = two_part(unitary ? q + 1 : q - 1);
    if (is_special_linear(spec.family) && cls.pos_parts.size() == 1) {
      const int n = cls.pos_parts.front();
      if (n % 2 == 1) return 1;
      return two_part(static_cast<std::uint64_t>(n)) * t / base;
    }
    std::uint64_t w2 = 1;
    for (int a : cls.pos_parts) w2 = std::max(w2, two_part(static_cast<std::uint64_t>(a)));
    return w2 >= 2 ? w2 * t : base;
  }
  if (q % 4 == 1) {
    if (cls.pos_parts.empty()) return 2;
    std::uint64_t m = 1;
    for (int b : cls.pos_parts) m = std::max(m, two_part(static_cast<std::uint64_t>(b)));
    return two_part(q - 1) * m;
  }
  std::uint64_t m = 0;
  for (int b : cls.pos_parts)
    if (b % 2 == 0) m = std::max(m, two_part(static_cast<std::uint64_t>(b)));
  if (m > 0) return two_part(q + 1) * m;
  const bool odd_negative = std::any_of(cls.neg_parts.begin(), cls.neg_parts.end(), [](int b) { return b % 2 == 1; });
  return odd_negative ? two_part(q + 1) : 2;
}

/// Direct 2-part exponent of the torus shape.
inline std::uint64_t torus_two_exp(const TorusShape& shape) { return shape.two_exp; }

/// Direct exponent of the class's torus, checked against the closed form.
inline std::uint64_t torus_two_exp(const GroupSpec& spec, const SignedPartition& cls) {
  const std::uint64_t direct = torus_shape(spec, cls).two_exp;
  const std::uint64_t closed = closed_form_two_exp(spec, cls);
  if (direct != closed)
    throw consistency_error(spec.name() + " class " + cls.str() + ": direct exponent " + std::to_string(direct) +
                            " but closed form gives " + std::to_string(closed));
  return direct;
}

/// Total Weyl weight per torus 2-part exponent.
inline std::map<std::uint64_t, Rational> weight_by_exponent(const GroupSpec& spec) {
  std::map<std::uint64_t, Rational> out;
  for_each_fclass(spec, [&](const FClass& f) { out[torus_two_exp(spec, f.cls)] += f.weight; });
  return out;
}

struct Table4Row {
  std::string group;
  std::string exponent;  // "4t", "2t", "t" or "2"
  Rational proportion;
};

namespace detail {

struct Table4Group {
  std::string label;
  Family family;
  int rank;
  std::vector<std::uint64_t> multipliers;  // exponent = multiplier * t, 0 meaning exponent 2
};

inline const std::vector<Table4Group>& table4_groups() {
  static const std::vector<Table4Group> groups = {
      {"SO3", Family::SO_odd, 1, {1, 0}},          {"SO4+", Family::SO_plus, 2, {2, 1, 0}},
      {"SO4-", Family::SO_minus, 2, {2, 1, 0}},    {"SO5", Family::SO_odd, 2, {2, 1, 0}},
      {"SO6+", Family::SO_plus, 3, {2, 1, 0}},     {"SO6-", Family::SO_minus, 3, {2, 1, 0}},
      {"SO7", Family::SO_odd, 3, {2, 1, 0}},       {"SO8+", Family::SO_plus, 4, {4, 2, 1, 0}},
      {"SO8-", Family::SO_minus, 4, {4, 2, 1, 0}},
  };
  return groups;
}

inline std::string multiplier_label(std::uint64_t m) {
  if (m == 0) return "2";
  if (m == 1) return "t";
  return std::to_string(m) + "t";
}

}  // namespace detail

/// Weyl proportions per torus exponent for the small orthogonal groups. q defaults
/// to 5 (q = 1 mod 4) or 3 (q = 3 mod 4); any odd prime power in the class works.
inline std::vector<Table4Row> table4(int qmod4, std::uint64_t q = 0) {
  if (qmod4 != 1 && qmod4 != 3) throw domain_error("table4 needs q mod 4 in {1, 3}");
  if (q == 0) q = qmod4 == 1 ? 5 : 3;
  if (q % 4 != static_cast<std::uint64_t>(qmod4)) throw domain_error("q does not match the requested residue mod 4");
  const std::uint64_t t = t_of_q(q);
  std::vector<Table4Row> rows;
  for (const auto& g : detail::table4_groups()) {
    const auto weights = weight_by_exponent(make_spec(g.family, g.rank, q));
    for (std::uint64_t m : g.multipliers) {
      const std::uint64_t e = m == 0 ? 2 : m * t;
      auto it = weights.find(e);
      rows.push_back({g.label, detail::multiplier_label(m), it == weights.end() ? Rational(0) : it->second});
    }
  }
  return rows;
}

struct Table4CombinedRow {
  std::string group;
  std::string exponent;
  Rational q1;
  Rational q3;
  Rational lower_bound;  // half the smaller proportion
};

inline std::vector<Table4CombinedRow> table4_combined() {
  const auto a = table4(1), b = table4(3);
  std::vector<Table4CombinedRow> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back({a[i].group, a[i].exponent, a[i].proportion, b[i].proportion,
                   Rational(std::min(a[i].proportion, b[i].proportion) / 2)});
  return out;
}

}  // namespace quokka
