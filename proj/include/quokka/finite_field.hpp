#pragma once

// Finite fields F_p and F_{p^k} (q <= 1024). Elements are integers 0..q-1 whose
// base-p digits are polynomial coefficients, lowest degree first.

#include <cstdint>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/rational.hpp"

namespace quokka {

class FiniteField {
 public:
  using Elem = std::uint16_t;

  /// Prime field F_p.
  explicit FiniteField(std::uint32_t p) : FiniteField(p, {0, 1}) {}

  /// F_p[x] / (poly), poly given as c0..ck with ck != 0. A degree-1 poly gives F_p.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> poly) : p_(p) {
    if (!is_prime(p)) throw domain_error("field characteristic must be prime, got " + std::to_string(p));
    if (poly.size() < 2) throw domain_error("field polynomial needs degree >= 1");
    for (auto& c : poly) {
      if (c >= p) throw domain_error("polynomial coefficient out of range mod p");
    }
    if (poly.back() == 0) throw domain_error("leading polynomial coefficient must be nonzero");
    degree_ = static_cast<unsigned>(poly.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < degree_; ++i) q *= p;
    if (q > 1024) throw domain_error("field size " + std::to_string(q) + " exceeds 1024");
    q_ = static_cast<std::uint32_t>(q);
    // monic normalisation
    const std::uint32_t lead_inv = inv_mod(poly.back());
    for (auto& c : poly) c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * lead_inv) % p);
    poly_ = poly;
    build_tables();
    if (degree_ > 1) check_no_zero_divisors();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  unsigned degree() const { return degree_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const {
    if (a == 0) throw domain_error("zero has no inverse");
    return inv_[a];
  }

  /// Integer n reduced into the prime subfield.
  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  /// A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

  std::uint32_t inv_mod(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
      d[i] = a % p_;
      a = static_cast<Elem>(a / p_);
    }
    return d;
  }

  Elem pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0;
    for (unsigned i = degree_; i-- > 0;) v = v * p_ + d[i];
    return static_cast<Elem>(v);
  }

  void build_tables() {
    const std::size_t n = static_cast<std::size_t>(q_) * q_;
    add_.assign(n, 0);
    mul_.assign(n, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    std::vector<std::vector<std::uint32_t>> dig(q_);
    for (std::uint32_t a = 0; a < q_; ++a) dig[a] = digits(static_cast<Elem>(a));
    for (std::uint32_t a = 0; a < q_; ++a) {
      std::vector<std::uint32_t> nd(degree_);
      for (unsigned i = 0; i < degree_; ++i) nd[i] = (p_ - dig[a][i]) % p_;
      neg_[a] = pack(nd);
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::vector<std::uint32_t> s(degree_);
        for (unsigned i = 0; i < degree_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
        add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = pack(s);
        // schoolbook product then reduction by the monic modulus
        std::vector<std::uint64_t> prod(2 * degree_, 0);
        for (unsigned i = 0; i < degree_; ++i)
          for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(dig[a][i]) * dig[b][j]) % p_;
        for (unsigned top = 2 * degree_ - 1; top >= degree_ && top < 2 * degree_; --top) {
          const std::uint64_t c = prod[top];
          if (c == 0) continue;
          for (unsigned i = 0; i <= degree_; ++i) {
            const std::uint64_t sub = c * poly_[i] % p_;
            prod[top - degree_ + i] = (prod[top - degree_ + i] + p_ - sub) % p_;
          }
        }
        std::vector<std::uint32_t> r(degree_);
        for (unsigned i = 0; i < degree_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = pack(r);
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) {
          inv_[a] = static_cast<Elem>(b);
          break;
        }
    for (std::uint32_t g = 1; g < q_ && primitive_ == 0; ++g) {
      Elem x = 1;
      std::uint32_t ord = 0;
      do {
        x = mul(x, static_cast<Elem>(g));
        ++ord;
      } while (x != 1 && ord < q_);
      if (ord == q_ - 1) primitive_ = static_cast<Elem>(g);
    }
  }

  void check_no_zero_divisors() const {
    for (std::uint32_t a = 1; a < q_; ++a)
      if (inv_[a] == 0) throw domain_error("field polynomial is reducible over F_" + std::to_string(p_));
  }

  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  unsigned degree_ = 1;
  std::vector<std::uint32_t> poly_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 0;
};

}  // namespace quokka
