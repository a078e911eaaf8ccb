#pragma once

// Brute-force censuses of small matrix groups: closure from generators, 2-part
// orders of every element, and the exact P(|x|_2 > |y|_2) for direct products.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/finite_field.hpp"
#include "quokka/matrix.hpp"
#include "quokka/rational.hpp"

namespace quokka {

struct MatrixGroupInput {
  std::uint32_t p = 3;
  std::vector<std::uint32_t> poly;  // empty for a prime field
  int dim = 1;
  std::vector<Matrix> generators;
  std::optional<std::uint64_t> declared_order;
  std::string label;

  FiniteField field() const { return poly.empty() ? FiniteField(p) : FiniteField(p, poly); }
};

struct CensusTable {
  BigInt total = 0;
  std::map<std::uint64_t, BigInt> by_two_part;

  Rational proportion(std::uint64_t two_part_order) const {
    auto it = by_two_part.find(two_part_order);
    return it == by_two_part.end() ? Rational(0) : make_rational(it->second, total);
  }
};

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

namespace detail {

inline void validate_generators(const MatrixGroupInput& in, const FiniteField& F) {
  if (in.dim < 1) throw domain_error("matrix dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(in.dim * in.dim);
  for (std::size_t g = 0; g < in.generators.size(); ++g) {
    const auto& m = in.generators[g];
    if (m.size() != n) throw domain_error("generator " + std::to_string(g + 1) + " has " + std::to_string(m.size()) + " entries, expected " + std::to_string(n));
    for (auto e : m)
      if (e >= F.q()) throw domain_error("generator " + std::to_string(g + 1) + " has an entry outside the field");
    if (mat_det(F, m, in.dim) == 0) throw domain_error("generator " + std::to_string(g + 1) + " is not invertible");
  }
}

}  // namespace detail

/// Closure of the generators under multiplication, by breadth-first search.
/// The result is sorted by canonical key, so it does not depend on generator order.
inline std::vector<Matrix> enumerate(const MatrixGroupInput& in, std::size_t cap = kDefaultElementCap) {
  const FiniteField F = in.field();
  detail::validate_generators(in, F);
  const int dim = in.dim;
  std::unordered_set<std::string> seen;
  std::vector<Matrix> elems;
  std::deque<std::size_t> frontier;
  const Matrix id = identity_matrix(dim);
  seen.insert(matrix_key(id));
  elems.push_back(id);
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : in.generators) {
      Matrix h = mat_mul(F, elems[i], g, dim);
      if (seen.insert(matrix_key(h)).second) {
        if (elems.size() >= cap) throw overflow_error("group enumeration exceeded the element cap of " + std::to_string(cap));
        elems.push_back(std::move(h));
        frontier.push_back(elems.size() - 1);
      }
    }
  }
  if (in.declared_order && *in.declared_order != elems.size())
    throw consistency_error("enumerated " + std::to_string(elems.size()) + " elements but the declared order is " + std::to_string(*in.declared_order));
  std::sort(elems.begin(), elems.end(), [](const Matrix& a, const Matrix& b) { return matrix_key(a) < matrix_key(b); });
  return elems;
}

inline Matrix mat_pow(const FiniteField& F, Matrix base, std::uint64_t e, int dim) {
  Matrix r = identity_matrix(dim);
  while (e) {
    if (e & 1) r = mat_mul(F, r, base, dim);
    e >>= 1;
    if (e) base = mat_mul(F, base, base, dim);
  }
  return r;
}

/// 2-part of the order of g, given any multiple of that order (e.g. |G|).
inline std::uint64_t two_part_order(const FiniteField& F, const Matrix& g, std::uint64_t group_order, int dim) {
  if (group_order == 0) throw domain_error("group order must be positive");
  std::uint64_t u = group_order;
  unsigned s = 0;
  while (u % 2 == 0) {
    u /= 2;
    ++s;
  }
  Matrix h = mat_pow(F, g, u, dim);
  const Matrix id = identity_matrix(dim);
  unsigned r = 0;
  while (h != id) {
    if (r > s) throw consistency_error("element 2-part order exceeds the 2-part of the group order");
    h = mat_mul(F, h, h, dim);
    ++r;
  }
  return std::uint64_t{1} << r;
}

/// Order of g by repeated multiplication (slow; cross-check only).
inline std::uint64_t naive_order(const FiniteField& F, const Matrix& g, int dim, std::uint64_t limit = 10'000'000) {
  const Matrix id = identity_matrix(dim);
  Matrix h = g;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (h == id) return k;
    h = mat_mul(F, h, g, dim);
  }
  throw overflow_error("element order exceeds the iteration limit");
}

inline CensusTable census_of(const FiniteField& F, const std::vector<Matrix>& elems, int dim) {
  CensusTable t;
  t.total = static_cast<unsigned long>(elems.size());
  for (const auto& g : elems) t.by_two_part[two_part_order(F, g, elems.size(), dim)] += 1;
  return t;
}

inline CensusTable census(const MatrixGroupInput& in, std::size_t cap = kDefaultElementCap) {
  const auto elems = enumerate(in, cap);
  return census_of(in.field(), elems, in.dim);
}

/// P(|x|_2 > |y|_2) for x, y independent and uniform.
inline Rational pm_exact(const CensusTable& cx, const CensusTable& cy) {
  if (cx.total == 0 || cy.total == 0) throw domain_error("empty census");
  BigInt hits = 0;
  for (const auto& [ox, nx] : cx.by_two_part)
    for (const auto& [oy, ny] : cy.by_two_part)
      if (ox > oy) hits += nx * ny;
  return make_rational(hits, BigInt(cx.total * cy.total));
}

/// P(|x|_2 = |y|_2).
inline Rational tie_probability(const CensusTable& cx, const CensusTable& cy) {
  BigInt hits = 0;
  for (const auto& [o, nx] : cx.by_two_part) {
    auto it = cy.by_two_part.find(o);
    if (it != cy.by_two_part.end()) hits += nx * it->second;
  }
  return make_rational(hits, BigInt(cx.total * cy.total));
}

// ---------------------------------------------------------------- builtin groups

inline std::uint64_t gl_order(int n, std::uint64_t q) {
  std::uint64_t qn = 1, o = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    o *= qn - qi;
    qi *= q;
  }
  return o;
}

inline std::uint64_t sl_order(int n, std::uint64_t q) { return gl_order(n, q) / (q - 1); }

inline std::uint64_t sp_order(int dim, std::uint64_t q) {
  const int m = dim / 2;
  std::uint64_t o = 1;
  for (int i = 0; i < m * m; ++i) o *= q;
  std::uint64_t q2i = 1;
  for (int i = 1; i <= m; ++i) {
    q2i *= q * q;
    o *= q2i - 1;
  }
  return o;
}

/// Standard generating sets for GL_n(p), SL_n(p) and Sp_dim(p) over a prime field.
inline MatrixGroupInput builtin_generators(const std::string& family, int dim, std::uint32_t p) {
  std::string fam = family;
  std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (fam != "gl" && fam != "sl" && fam != "sp")
    throw unsupported_error("no builtin generators for family '" + family + "'; supply a group file instead");
  if (!is_prime(p) || p == 2) throw domain_error("builtin groups need an odd prime p");
  if (dim < 1 || dim > 8) throw domain_error("builtin dimension must be between 1 and 8");
  const FiniteField F(p);
  MatrixGroupInput in;
  in.p = p;
  in.dim = dim;
  auto at = [dim](Matrix& m, int r, int c) -> FiniteField::Elem& { return m[static_cast<std::size_t>(r * dim + c)]; };
  const auto minus_one = F.neg(1);

  if (fam == "sp") {
    if (dim % 2) throw domain_error("Sp needs even dimension");
    const int m = dim / 2;
    Matrix J(static_cast<std::size_t>(dim * dim), 0);
    for (int i = 0; i < m; ++i) {
      at(J, i, m + i) = 1;
      at(J, m + i, i) = minus_one;
    }
    // symplectic transvection x -> x + (x^T J v) v, as the matrix I + v v^T J^T
    auto transvection = [&](const std::vector<FiniteField::Elem>& v) {
      Matrix T = identity_matrix(dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          FiniteField::Elem s = 0;
          for (int k = 0; k < dim; ++k) s = F.add(s, F.mul(v[static_cast<std::size_t>(k)], at(J, c, k)));
          at(T, r, c) = F.add(at(T, r, c), F.mul(v[static_cast<std::size_t>(r)], s));
        }
      return T;
    };
    for (int i = 0; i < dim; ++i) {
      std::vector<FiniteField::Elem> v(static_cast<std::size_t>(dim), 0);
      v[static_cast<std::size_t>(i)] = 1;
      in.generators.push_back(transvection(v));
    }
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        std::vector<FiniteField::Elem> v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = 1;
        in.generators.push_back(transvection(v));
      }
    in.generators.push_back(J);
    for (const auto& g : in.generators)
      if (mat_mul(F, mat_mul(F, mat_transpose(g, dim), J, dim), g, dim) != J) throw consistency_error("builtin Sp generator does not preserve the form");
    in.declared_order = sp_order(dim, p);
    in.label = "Sp_" + std::to_string(dim) + "(" + std::to_string(p) + ")";
    return in;
  }

  if (dim == 1) {
    if (fam == "sl") throw domain_error("SL_1 is trivial; use dim >= 2");
    Matrix w = {F.primitive()};
    in.generators.push_back(w);
  } else if (fam == "gl" && dim == 2) {
    in.generators.push_back(Matrix{F.primitive(), 0, 0, 1});
    in.generators.push_back(Matrix{minus_one, 1, minus_one, 0});
  } else {
    // I + E_12 and the signed n-cycle (det 1); GL adds diag(w, 1, ..., 1)
    Matrix x = identity_matrix(dim);
    at(x, 0, 1) = 1;
    Matrix c(static_cast<std::size_t>(dim * dim), 0);
    for (int i = 0; i < dim; ++i) at(c, (i + 1) % dim, i) = 1;
    if (dim % 2 == 0) at(c, 0, dim - 1) = minus_one;
    in.generators.push_back(x);
    in.generators.push_back(c);
    if (fam == "gl") {
      Matrix d = identity_matrix(dim);
      at(d, 0, 0) = F.primitive();
      in.generators.push_back(d);
    }
  }
  in.declared_order = fam == "gl" ? gl_order(dim, p) : sl_order(dim, p);
  in.label = (fam == "gl" ? "GL_" : "SL_") + std::to_string(dim) + "(" + std::to_string(p) + ")";
  return in;
}

// ---------------------------------------------------------------- file input

/// Parse the line-oriented group format: header "p dim [order]", an optional
/// "poly c0 ... ck" line, then one generator per line as dim^2 integers row-major.
/// Blank lines and '#' comments are ignored.
inline MatrixGroupInput parse_group(std::istream& is, const std::string& label = "input") {
  MatrixGroupInput in;
  in.label = label;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  auto fail = [&](const std::string& why) -> void { throw domain_error("line " + std::to_string(lineno) + ": " + why); };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    auto num = [&](const std::string& s) -> long long {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        fail("'" + s + "' is not an integer");
      }
      if (used != s.size()) fail("'" + s + "' is not an integer");
      return v;
    };
    if (!have_header) {
      if (tok.size() < 2 || tok.size() > 3) fail("header must be 'p dim [order]'");
      const long long p = num(tok[0]), dim = num(tok[1]);
      if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) fail("p must be an odd prime");
      if (dim < 1 || dim > 16) fail("dim must be between 1 and 16");
      in.p = static_cast<std::uint32_t>(p);
      in.dim = static_cast<int>(dim);
      if (tok.size() == 3) {
        const long long o = num(tok[2]);
        if (o < 1) fail("declared order must be positive");
        in.declared_order = static_cast<std::uint64_t>(o);
      }
      have_header = true;
      continue;
    }
    if (tok[0] == "poly") {
      if (!in.generators.empty() || !in.poly.empty()) fail("poly line must come once, before the generators");
      if (tok.size() < 3) fail("poly needs at least two coefficients");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const long long c = num(tok[i]);
        if (c < 0 || c >= static_cast<long long>(in.p)) fail("poly coefficient out of range");
        in.poly.push_back(static_cast<std::uint32_t>(c));
      }
      try {
        (void)in.field();
      } catch (const domain_error& e) {
        fail(e.what());
      }
      continue;
    }
    const std::size_t need = static_cast<std::size_t>(in.dim * in.dim);
    if (tok.size() != need) fail("generator needs " + std::to_string(need) + " entries, got " + std::to_string(tok.size()));
    std::uint64_t q = in.p;
    if (!in.poly.empty())
      for (std::size_t i = 2; i < in.poly.size(); ++i) q *= in.p;
    Matrix m;
    for (auto& t : tok) {
      const long long v = num(t);
      if (v < 0 || static_cast<std::uint64_t>(v) >= q) fail("entry " + t + " outside 0.." + std::to_string(q - 1));
      m.push_back(static_cast<FiniteField::Elem>(v));
    }
    if (mat_det(in.field(), m, in.dim) == 0) fail("generator is not invertible");
    in.generators.push_back(std::move(m));
  }
  if (!have_header) throw domain_error("line " + std::to_string(lineno) + ": missing header 'p dim [order]'");
  if (in.generators.empty()) throw domain_error("line " + std::to_string(lineno) + ": no generators given");
  return in;
}

inline MatrixGroupInput load_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw domain_error("cannot open group file " + path);
  return parse_group(f, path);
}

// ---------------------------------------------------------------- sampling

struct SampleResult {
  CensusTable table;  // APPROXIMATE: random words are not uniform in the group
  std::uint64_t walk_length = 0;
  std::uint64_t seed = 0;
  static constexpr const char* kLabel = "APPROXIMATE";
};

/// Products of walk_length generators or inverses chosen uniformly.
inline SampleResult random_word_sample(const MatrixGroupInput& in, std::uint64_t walk_length, std::uint64_t count, std::uint64_t seed) {
  const FiniteField F = in.field();
  detail::validate_generators(in, F);
  if (in.generators.empty()) throw domain_error("no generators");
  std::vector<Matrix> steps = in.generators;
  for (const auto& g : in.generators) steps.push_back(mat_inverse(F, g, in.dim));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
  SampleResult res;
  res.walk_length = walk_length;
  res.seed = seed;
  res.table.total = static_cast<unsigned long>(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    Matrix w = identity_matrix(in.dim);
    for (std::uint64_t i = 0; i < walk_length; ++i) w = mat_mul(F, w, steps[pick(rng)], in.dim);
    const std::uint64_t tp = in.declared_order ? two_part_order(F, w, *in.declared_order, in.dim) : two_part(naive_order(F, w, in.dim));
    res.table.by_two_part[tp] += 1;
  }
  return res;
}

}  // namespace quokka
