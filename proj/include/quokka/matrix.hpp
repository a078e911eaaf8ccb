#pragma once

// Dense square matrices over a FiniteField, stored row-major.

#include <cstdint>
#include <string>
#include <vector>

#include "quokka/errors.hpp"
#include "quokka/finite_field.hpp"

namespace quokka {

using Matrix = std::vector<FiniteField::Elem>;

inline Matrix identity_matrix(int dim) {
  Matrix m(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i * dim + i)] = 1;
  return m;
}

inline Matrix mat_mul(const FiniteField& F, const Matrix& a, const Matrix& b, int dim) {
  Matrix c(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const auto aik = a[static_cast<std::size_t>(i * dim + k)];
      if (aik == 0) continue;
      for (int j = 0; j < dim; ++j) {
        auto& cij = c[static_cast<std::size_t>(i * dim + j)];
        cij = F.add(cij, F.mul(aik, b[static_cast<std::size_t>(k * dim + j)]));
      }
    }
  return c;
}

inline Matrix mat_transpose(const Matrix& a, int dim) {
  Matrix t(a.size());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t[static_cast<std::size_t>(j * dim + i)] = a[static_cast<std::size_t>(i * dim + j)];
  return t;
}

/// Byte string identifying the matrix; equal keys iff equal entries.
inline std::string matrix_key(const Matrix& m) {
  std::string key(m.size() * 2, '\0');
  for (std::size_t i = 0; i < m.size(); ++i) {
    key[2 * i] = static_cast<char>(m[i] & 0xff);
    key[2 * i + 1] = static_cast<char>(m[i] >> 8);
  }
  return key;
}

/// Inverse by Gauss-Jordan elimination; throws domain_error when singular.
inline Matrix mat_inverse(const FiniteField& F, const Matrix& a, int dim) {
  Matrix m = a, inv = identity_matrix(dim);
  auto at = [dim](Matrix& x, int r, int c) -> FiniteField::Elem& { return x[static_cast<std::size_t>(r * dim + c)]; };
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    while (piv < dim && at(m, piv, col) == 0) ++piv;
    if (piv == dim) throw domain_error("matrix is not invertible");
    if (piv != col)
      for (int j = 0; j < dim; ++j) {
        std::swap(at(m, piv, j), at(m, col, j));
        std::swap(at(inv, piv, j), at(inv, col, j));
      }
    const auto s = F.inv(at(m, col, col));
    for (int j = 0; j < dim; ++j) {
      at(m, col, j) = F.mul(at(m, col, j), s);
      at(inv, col, j) = F.mul(at(inv, col, j), s);
    }
    for (int r = 0; r < dim; ++r) {
      if (r == col || at(m, r, col) == 0) continue;
      const auto f = at(m, r, col);
      for (int j = 0; j < dim; ++j) {
        at(m, r, j) = F.sub(at(m, r, j), F.mul(f, at(m, col, j)));
        at(inv, r, j) = F.sub(at(inv, r, j), F.mul(f, at(inv, col, j)));
      }
    }
  }
  return inv;
}

inline FiniteField::Elem mat_det(const FiniteField& F, const Matrix& a, int dim) {
  Matrix m = a;
  FiniteField::Elem det = 1;
  auto at = [dim](Matrix& x, int r, int c) -> FiniteField::Elem& { return x[static_cast<std::size_t>(r * dim + c)]; };
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    while (piv < dim && at(m, piv, col) == 0) ++piv;
    if (piv == dim) return 0;
    if (piv != col) {
      for (int j = 0; j < dim; ++j) std::swap(at(m, piv, j), at(m, col, j));
      det = F.neg(det);
    }
    det = F.mul(det, at(m, col, col));
    const auto s = F.inv(at(m, col, col));
    for (int r = col + 1; r < dim; ++r) {
      if (at(m, r, col) == 0) continue;
      const auto f = F.mul(at(m, r, col), s);
      for (int j = col; j < dim; ++j) at(m, r, j) = F.sub(at(m, r, j), F.mul(f, at(m, col, j)));
    }
  }
  return det;
}

}  // namespace quokka
