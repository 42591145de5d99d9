#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "alexdual/errors.hpp"

namespace alexdual {

using BigInt = mpz_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  IntegerMatrix transposed() const {
    IntegerMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols != y.rows) throw DomainError("matrix product: dimension mismatch");
    IntegerMatrix p(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const BigInt& xik = x.at(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < y.cols; ++j) {
          if (y.at(k, j) == 0) continue;
          mpz_addmul(p.at(i, j).get_mpz_t(), xik.get_mpz_t(), y.at(k, j).get_mpz_t());
        }
      }
    return p;
  }

  bool is_zero() const {
    for (const BigInt& v : a)
      if (v != 0) return false;
    return true;
  }
};

namespace detail {

inline void swap_rows(IntegerMatrix& M, int r1, int r2) {
  if (r1 == r2) return;
  for (int j = 0; j < M.cols; ++j) std::swap(M.at(r1, j), M.at(r2, j));
}

inline void swap_cols(IntegerMatrix& M, int c1, int c2) {
  if (c1 == c2) return;
  for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, c1), M.at(i, c2));
}

// Nonzero entry of minimal absolute value in the trailing submatrix,
// ties broken by lowest row then lowest column.
inline std::optional<std::pair<int, int>> min_abs_pivot(const IntegerMatrix& M, int from) {
  std::optional<std::pair<int, int>> best;
  BigInt best_abs;
  for (int i = from; i < M.rows; ++i)
    for (int j = from; j < M.cols; ++j) {
      const BigInt& v = M.at(i, j);
      if (v == 0) continue;
      BigInt a = abs(v);
      if (!best || a < best_abs) {
        best = std::pair<int, int>{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

/// The nonzero invariant factors d₁ | d₂ | … of M (so the rank of M is the
/// length of the result). Diagonalization by row/column operations; pivots
/// are chosen by minimal absolute value (ties: lowest row, then column).
inline std::vector<BigInt> smith_normal_form(IntegerMatrix M) {
  std::vector<BigInt> factors;
  const int steps = std::min(M.rows, M.cols);
  BigInt q, tmp;
  int t = 0;
  while (t < steps) {
    auto p = detail::min_abs_pivot(M, t);
    if (!p) break;
    detail::swap_rows(M, t, p->first);
    detail::swap_cols(M, t, p->second);

    // Clear column t and row t. A nonzero remainder is strictly smaller
    // than the pivot, so swapping it into the pivot slot terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < M.rows; ++i) {
        if (M.at(i, t) == 0) continue;
        q = M.at(i, t) / M.at(t, t);
        if (q != 0)
          for (int j = t; j < M.cols; ++j) {
            if (M.at(t, j) == 0) continue;
            mpz_submul(M.at(i, j).get_mpz_t(), q.get_mpz_t(), M.at(t, j).get_mpz_t());
          }
        if (M.at(i, t) != 0) {
          detail::swap_rows(M, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < M.cols; ++j) {
        if (M.at(t, j) == 0) continue;
        q = M.at(t, j) / M.at(t, t);
        if (q != 0)
          for (int i = t; i < M.rows; ++i) {
            if (M.at(i, t) == 0) continue;
            mpz_submul(M.at(i, j).get_mpz_t(), q.get_mpz_t(), M.at(i, t).get_mpz_t());
          }
        if (M.at(t, j) != 0) {
          detail::swap_cols(M, t, j);
          clean = false;
        }
      }
    }

    // The pivot must divide every remaining entry; if not, fold the
    // offending row into row t and redo this step.
    bool divides_rest = true;
    for (int i = t + 1; i < M.rows && divides_rest; ++i)
      for (int j = t + 1; j < M.cols; ++j) {
        tmp = M.at(i, j) % M.at(t, t);
        if (tmp != 0) {
          for (int k = t; k < M.cols; ++k) M.at(t, k) += M.at(i, k);
          divides_rest = false;
          break;
        }
      }
    if (!divides_rest) continue;

    factors.push_back(abs(M.at(t, t)));
    ++t;
  }
  return factors;
}

}  // namespace alexdual
