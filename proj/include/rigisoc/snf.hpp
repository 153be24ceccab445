#pragma once

#include <cstdlib>
#include <vector>

namespace rigisoc {

// Smith normal form of an integer matrix by exact row/column reduction.
// Returns the diagonal d1 | d2 | ... | dr (nonnegative, divisibility
// enforced), one entry per diagonal position of the input.
inline std::vector<long long>
smith_normal_form(std::vector<std::vector<long long>> A) {
  std::size_t rows = A.size();
  std::size_t cols = rows ? A[0].size() : 0;
  std::size_t r = std::min(rows, cols);
  std::vector<long long> diag;

  for (std::size_t k = 0; k < r; ++k) {
    // Pivot: minimal nonzero absolute value in the trailing submatrix.
    std::size_t pi = k, pj = k;
    long long best = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        long long v = std::llabs(A[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) {
      for (std::size_t t = k; t < r; ++t)
        diag.push_back(0);
      break;
    }
    std::swap(A[k], A[pi]);
    for (std::size_t i = 0; i < rows; ++i)
      std::swap(A[i][k], A[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        long long q = A[i][k] / A[k][k];
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j)
            A[i][j] -= q * A[k][j];
        if (A[i][k] != 0) { // remainder smaller than pivot: swap up
          std::swap(A[k], A[i]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        long long q = A[k][j] / A[k][k];
        if (q != 0)
          for (std::size_t i = k; i < rows; ++i)
            A[i][j] -= q * A[i][k];
        if (A[k][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i)
            std::swap(A[i][k], A[i][j]);
          clean = false;
        }
      }
      if (!clean)
        continue;
      // Pivot must divide every remaining entry; absorb a violator into
      // row k and repeat.
      for (std::size_t i = k + 1; i < rows && clean; ++i)
        for (std::size_t j = k + 1; j < cols && clean; ++j)
          if (A[i][j] % A[k][k] != 0) {
            for (std::size_t t = k; t < cols; ++t)
              A[k][t] += A[i][t];
            clean = false;
          }
    }
    diag.push_back(std::llabs(A[k][k]));
  }
  return diag;
}

// Invariant factors of the cokernel Z^n / (column span), i.e. the SNF
// diagonal entries that exceed 1 (0 marks a free summand and is kept).
inline std::vector<long long>
invariant_factors(const std::vector<std::vector<long long>> &A) {
  std::vector<long long> out;
  for (long long d : smith_normal_form(A))
    if (d != 1)
      out.push_back(d);
  return out;
}

} // namespace rigisoc
