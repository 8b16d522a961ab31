#pragma once

#include <cstdint>
#include <vector>

namespace lcasis {

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return data[std::size_t(r) * cols + c]; }

  static IntMatrix identity(int n);
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact integer determinant (Bareiss fraction-free elimination).
std::int64_t det(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix s;  // diagonal with s1 | s2 | ..., nonnegative
  IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form: U*M*V = S with U, V unimodular and S diagonal with a
/// divisibility chain. Used to read off invariant factors of quotients.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Invariant factors (> 1) of the quotient G/H, from the Smith form of the
/// relation matrix [diag(moduli) | generators].
std::vector<std::int64_t> quotient_invariants(const std::vector<int>& moduli,
                                              const std::vector<std::vector<int>>& generators);

}  // namespace lcasis
