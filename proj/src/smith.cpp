#include "lcasis/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lcasis {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

std::int64_t det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  const int n = m.rows;
  IntMatrix a = m;
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    // Bareiss fraction-free step: stays in integers.
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

struct Smithing {
  IntMatrix s, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, std::int64_t q) {  // row dst += q * row src
    if (q == 0) return;
    for (int j = 0; j < s.cols; ++j) s.at(dst, j) += q * s.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += q * u.at(src, j);
  }
  void add_col(int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int i = 0; i < s.rows; ++i) s.at(i, dst) += q * s.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += q * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < s.cols; ++j) s.at(r, j) = -s.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Smithing w;
  w.s = m;
  w.u = IntMatrix::identity(m.rows);
  w.v = IntMatrix::identity(m.cols);

  const int steps = std::min(m.rows, m.cols);
  for (int t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    for (;;) {
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int i = t; i < m.rows; ++i) {
        for (int j = t; j < m.cols; ++j) {
          const std::int64_t a = std::abs(w.s.at(i, j));
          if (a != 0 && (pr < 0 || a < best)) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) {
        pr = pc = t;  // trailing block all zero; done
      }
      if (w.s.at(pr, pc) == 0) break;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        const std::int64_t q = w.s.at(i, t) / w.s.at(t, t);
        w.add_row(i, t, -q);
        if (w.s.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        const std::int64_t q = w.s.at(t, j) / w.s.at(t, t);
        w.add_col(j, t, -q);
        if (w.s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders became new, smaller pivot candidates

      // Pivot must divide the whole trailing block for the chain to work out;
      // if not, pull the offending row in and restart the reduction.
      bool divides = true;
      for (int i = t + 1; i < m.rows && divides; ++i) {
        for (int j = t + 1; j < m.cols; ++j) {
          if (w.s.at(i, j) % w.s.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (w.s.at(t, t) < 0) w.negate_row(t);
  }
  return SmithDecomposition{w.u, w.s, w.v};
}

std::vector<std::int64_t> quotient_invariants(
    const std::vector<int>& moduli,
    const std::vector<std::vector<int>>& generators) {
  const int d = static_cast<int>(moduli.size());
  const int k = static_cast<int>(generators.size());
  IntMatrix rel(d, d + k);
  for (int i = 0; i < d; ++i) rel.at(i, i) = moduli[i];
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < d; ++i) rel.at(i, d + j) = generators[j][i];
  }
  const SmithDecomposition snf = smith_normal_form(rel);
  std::vector<std::int64_t> invariants;
  for (int i = 0; i < d; ++i) {
    if (snf.s.at(i, i) > 1) invariants.push_back(snf.s.at(i, i));
  }
  return invariants;
}

}  // namespace lcasis
