#pragma once

#include <utility>
#include <vector>

#include "lcasis/group.hpp"
#include "lcasis/transform.hpp"

namespace lcasis::oracle {

// Independent time-domain ground truth for the fiber-side machinery. This
// module deliberately shares nothing with fiber/frames beyond group_core and
// the weighted inner product: Gram assembly, eigensolves and least squares
// are all done here from scratch.

/// t_y f(x) = f(x - y), cyclic per coordinate.
Signal translate(const Signal& f, const GroupElement& y);

/// The columns of the translate matrix E_H(A) = {t_h phi : phi in A, h in H},
/// generator-major with H elements in sorted order. |H| * |A| columns.
std::vector<Signal> translates(const std::vector<Signal>& generators,
                               const LatticeSubgroup& h);

/// Dense Hermitian matrix, row-major.
struct HermitianMatrix {
  int n = 0;
  std::vector<cd> a;

  HermitianMatrix() = default;
  explicit HermitianMatrix(int dim) : n(dim), a(std::size_t(dim) * dim) {}
  cd& at(int r, int c) { return a[std::size_t(r) * n + c]; }
  cd at(int r, int c) const { return a[std::size_t(r) * n + c]; }
};

/// Eigenvalues in ascending order, cyclic Jacobi iteration.
std::vector<double> eigenvalues(const HermitianMatrix& m);

struct HermitianEig {
  std::vector<double> values;  // ascending
  std::vector<cd> vectors;     // column k = eigenvector of values[k], n x n
};
HermitianEig eigensystem(const HermitianMatrix& m);

/// Gram matrix of all translates {t_h phi_i} under the weighted L^2(G) inner
/// product. Column order: generator-major, H elements inner (sorted).
HermitianMatrix gram_time(const std::vector<Signal>& generators,
                          const LatticeSubgroup& h, const HaarSystem& haar);

/// Frame bounds of the translate system on its span: smallest eigenvalue of
/// the Gram above tol * lambda_max, and lambda_max. Throws if the system is
/// all zero.
std::pair<double, double> frame_bounds_time(const std::vector<Signal>& generators,
                                            const LatticeSubgroup& h,
                                            const HaarSystem& haar, double tol);

/// Riesz bounds: extreme Gram eigenvalues, zeros included. Riesz iff the
/// lower bound is positive.
std::pair<double, double> riesz_bounds_time(const std::vector<Signal>& generators,
                                            const LatticeSubgroup& h,
                                            const HaarSystem& haar);

/// Least-squares projection of f onto the span of all translates, solved
/// through the pseudo-inverse of the normal equations.
Signal project_time(const std::vector<Signal>& generators,
                    const LatticeSubgroup& h, const HaarSystem& haar,
                    const Signal& f);

/// True iff every translate of every basis vector stays within tol of the
/// plain span of the basis.
bool shift_invariance_check(const std::vector<Signal>& basis,
                            const LatticeSubgroup& h, const HaarSystem& haar,
                            double tol);

}  // namespace lcasis::oracle
