#pragma once

#include <vector>

#include "lcasis/fiber.hpp"

namespace lcasis {

/// Range function of a shift-invariant space: for each omega an orthonormal
/// basis of J(omega) = span{Tphi(omega) : phi generator} and its rank. Ranks
/// are cut at a single global scale (tol * largest singular value over all
/// omega) so they do not flicker across fibers of one space.
struct RangeFunction {
  std::vector<Eigen::MatrixXcd> basis;  // per omega: |Delta| x rank, orthonormal
  std::vector<int> rank;
  double tol = 0.0;
  double sigma_max = 0.0;  // global scale used for the rank cut
};

/// An H-invariant subspace of L^2(G) described by generators and the range
/// function of their fibers.
struct SISpace {
  std::vector<Signal> generators;
  RangeFunction range;
  FiberContext context;
};

/// Per-omega orthonormal bases of the fiber spans via SVD. Basis columns are
/// ordered by decreasing singular value with a deterministic phase (largest
/// entry made real positive). Throws on an empty generator list; the all-zero
/// generator set is legal and yields the zero space.
RangeFunction range_function(const std::vector<Signal>& generators,
                             const FiberContext& ctx, double tol = 1e-10);

SISpace make_space(std::vector<Signal> generators, const FiberContext& ctx,
                   double tol = 1e-10);

/// Membership: true iff at every omega the residual of Tf(omega) against
/// basis(omega) has norm at most tol * ||Tf||.
bool contains(const SISpace& space, const Signal& f, double tol);

/// Orthogonal projection onto the space, executed fiberwise:
/// Tf(omega) -> basis(omega) * basis(omega)^H * Tf(omega).
Signal project(const SISpace& space, const Signal& f);

/// omega -> dim J(omega).
std::vector<int> dimension_function(const SISpace& space);

/// Indices of omega with J(omega) != {0}.
std::vector<int> spectrum(const SISpace& space);

/// Orthogonal decomposition into principal spaces: component n has fiber
/// Tpsi_n(omega) equal to the n-th basis vector of J(omega) where the rank
/// allows and zero elsewhere. Each component generates its space with a
/// Parseval frame of translates and the spectra are nested.
std::vector<Signal> decompose(const SISpace& space);

}  // namespace lcasis
