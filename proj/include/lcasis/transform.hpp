#pragma once

#include <complex>
#include <vector>

#include "lcasis/group.hpp"

namespace lcasis {

using cd = std::complex<double>;

/// A function in L^2(G), stored as a complex vector of length |G| in
/// row-major coordinate order.
struct Signal {
  GroupSpec group;
  std::vector<cd> values;
};

/// A function on the dual group Gamma, same indexing convention.
struct DualSignal {
  GroupSpec dual_group;
  std::vector<cd> values;
};

/// Fourier transform with the normalized Haar weight:
///   fhat(gamma) = w_G * sum_x f(x) * conj((x, gamma)).
/// Mixed-radix transform per cyclic factor; OpenMP over independent lines.
DualSignal fourier(const Signal& f, const HaarSystem& haar);

/// Inversion: f(x) = w_Gamma * sum_gamma F(gamma) * (x, gamma).
Signal inverse_fourier(const DualSignal& f, const HaarSystem& haar);

/// Serial direct-sum reference transforms, O(|G|^2). These double as the
/// oracle for the fast path and are kept for testing and benchmarking.
DualSignal fourier_reference(const Signal& f, const HaarSystem& haar);
Signal inverse_fourier_reference(const DualSignal& f, const HaarSystem& haar);

/// Weighted inner product <f,g> = w_G * sum_x f(x) * conj(g(x)).
cd inner_product(const Signal& f, const Signal& g, const HaarSystem& haar);

/// L^2(G) norm under the weighted inner product.
double norm(const Signal& f, const HaarSystem& haar);

}  // namespace lcasis
