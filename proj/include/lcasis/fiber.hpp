#pragma once

#include <Eigen/Core>

#include "lcasis/group.hpp"
#include "lcasis/transform.hpp"

namespace lcasis {

/// Everything the fiberization isometry needs about one (G, H) instance:
/// the dual group, the annihilator Delta, the section Omega, the normalized
/// Haar weights, and the index table gamma_index(omega, delta) -> flat index
/// of omega + delta in Gamma. The (omega, delta) -> omega + delta map is a
/// bijection onto Gamma; make() checks it.
struct FiberContext {
  GroupSpec group;          // G, haar_weight = w_G
  GroupSpec dual;           // Gamma, haar_weight = w_Gamma
  LatticeSubgroup lattice;  // H
  LatticeSubgroup delta;    // annihilator of H, subgroup of Gamma
  BorelSection omega;
  HaarSystem haar;
  std::vector<std::int64_t> gamma_index;  // |Omega| x |Delta|, row-major

  int omega_count() const { return static_cast<int>(omega.size()); }
  int delta_count() const { return static_cast<int>(delta.size()); }
  std::int64_t gamma_at(int omega_row, int delta_col) const {
    return gamma_index[std::size_t(omega_row) * delta_count() + delta_col];
  }

  static FiberContext make(const GroupSpec& group, const LatticeSubgroup& h);
};

/// The image of a signal under the fiberization map: row omega holds the
/// fiber Tf(omega) = (fhat(omega + delta))_{delta in Delta}. The section and
/// the Delta ordering are recorded so matrices are comparable across calls.
struct FiberField {
  BorelSection section;
  LatticeSubgroup delta;
  Eigen::MatrixXcd matrix;  // |Omega| x |Delta|
};

/// Fiberization T: matrix[omega][delta] = fhat(omega + delta). Isometric:
/// the weighted field norm equals ||f||.
FiberField fiberize(const Signal& f, const FiberContext& ctx);

/// Inverse of fiberize: scatter the fibers back onto Gamma and invert the
/// Fourier transform. defiberize(fiberize(f)) == f to machine precision.
Signal defiberize(const FiberField& field, const FiberContext& ctx);

/// Action of time translation by h in H on the fiber side: row omega is
/// scaled by conj((h, omega)). The scalar is fiber-constant because (h, .)
/// is Delta-periodic. Throws if h is not in H.
FiberField translate_fibers(const FiberField& field, const GroupElement& h,
                            const FiberContext& ctx);

/// Periodization p(omega) = sum_delta |phihat(omega+delta)|^2, the squared
/// fiber norm of the generator.
std::vector<double> periodization(const Signal& phi, const FiberContext& ctx);

/// Weighted norm of a fiber field: sqrt(sum_omega w_Gamma * ||row||^2).
double field_norm(const FiberField& field, const FiberContext& ctx);

}  // namespace lcasis
