#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcasis/fiber.hpp"

namespace lcasis {

/// Generator system with its per-omega synthesis matrices: column i of
/// K(omega) is the fiber Tphi_i(omega).
struct FiberSystem {
  std::vector<Signal> generators;
  FiberContext context;
  std::vector<Eigen::MatrixXcd> synthesis_mats;  // per omega: |Delta| x |A|
};

/// Per-omega Gramian and dual-Gramian spectra recorded by certify.
/// skipped marks fibers where J(omega) = {0}; they contribute no frame
/// constraint.
struct OmegaSpectra {
  std::vector<int> omega;
  std::vector<double> gramian_eigs;       // ascending, size |A|
  std::vector<double> dual_gramian_eigs;  // ascending, size |Delta|
  bool skipped = false;
};

/// Certified Bessel/frame/Riesz status with numeric bounds. frame is absent
/// only for the zero space; riesz is absent when the system is not a Riesz
/// sequence. gram_min/gram_max are the extreme Gramian eigenvalues over all
/// omega (zeros included), the quantities the Riesz criterion tests.
struct FrameReport {
  double bessel_bound = 0.0;
  std::optional<std::pair<double, double>> frame;
  std::optional<std::pair<double, double>> riesz;
  bool is_bessel = false;
  bool is_frame_for_span = false;
  bool is_riesz_sequence = false;
  bool is_parseval = false;
  bool is_tight = false;
  std::vector<OmegaSpectra> per_omega;
  double gram_min = 0.0;
  double gram_max = 0.0;
  double tol = 0.0;
};

FiberSystem make_fiber_system(std::vector<Signal> generators,
                              const FiberContext& ctx);

/// Synthesis operator at omega: the |Delta| x |A| matrix applying
/// c -> sum_i c_i Tphi_i(omega).
const Eigen::MatrixXcd& synthesis(const FiberSystem& system, int omega_idx);

/// Analysis operator: conjugate transpose of synthesis.
Eigen::MatrixXcd analysis(const FiberSystem& system, int omega_idx);

/// Gramian G(omega)[i][j] = sum_delta phihat_i(omega+delta) *
/// conj(phihat_j(omega+delta)). Hermitian positive semidefinite.
Eigen::MatrixXcd gramian(const FiberSystem& system, int omega_idx);

/// Dual Gramian Gt(omega)[d][d'] = sum_i phihat_i(omega+d) *
/// conj(phihat_i(omega+d')); same nonzero spectrum as the Gramian.
Eigen::MatrixXcd dual_gramian(const FiberSystem& system, int omega_idx);

/// Certify Bessel/frame/Riesz properties from the per-omega spectra:
///   bessel     = max_omega lambda_max
///   frame      = (min nonzero dual-Gramian eigenvalue over the spectrum,
///                 max eigenvalue); fibers with J(omega) = {0} are skipped
///   riesz      = extreme Gramian eigenvalues, present iff min > tol * max.
/// tol separates "zero" from "nonzero" eigenvalues, relative to the Bessel
/// bound. The eigensolve runs on the smaller of Gramian/dual Gramian.
FrameReport certify(const FiberSystem& system, double tol = 1e-9);

/// Frame bounds of a principal space: min/max of the periodization over
/// Omega_phi = {omega : p(omega) > tol * max p}. Empty for the zero signal.
std::optional<std::pair<double, double>> principal_frame_bounds(
    const Signal& phi, const FiberContext& ctx, double tol = 1e-9);

/// Riesz bounds of a single generator: periodization extremes over all of
/// Omega; the translates form a Riesz basis iff lower > tol * upper.
struct PrincipalRieszBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool is_riesz = false;
};
PrincipalRieszBounds principal_riesz_bounds(const Signal& phi,
                                            const FiberContext& ctx,
                                            double tol = 1e-9);

}  // namespace lcasis
