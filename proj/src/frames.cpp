#include "lcasis/frames.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcasis {

FiberSystem make_fiber_system(std::vector<Signal> generators,
                              const FiberContext& ctx) {
  FiberSystem system;
  system.context = ctx;
  system.synthesis_mats.resize(static_cast<std::size_t>(ctx.omega_count()));
  std::vector<FiberField> fields;
  fields.reserve(generators.size());
  for (const auto& g : generators) fields.push_back(fiberize(g, ctx));
  for (int r = 0; r < ctx.omega_count(); ++r) {
    Eigen::MatrixXcd k(ctx.delta_count(),
                       static_cast<Eigen::Index>(generators.size()));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      k.col(static_cast<Eigen::Index>(i)) = fields[i].matrix.row(r).transpose();
    }
    system.synthesis_mats[static_cast<std::size_t>(r)] = std::move(k);
  }
  system.generators = std::move(generators);
  return system;
}

namespace {

void check_omega(const FiberSystem& system, int omega_idx) {
  if (omega_idx < 0 ||
      omega_idx >= static_cast<int>(system.synthesis_mats.size())) {
    throw std::out_of_range("frames: unknown omega");
  }
}

}  // namespace

const Eigen::MatrixXcd& synthesis(const FiberSystem& system, int omega_idx) {
  check_omega(system, omega_idx);
  return system.synthesis_mats[static_cast<std::size_t>(omega_idx)];
}

Eigen::MatrixXcd analysis(const FiberSystem& system, int omega_idx) {
  return synthesis(system, omega_idx).adjoint();
}

Eigen::MatrixXcd gramian(const FiberSystem& system, int omega_idx) {
  const Eigen::MatrixXcd& k = synthesis(system, omega_idx);
  // Entry (i, j) = sum_delta phihat_i * conj(phihat_j).
  return k.transpose() * k.conjugate();
}

Eigen::MatrixXcd dual_gramian(const FiberSystem& system, int omega_idx) {
  const Eigen::MatrixXcd& k = synthesis(system, omega_idx);
  return k * k.adjoint();
}

FrameReport certify(const FiberSystem& system, double tol) {
  const int gens = static_cast<int>(system.generators.size());
  if (gens == 0) throw std::invalid_argument("certify: empty system");
  if (tol <= 0.0) throw std::invalid_argument("certify: tolerance must be positive");

  const int rows = system.context.omega_count();
  const int delta = system.context.delta_count();
  const int small_dim = std::min(gens, delta);

  // Nonzero spectra of Gramian and dual Gramian coincide; eigensolve the
  // smaller one and pad the other with exact zeros.
  std::vector<std::vector<double>> small_eigs(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    const Eigen::MatrixXcd& k = system.synthesis_mats[static_cast<std::size_t>(r)];
    const Eigen::MatrixXcd g =
        gens <= delta ? Eigen::MatrixXcd(k.adjoint() * k)
                      : Eigen::MatrixXcd(k * k.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g,
                                                       Eigen::EigenvaluesOnly);
    auto& out = small_eigs[static_cast<std::size_t>(r)];
    out.assign(es.eigenvalues().data(),
               es.eigenvalues().data() + es.eigenvalues().size());
    for (double& v : out) v = std::max(v, 0.0);
  }

  FrameReport report;
  report.tol = tol;
  report.per_omega.resize(static_cast<std::size_t>(rows));

  double bessel = 0.0;
  for (const auto& eigs : small_eigs) {
    if (!eigs.empty()) bessel = std::max(bessel, eigs.back());
  }
  report.bessel_bound = bessel;
  report.is_bessel = true;

  const double zero_cut = tol * bessel;
  double frame_lo = std::numeric_limits<double>::infinity();
  double frame_hi = 0.0;
  bool any_active = false;
  double gram_min = std::numeric_limits<double>::infinity();
  double gram_max = 0.0;

  for (int r = 0; r < rows; ++r) {
    const auto& eigs = small_eigs[static_cast<std::size_t>(r)];
    auto& entry = report.per_omega[static_cast<std::size_t>(r)];
    entry.omega = system.context.omega.representatives[r].coords;

    entry.gramian_eigs.assign(static_cast<std::size_t>(gens - small_dim), 0.0);
    entry.gramian_eigs.insert(entry.gramian_eigs.end(), eigs.begin(), eigs.end());
    entry.dual_gramian_eigs.assign(static_cast<std::size_t>(delta - small_dim), 0.0);
    entry.dual_gramian_eigs.insert(entry.dual_gramian_eigs.end(), eigs.begin(),
                                   eigs.end());

    gram_min = std::min(gram_min, entry.gramian_eigs.front());
    gram_max = std::max(gram_max, entry.gramian_eigs.back());

    // Fibers with J(omega) = {0} impose no frame constraint.
    double lo = std::numeric_limits<double>::infinity();
    for (double v : entry.dual_gramian_eigs) {
      if (v > zero_cut) {
        lo = std::min(lo, v);
        break;  // ascending: first above the cut is the smallest
      }
    }
    entry.skipped = !std::isfinite(lo);
    if (!entry.skipped) {
      any_active = true;
      frame_lo = std::min(frame_lo, lo);
      frame_hi = std::max(frame_hi, entry.dual_gramian_eigs.back());
    }
  }

  report.gram_min = gram_min;
  report.gram_max = gram_max;

  if (any_active) {
    report.frame = std::make_pair(frame_lo, frame_hi);
    report.is_frame_for_span = true;
  }
  report.is_riesz_sequence = gram_min > tol * gram_max;
  if (report.is_riesz_sequence) {
    report.riesz = std::make_pair(gram_min, gram_max);
  }
  if (report.frame) {
    const double a = report.frame->first;
    const double b = report.frame->second;
    report.is_tight = (b - a) <= tol * std::max(b, 1.0);
    report.is_parseval = report.is_tight && std::abs(a - 1.0) <= tol &&
                         std::abs(b - 1.0) <= tol;
  }
  return report;
}

std::optional<std::pair<double, double>> principal_frame_bounds(
    const Signal& phi, const FiberContext& ctx, double tol) {
  const std::vector<double> p = periodization(phi, ctx);
  const double pmax = *std::max_element(p.begin(), p.end());
  if (pmax <= 0.0) return std::nullopt;  // zero space
  double lo = pmax;
  for (double v : p) {
    if (v > tol * pmax) lo = std::min(lo, v);
  }
  return std::make_pair(lo, pmax);
}

PrincipalRieszBounds principal_riesz_bounds(const Signal& phi,
                                            const FiberContext& ctx,
                                            double tol) {
  const std::vector<double> p = periodization(phi, ctx);
  PrincipalRieszBounds bounds;
  bounds.lower = *std::min_element(p.begin(), p.end());
  bounds.upper = *std::max_element(p.begin(), p.end());
  bounds.is_riesz = bounds.lower > tol * bounds.upper && bounds.upper > 0.0;
  return bounds;
}

}  // namespace lcasis
