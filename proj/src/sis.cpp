#include "lcasis/sis.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcasis {

namespace {

// Deterministic phase: rotate each column so its largest-magnitude entry
// (first one on ties) is real positive.
void fix_column_phases(Eigen::MatrixXcd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index best = 0;
    double mag = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double a = std::abs(m(r, c));
      if (a > mag) {
        mag = a;
        best = r;
      }
    }
    if (mag > 0.0) {
      m.col(c) *= std::conj(m(best, c)) / mag;
    }
  }
}

Eigen::MatrixXcd stack_fibers(const std::vector<FiberField>& fields, int row,
                              int delta_count) {
  Eigen::MatrixXcd k(delta_count, static_cast<Eigen::Index>(fields.size()));
  for (std::size_t i = 0; i < fields.size(); ++i) {
    k.col(static_cast<Eigen::Index>(i)) = fields[i].matrix.row(row).transpose();
  }
  return k;
}

}  // namespace

RangeFunction range_function(const std::vector<Signal>& generators,
                             const FiberContext& ctx, double tol) {
  if (generators.empty()) {
    throw std::invalid_argument("range_function: empty generator list");
  }
  if (tol <= 0.0) {
    throw std::invalid_argument("range_function: tolerance must be positive");
  }
  std::vector<FiberField> fields;
  fields.reserve(generators.size());
  for (const auto& g : generators) fields.push_back(fiberize(g, ctx));

  const int rows = ctx.omega_count();
  std::vector<Eigen::JacobiSVD<Eigen::MatrixXcd>> svds(rows);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    svds[r].compute(stack_fibers(fields, r, ctx.delta_count()),
                    Eigen::ComputeThinU);
  }

  // One scale for the whole space keeps ranks consistent across fibers.
  double sigma_max = 0.0;
  for (const auto& svd : svds) {
    if (svd.singularValues().size() > 0) {
      sigma_max = std::max(sigma_max, svd.singularValues()(0));
    }
  }

  RangeFunction range;
  range.tol = tol;
  range.sigma_max = sigma_max;
  range.basis.resize(rows);
  range.rank.resize(rows);
  const double cut = tol * sigma_max;
  for (int r = 0; r < rows; ++r) {
    const auto& sv = svds[r].singularValues();
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cut) ++rank;
    Eigen::MatrixXcd basis = svds[r].matrixU().leftCols(rank);
    fix_column_phases(basis);
    range.basis[r] = std::move(basis);
    range.rank[r] = rank;
  }
  return range;
}

SISpace make_space(std::vector<Signal> generators, const FiberContext& ctx,
                   double tol) {
  SISpace space;
  space.range = range_function(generators, ctx, tol);
  space.generators = std::move(generators);
  space.context = ctx;
  return space;
}

bool contains(const SISpace& space, const Signal& f, double tol) {
  const FiberField field = fiberize(f, space.context);
  const double total = field_norm(field, space.context);
  if (total == 0.0) return true;
  for (int r = 0; r < space.context.omega_count(); ++r) {
    const Eigen::VectorXcd fiber = field.matrix.row(r).transpose();
    const Eigen::MatrixXcd& basis = space.range.basis[r];
    const double residual = (fiber - basis * (basis.adjoint() * fiber)).norm();
    if (residual > tol * total) return false;
  }
  return true;
}

Signal project(const SISpace& space, const Signal& f) {
  FiberField field = fiberize(f, space.context);
  for (int r = 0; r < space.context.omega_count(); ++r) {
    const Eigen::MatrixXcd& basis = space.range.basis[r];
    const Eigen::VectorXcd fiber = field.matrix.row(r).transpose();
    field.matrix.row(r) = (basis * (basis.adjoint() * fiber)).transpose();
  }
  return defiberize(field, space.context);
}

std::vector<int> dimension_function(const SISpace& space) {
  return space.range.rank;
}

std::vector<int> spectrum(const SISpace& space) {
  std::vector<int> s;
  for (int r = 0; r < static_cast<int>(space.range.rank.size()); ++r) {
    if (space.range.rank[r] > 0) s.push_back(r);
  }
  return s;
}

std::vector<Signal> decompose(const SISpace& space) {
  const int max_rank =
      space.range.rank.empty()
          ? 0
          : *std::max_element(space.range.rank.begin(), space.range.rank.end());
  std::vector<Signal> components;
  components.reserve(static_cast<std::size_t>(max_rank));
  for (int n = 0; n < max_rank; ++n) {
    FiberField field;
    field.section = space.context.omega;
    field.delta = space.context.delta;
    field.matrix = Eigen::MatrixXcd::Zero(space.context.omega_count(),
                                          space.context.delta_count());
    for (int r = 0; r < space.context.omega_count(); ++r) {
      if (space.range.rank[r] > n) {
        field.matrix.row(r) = space.range.basis[r].col(n).transpose();
      }
    }
    components.push_back(defiberize(field, space.context));
  }
  return components;
}

}  // namespace lcasis
