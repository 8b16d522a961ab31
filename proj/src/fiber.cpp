#include "lcasis/fiber.hpp"

#include <cmath>
#include <stdexcept>

namespace lcasis {

FiberContext FiberContext::make(const GroupSpec& group,
                                const LatticeSubgroup& h) {
  FiberContext ctx;
  ctx.lattice = h;
  ctx.haar = haar_system(group, h);
  ctx.group = group;
  ctx.group.haar_weight = ctx.haar.w_G;
  ctx.delta = annihilator(group, h);
  ctx.dual = ctx.delta.parent;
  ctx.dual.haar_weight = ctx.haar.w_Gamma;
  ctx.delta.parent.haar_weight = ctx.haar.w_Gamma;
  ctx.omega = section(ctx.dual, ctx.delta);

  const std::int64_t n = group.order();
  const int rows = ctx.omega_count();
  const int cols = ctx.delta_count();
  ctx.gamma_index.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < rows; ++r) {
    const auto& rep = ctx.omega.representatives[r].coords;
    for (int c = 0; c < cols; ++c) {
      const std::int64_t g =
          ctx.dual.index_of(ctx.dual.add(rep, ctx.delta.elements[c].coords));
      ctx.gamma_index[std::size_t(r) * cols + c] = g;
      seen[static_cast<std::size_t>(g)] = 1;
    }
  }
  for (char s : seen) {
    if (!s) throw std::logic_error("FiberContext: (omega, delta) does not cover Gamma");
  }
  return ctx;
}

namespace {

void check_context(const Signal& f, const FiberContext& ctx) {
  if (!f.group.same_moduli(ctx.group) ||
      static_cast<std::int64_t>(f.values.size()) != ctx.group.order()) {
    throw std::invalid_argument("fiber: signal does not match context");
  }
}

void check_shape(const FiberField& field, const FiberContext& ctx) {
  if (field.matrix.rows() != ctx.omega_count() ||
      field.matrix.cols() != ctx.delta_count()) {
    throw std::invalid_argument("fiber: field shape does not match context");
  }
}

}  // namespace

FiberField fiberize(const Signal& f, const FiberContext& ctx) {
  check_context(f, ctx);
  const DualSignal fhat = fourier(f, ctx.haar);
  FiberField field;
  field.section = ctx.omega;
  field.delta = ctx.delta;
  field.matrix.resize(ctx.omega_count(), ctx.delta_count());
  for (int r = 0; r < ctx.omega_count(); ++r) {
    for (int c = 0; c < ctx.delta_count(); ++c) {
      field.matrix(r, c) = fhat.values[static_cast<std::size_t>(ctx.gamma_at(r, c))];
    }
  }
  return field;
}

Signal defiberize(const FiberField& field, const FiberContext& ctx) {
  check_shape(field, ctx);
  DualSignal g;
  g.dual_group = ctx.dual;
  g.values.assign(static_cast<std::size_t>(ctx.group.order()), cd{0.0, 0.0});
  for (int r = 0; r < ctx.omega_count(); ++r) {
    for (int c = 0; c < ctx.delta_count(); ++c) {
      g.values[static_cast<std::size_t>(ctx.gamma_at(r, c))] = field.matrix(r, c);
    }
  }
  return inverse_fourier(g, ctx.haar);
}

FiberField translate_fibers(const FiberField& field, const GroupElement& h,
                            const FiberContext& ctx) {
  check_shape(field, ctx);
  if (!ctx.lattice.contains(h)) {
    throw std::invalid_argument("translate_fibers: element not in the lattice");
  }
  FiberField out = field;
  for (int r = 0; r < ctx.omega_count(); ++r) {
    const cd scale =
        std::conj(character_eval(ctx.group, h, ctx.omega.representatives[r]));
    out.matrix.row(r) *= scale;
  }
  return out;
}

std::vector<double> periodization(const Signal& phi, const FiberContext& ctx) {
  const FiberField field = fiberize(phi, ctx);
  std::vector<double> p(static_cast<std::size_t>(ctx.omega_count()));
  for (int r = 0; r < ctx.omega_count(); ++r) {
    p[static_cast<std::size_t>(r)] = field.matrix.row(r).squaredNorm();
  }
  return p;
}

double field_norm(const FiberField& field, const FiberContext& ctx) {
  check_shape(field, ctx);
  const double w = ctx.haar.w_Gamma.to_double();
  double acc = 0.0;
  for (int r = 0; r < field.matrix.rows(); ++r) {
    acc += w * field.matrix.row(r).squaredNorm();
  }
  return std::sqrt(acc);
}

}  // namespace lcasis
