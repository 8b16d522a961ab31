#include "lcasis/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace lcasis {

namespace {

void check_signal(const GroupSpec& group, std::size_t len,
                  const HaarSystem& haar) {
  const std::int64_t n = group.order();
  if (static_cast<std::int64_t>(len) != n) {
    throw std::invalid_argument("transform: value count does not match |G|");
  }
  // The normalized weights satisfy w_G * w_Gamma * |G| = 1 exactly; anything
  // else means the Haar system belongs to a different instance.
  if (haar.w_G * haar.w_Gamma * n != Rational(1)) {
    throw std::invalid_argument("transform: weight/group mismatch");
  }
}

int smallest_prime_factor(int n) {
  if (n % 2 == 0) return 2;
  for (int p = 3; static_cast<std::int64_t>(p) * p <= n; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

// Mixed-radix Cooley-Tukey on a contiguous buffer. roots[(t % n) * rstride]
// holds w_n^t with the transform sign baked in; subtransforms of length
// n/p reuse the same table at stride rstride * p. Both x and scratch are
// clobbered; the result lands in x.
void dft_rec(cd* x, int n, const cd* roots, int rstride, cd* scratch) {
  if (n == 1) return;
  const int p = smallest_prime_factor(n);
  if (p == n) {
    for (int k = 0; k < n; ++k) {
      cd acc = x[0];
      for (int j = 1; j < n; ++j) {
        acc += x[j] * roots[static_cast<std::int64_t>(j) * k % n * rstride];
      }
      scratch[k] = acc;
    }
    for (int k = 0; k < n; ++k) x[k] = scratch[k];
    return;
  }
  const int m = n / p;
  for (int r = 0; r < p; ++r) {
    for (int j = 0; j < m; ++j) scratch[r * m + j] = x[j * p + r];
  }
  for (int r = 0; r < p; ++r) {
    dft_rec(scratch + r * m, m, roots, rstride * p, x + r * m);
  }
  for (int k = 0; k < n; ++k) {
    cd acc = scratch[k % m];
    for (int r = 1; r < p; ++r) {
      acc += roots[static_cast<std::int64_t>(r) * k % n * rstride] *
             scratch[r * m + k % m];
    }
    x[k] = acc;
  }
}

// Apply the length-N transform along one axis of the row-major array.
// Lines are independent; the parallel loop writes disjoint slices.
void dft_axis(std::vector<cd>& values, const std::vector<int>& moduli,
              int axis, int sign) {
  const int n = moduli[axis];
  if (n == 1) return;

  std::int64_t inner = 1;
  for (std::size_t i = axis + 1; i < moduli.size(); ++i) inner *= moduli[i];
  std::int64_t outer = 1;
  for (int i = 0; i < axis; ++i) outer *= moduli[i];

  std::vector<cd> roots(n);
  for (int t = 0; t < n; ++t) {
    roots[t] = std::polar(1.0, sign * 2.0 * M_PI * t / n);
  }

  const std::int64_t lines = outer * inner;
#pragma omp parallel for schedule(static)
  for (std::int64_t line = 0; line < lines; ++line) {
    const std::int64_t o = line / inner;
    const std::int64_t in = line % inner;
    const std::int64_t base = o * n * inner + in;
    std::vector<cd> buf(n), scratch(n);
    for (int j = 0; j < n; ++j) buf[j] = values[base + j * inner];
    dft_rec(buf.data(), n, roots.data(), 1, scratch.data());
    for (int j = 0; j < n; ++j) values[base + j * inner] = buf[j];
  }
}

std::vector<cd> transform_all_axes(std::vector<cd> values,
                                   const std::vector<int>& moduli, int sign,
                                   double scale) {
  for (std::size_t axis = 0; axis < moduli.size(); ++axis) {
    dft_axis(values, moduli, static_cast<int>(axis), sign);
  }
  for (cd& v : values) v *= scale;
  return values;
}

}  // namespace

DualSignal fourier(const Signal& f, const HaarSystem& haar) {
  check_signal(f.group, f.values.size(), haar);
  DualSignal out;
  out.dual_group = f.group;
  out.dual_group.haar_weight = haar.w_Gamma;
  out.values =
      transform_all_axes(f.values, f.group.moduli, -1, haar.w_G.to_double());
  return out;
}

Signal inverse_fourier(const DualSignal& f, const HaarSystem& haar) {
  check_signal(f.dual_group, f.values.size(), haar);
  Signal out;
  out.group = f.dual_group;
  out.group.haar_weight = haar.w_G;
  out.values = transform_all_axes(f.values, f.dual_group.moduli, +1,
                                  haar.w_Gamma.to_double());
  return out;
}

DualSignal fourier_reference(const Signal& f, const HaarSystem& haar) {
  check_signal(f.group, f.values.size(), haar);
  const std::int64_t n = f.group.order();
  const double w = haar.w_G.to_double();
  DualSignal out;
  out.dual_group = f.group;
  out.dual_group.haar_weight = haar.w_Gamma;
  out.values.assign(static_cast<std::size_t>(n), cd{0.0, 0.0});
  for (std::int64_t g = 0; g < n; ++g) {
    const Character gamma{f.group.coords_at(g)};
    cd acc{0.0, 0.0};
    for (std::int64_t x = 0; x < n; ++x) {
      acc += f.values[static_cast<std::size_t>(x)] *
             std::conj(character_eval(f.group, GroupElement{f.group.coords_at(x)},
                                      gamma));
    }
    out.values[static_cast<std::size_t>(g)] = w * acc;
  }
  return out;
}

Signal inverse_fourier_reference(const DualSignal& f, const HaarSystem& haar) {
  check_signal(f.dual_group, f.values.size(), haar);
  const std::int64_t n = f.dual_group.order();
  const double w = haar.w_Gamma.to_double();
  Signal out;
  out.group = f.dual_group;
  out.group.haar_weight = haar.w_G;
  out.values.assign(static_cast<std::size_t>(n), cd{0.0, 0.0});
  for (std::int64_t x = 0; x < n; ++x) {
    const GroupElement el{f.dual_group.coords_at(x)};
    cd acc{0.0, 0.0};
    for (std::int64_t g = 0; g < n; ++g) {
      acc += f.values[static_cast<std::size_t>(g)] *
             character_eval(f.dual_group, el, Character{f.dual_group.coords_at(g)});
    }
    out.values[static_cast<std::size_t>(x)] = w * acc;
  }
  return out;
}

cd inner_product(const Signal& f, const Signal& g, const HaarSystem& haar) {
  if (f.values.size() != g.values.size() || !f.group.same_moduli(g.group)) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    acc += f.values[i] * std::conj(g.values[i]);
  }
  return haar.w_G.to_double() * acc;
}

double norm(const Signal& f, const HaarSystem& haar) {
  double acc = 0.0;
  for (const cd& v : f.values) acc += std::norm(v);
  return std::sqrt(haar.w_G.to_double() * acc);
}

}  // namespace lcasis
