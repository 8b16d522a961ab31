#include "lcasis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcasis::oracle {

Signal translate(const Signal& f, const GroupElement& y) {
  if (!f.group.valid_coords(y.coords)) {
    throw std::invalid_argument("translate: element out of range");
  }
  const std::int64_t n = f.group.order();
  Signal out;
  out.group = f.group;
  out.values.resize(f.values.size());
  for (std::int64_t x = 0; x < n; ++x) {
    const std::vector<int> src =
        f.group.add(f.group.coords_at(x), f.group.negate(y.coords));
    out.values[static_cast<std::size_t>(x)] =
        f.values[static_cast<std::size_t>(f.group.index_of(src))];
  }
  return out;
}

std::vector<Signal> translates(const std::vector<Signal>& generators,
                               const LatticeSubgroup& h) {
  std::vector<Signal> cols;
  cols.reserve(generators.size() * h.elements.size());
  for (const auto& g : generators) {
    for (const auto& el : h.elements) {
      cols.push_back(translate(g, el));
    }
  }
  return cols;
}

namespace {

double off_diagonal_norm(const HermitianMatrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) acc += std::norm(m.at(i, j));
  }
  return std::sqrt(2.0 * acc);
}

// Cyclic Jacobi for Hermitian matrices. Rotations are chosen to zero the
// (p, q) entry; convergence is quadratic once the off-diagonal mass is small.
void jacobi_sweeps(HermitianMatrix& m, std::vector<cd>* vectors) {
  const int n = m.n;
  if (vectors) {
    vectors->assign(std::size_t(n) * n, cd{0.0, 0.0});
    for (int i = 0; i < n; ++i) (*vectors)[std::size_t(i) * n + i] = 1.0;
  }
  if (n < 2) return;

  double frob = 0.0;
  for (const cd& v : m.a) frob += std::norm(v);
  frob = std::sqrt(frob);
  if (frob == 0.0) return;
  const double stop = 1e-14 * frob;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(m) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd g = m.at(p, q);
        const double mag = std::abs(g);
        if (mag <= 1e-300) continue;
        const cd z = g / mag;  // phase of the pivot entry
        const double alpha = m.at(p, p).real();
        const double beta = m.at(q, q).real();
        const double tau = (beta - alpha) / (2.0 * mag);
        const double t = tau >= 0.0
                             ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: col p <- c*col p + s*conj(z)*col q,
        //          col q <- -s*z*col p + c*col q.
        for (int k = 0; k < n; ++k) {
          const cd kp = m.at(k, p);
          const cd kq = m.at(k, q);
          m.at(k, p) = c * kp + s * std::conj(z) * kq;
          m.at(k, q) = -s * z * kp + c * kq;
        }
        // Rows: row p <- c*row p + s*z*row q,
        //       row q <- -s*conj(z)*row p + c*row q.
        for (int k = 0; k < n; ++k) {
          const cd pk = m.at(p, k);
          const cd qk = m.at(q, k);
          m.at(p, k) = c * pk + s * z * qk;
          m.at(q, k) = -s * std::conj(z) * pk + c * qk;
        }
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        m.at(p, p) = cd{m.at(p, p).real(), 0.0};
        m.at(q, q) = cd{m.at(q, q).real(), 0.0};

        if (vectors) {
          for (int k = 0; k < n; ++k) {
            const cd kp = (*vectors)[std::size_t(k) * n + p];
            const cd kq = (*vectors)[std::size_t(k) * n + q];
            (*vectors)[std::size_t(k) * n + p] = c * kp + s * std::conj(z) * kq;
            (*vectors)[std::size_t(k) * n + q] = -s * z * kp + c * kq;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<double> eigenvalues(const HermitianMatrix& m) {
  HermitianMatrix work = m;
  jacobi_sweeps(work, nullptr);
  std::vector<double> vals(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i) vals[static_cast<std::size_t>(i)] = work.at(i, i).real();
  std::sort(vals.begin(), vals.end());
  return vals;
}

HermitianEig eigensystem(const HermitianMatrix& m) {
  HermitianMatrix work = m;
  std::vector<cd> vectors;
  jacobi_sweeps(work, &vectors);

  std::vector<int> order(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return work.at(a, a).real() < work.at(b, b).real();
  });

  HermitianEig eig;
  eig.values.resize(static_cast<std::size_t>(m.n));
  eig.vectors.assign(std::size_t(m.n) * m.n, cd{0.0, 0.0});
  for (int k = 0; k < m.n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    eig.values[static_cast<std::size_t>(k)] = work.at(src, src).real();
    for (int r = 0; r < m.n; ++r) {
      eig.vectors[std::size_t(r) * m.n + k] = vectors[std::size_t(r) * m.n + src];
    }
  }
  return eig;
}

HermitianMatrix gram_time(const std::vector<Signal>& generators,
                          const LatticeSubgroup& h, const HaarSystem& haar) {
  const std::vector<Signal> cols = translates(generators, h);
  const int n = static_cast<int>(cols.size());
  HermitianMatrix gram(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const cd v = inner_product(cols[static_cast<std::size_t>(i)],
                                 cols[static_cast<std::size_t>(j)], haar);
      gram.at(i, j) = v;
      gram.at(j, i) = std::conj(v);
    }
  }
  return gram;
}

std::pair<double, double> frame_bounds_time(const std::vector<Signal>& generators,
                                            const LatticeSubgroup& h,
                                            const HaarSystem& haar, double tol) {
  const std::vector<double> eigs = eigenvalues(gram_time(generators, h, haar));
  const double top = eigs.back();
  if (top <= 0.0) {
    throw std::domain_error("frame_bounds_time: all-zero system");
  }
  double lo = top;
  for (double v : eigs) {
    if (v > tol * top) {
      lo = v;
      break;
    }
  }
  return {lo, top};
}

std::pair<double, double> riesz_bounds_time(const std::vector<Signal>& generators,
                                            const LatticeSubgroup& h,
                                            const HaarSystem& haar) {
  const std::vector<double> eigs = eigenvalues(gram_time(generators, h, haar));
  return {std::max(eigs.front(), 0.0), std::max(eigs.back(), 0.0)};
}

namespace {

// Least squares onto the plain span of cols: solve the normal equations
// M c = rhs with M[a][b] = <col_b, col_a> through the pseudo-inverse.
Signal project_onto_span(const std::vector<Signal>& cols,
                         const HaarSystem& haar, const Signal& f) {
  const int n = static_cast<int>(cols.size());
  HermitianMatrix m(n);
  std::vector<cd> rhs(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      m.at(a, b) = inner_product(cols[static_cast<std::size_t>(b)],
                                 cols[static_cast<std::size_t>(a)], haar);
    }
    rhs[static_cast<std::size_t>(a)] =
        inner_product(f, cols[static_cast<std::size_t>(a)], haar);
  }
  const HermitianEig eig = eigensystem(m);
  const double cut = 1e-10 * std::max(eig.values.back(), 0.0);

  // c = V diag(1/lambda) V^H rhs over the numerically nonzero eigenvalues.
  std::vector<cd> coeff(static_cast<std::size_t>(n), cd{0.0, 0.0});
  for (int k = 0; k < n; ++k) {
    const double lambda = eig.values[static_cast<std::size_t>(k)];
    if (lambda <= cut) continue;
    cd dot{0.0, 0.0};
    for (int r = 0; r < n; ++r) {
      dot += std::conj(eig.vectors[std::size_t(r) * n + k]) *
             rhs[static_cast<std::size_t>(r)];
    }
    dot /= lambda;
    for (int r = 0; r < n; ++r) {
      coeff[static_cast<std::size_t>(r)] +=
          eig.vectors[std::size_t(r) * n + k] * dot;
    }
  }

  Signal out;
  out.group = f.group;
  out.values.assign(f.values.size(), cd{0.0, 0.0});
  for (int b = 0; b < n; ++b) {
    const cd c = coeff[static_cast<std::size_t>(b)];
    if (c == cd{0.0, 0.0}) continue;
    const auto& col = cols[static_cast<std::size_t>(b)].values;
    for (std::size_t i = 0; i < col.size(); ++i) out.values[i] += c * col[i];
  }
  return out;
}

}  // namespace

Signal project_time(const std::vector<Signal>& generators,
                    const LatticeSubgroup& h, const HaarSystem& haar,
                    const Signal& f) {
  return project_onto_span(translates(generators, h), haar, f);
}

bool shift_invariance_check(const std::vector<Signal>& basis,
                            const LatticeSubgroup& h, const HaarSystem& haar,
                            double tol) {
  for (const auto& b : basis) {
    const double scale = norm(b, haar);
    if (scale == 0.0) continue;
    for (const auto& el : h.elements) {
      const Signal shifted = translate(b, el);
      const Signal proj = project_onto_span(basis, haar, shifted);
      double acc = 0.0;
      for (std::size_t i = 0; i < shifted.values.size(); ++i) {
        acc += std::norm(shifted.values[i] - proj.values[i]);
      }
      const double residual = std::sqrt(haar.w_G.to_double() * acc);
      if (residual > tol * scale) return false;
    }
  }
  return true;
}

}  // namespace lcasis::oracle
