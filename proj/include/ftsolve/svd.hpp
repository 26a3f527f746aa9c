#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "ftsolve/dense.hpp"
#include "ftsolve/errors.hpp"

namespace ftsolve {

/// Thin singular value decomposition A = U * diag(sigma) * V^T with
/// singular values sorted in descending order. U is m-by-n with
/// orthonormal columns (columns belonging to zero singular values are
/// left as zero vectors), V is n-by-n orthogonal.
struct SvdResult {
  DenseMatrix u;
  std::vector<double> sigma;
  DenseMatrix v;
};

/// One-sided Jacobi SVD for small dense matrices (m >= n). The matrices
/// this library decomposes are projected least-squares factors of Krylov
/// dimension, so n stays in the tens; cubic cost per call is irrelevant
/// next to a single sparse matrix-vector product.
inline SvdResult svd(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw DimensionError("svd: requires rows >= cols");

  // Work on columns of W; plane rotations accumulate into V.
  DenseMatrix w = a;
  DenseMatrix v = DenseMatrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += w(i, p) * w(i, p);
          beta += w(i, q) * w(i, q);
          gamma += w(i, p) * w(i, q);
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = w(i, p);
          const double wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w(i, j) * w(i, j);
    sigma[j] = std::sqrt(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SvdResult out;
  out.u = DenseMatrix(m, n);
  out.v = DenseMatrix(n, n);
  out.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.sigma[j] = sigma[src];
    if (sigma[src] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) out.u(i, j) = w(i, src) / sigma[src];
    }
    for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, src);
  }
  return out;
}

/// Minimum-norm least-squares solution of min_y ||A y - rhs|| keeping only
/// singular values >= tau * sigma_max (and > 0).
struct TruncatedSolve {
  std::vector<double> y;
  std::size_t rank = 0;
  double sigma_max = 0.0;
  double sigma_min_kept = 0.0;
};

inline TruncatedSolve svd_min_norm_solve(const DenseMatrix& a,
                                         std::span<const double> rhs,
                                         double tau) {
  if (rhs.size() != a.rows())
    throw DimensionError("svd_min_norm_solve: rhs length mismatch");
  const SvdResult f = svd(a);
  const std::size_t n = a.cols();
  TruncatedSolve out;
  out.y.assign(n, 0.0);
  out.sigma_max = f.sigma.empty() ? 0.0 : f.sigma.front();
  const double cutoff = tau * out.sigma_max;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = f.sigma[j];
    if (s <= 0.0 || s < cutoff) continue;
    double uz = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) uz += f.u(i, j) * rhs[i];
    const double coef = uz / s;
    for (std::size_t i = 0; i < n; ++i) out.y[i] += coef * f.v(i, j);
    ++out.rank;
    out.sigma_min_kept = s;
  }
  return out;
}

}  // namespace ftsolve
