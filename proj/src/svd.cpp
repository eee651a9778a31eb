#include "signtail/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace signtail {

namespace {

// Orthogonality threshold for a column pair, relative to the product of the
// column norms. 1e-15 leaves U^T U departures around machine precision,
// comfortably inside the 1e-10 contract.
constexpr double kPairTol = 1e-15;
constexpr int kMaxSweeps = 64;

}  // namespace

SvdFactorization svd(const DenseMatrix& x) {
  // Work on a tall copy (rows >= cols) so the one-sided iteration
  // orthogonalizes the smaller column set; swap U and V on return.
  const bool transposed = x.rows() < x.cols();
  const DenseMatrix a0 = transposed ? transpose(x) : x;
  const std::size_t m = a0.rows(), n = a0.cols();

  // Column-major working copies of A and V for contiguous column access.
  std::vector<double> a(m * n), v(n * n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[j * m + i] = a0(i, j);
  for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* ap = &a[p * m];
        double* aq = &a[q * m];
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += ap[i] * ap[i];
          aqq += aq[i] * aq[i];
          apq += ap[i] * aq[i];
        }
        if (apq * apq <= kPairTol * kPairTol * app * aqq) continue;

        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double tp = ap[i], tq = aq[i];
          ap[i] = c * tp - s * tq;
          aq[i] = s * tp + c * tq;
        }
        double* vp = &v[p * n];
        double* vq = &v[q * n];
        for (std::size_t i = 0; i < n; ++i) {
          const double tp = vp[i], tq = vq[i];
          vp[i] = c * tp - s * tq;
          vq[i] = s * tp + c * tq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  // Column norms are the singular values; sort nonincreasing (ties by
  // original index, so the result is deterministic).
  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a[j * m + i] * a[j * m + i];
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  const double smax = sigma.empty() ? 0.0 : sigma[order[0]];
  const double rank_tol =
      static_cast<double>(std::max(m, n)) * 0x1p-52 * smax;
  std::size_t r = 0;
  while (r < n && sigma[order[r]] > rank_tol) ++r;

  SvdFactorization f;
  f.u = DenseMatrix(m, r);
  f.v = DenseMatrix(n, r);
  f.singular_values = DenseVector(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t j = order[k];
    const double s = sigma[j];
    f.singular_values[k] = s;
    for (std::size_t i = 0; i < m; ++i) f.u(i, k) = a[j * m + i] / s;
    for (std::size_t i = 0; i < n; ++i) f.v(i, k) = v[j * n + i];
  }

  if (transposed) std::swap(f.u, f.v);
  return f;
}

DenseMatrix cholesky(const DenseMatrix& l) {
  if (l.rows() != l.cols()) throw std::invalid_argument("cholesky: matrix must be square");
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(l(i, j) - l(j, i)) >
          1e-12 * (1.0 + std::fabs(l(i, j)) + std::fabs(l(j, i))))
        throw std::invalid_argument("cholesky: matrix is not symmetric");

  DenseMatrix c(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = l(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= c(i, k) * c(j, k);
      if (i == j) {
        if (s <= 0.0 || !std::isfinite(s))
          throw std::invalid_argument("cholesky: matrix is not positive definite");
        c(i, i) = std::sqrt(s);
      } else {
        c(i, j) = s / c(j, j);
      }
    }
  }
  return c;
}

DenseMatrix spd_inverse(const DenseMatrix& l) {
  const DenseMatrix c = cholesky(l);
  const std::size_t n = l.rows();
  // Solve L X = I column by column via the factor: C C^T X = I.
  DenseMatrix inv(n, n, 0.0);
  std::vector<double> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    // forward solve C y = e_col
    for (std::size_t i = 0; i < n; ++i) {
      double s = (i == col) ? 1.0 : 0.0;
      for (std::size_t k = 0; k < i; ++k) s -= c(i, k) * y[k];
      y[i] = s / c(i, i);
    }
    // back solve C^T x = y
    for (std::size_t ii = n; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t k = ii + 1; k < n; ++k) s -= c(k, ii) * inv(k, col);
      inv(ii, col) = s / c(ii, ii);
    }
  }
  // Symmetrize against roundoff.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = inv(j, i) = avg;
    }
  return inv;
}

}  // namespace signtail
