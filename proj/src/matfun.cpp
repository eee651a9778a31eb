#include "signtail/matfun.hpp"

#include <cmath>

#include "signtail/norms.hpp"
#include "signtail/svd.hpp"

namespace signtail {

DenseVector sign_vec(const DenseVector& x) {
  DenseVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = (x[i] > 0.0) ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
  }
  return r;
}

DenseMatrix msign(const DenseMatrix& x, double rank_tol) {
  bool all_zero = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.data()[i] != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return DenseMatrix::zeros(x.rows(), x.cols());

  const SvdFactorization f = svd(x);
  const double smax = f.singular_values.empty() ? 0.0 : f.singular_values[0];
  DenseMatrix r(x.rows(), x.cols(), 0.0);
  for (std::size_t k = 0; k < f.singular_values.size(); ++k) {
    if (f.singular_values[k] <= rank_tol * smax) break;  // values are sorted
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const double uik = f.u(i, k);
      if (uik == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) += uik * f.v(j, k);
    }
  }
  return r;
}

DenseMatrix newton_schulz(const DenseMatrix& x, int q) {
  if (q < 0) throw std::invalid_argument("newton_schulz: q must be >= 0");
  const double fro = norm_frobenius(x);
  if (fro == 0.0) throw std::invalid_argument("newton_schulz: zero input rejected");

  constexpr double a = 3.4445, b = -4.7750, c = 2.0315;

  // Work with rows <= cols so Y Y^T is the small Gram matrix.
  const bool transposed = x.rows() > x.cols();
  DenseMatrix y = transposed ? transpose(x) : x;
  y = (1.0 / fro) * y;

  for (int it = 0; it < q; ++it) {
    const DenseMatrix g = matmul(y, transpose(y));       // m x m
    const DenseMatrix g2 = matmul(g, g);                 // m x m
    DenseMatrix poly = (b * g) + (c * g2);               // b G + c G^2
    DenseMatrix next = (a * y) + matmul(poly, y);        // a Y + (bG + cG^2) Y
    y = next;
  }
  return transposed ? transpose(y) : y;
}

DenseMatrix matrix_abs(const DenseMatrix& x) {
  const SvdFactorization f = svd(x);
  const std::size_t m = x.rows();
  DenseMatrix r(m, m, 0.0);
  for (std::size_t k = 0; k < f.singular_values.size(); ++k) {
    const double s = f.singular_values[k];
    for (std::size_t i = 0; i < m; ++i) {
      const double su = s * f.u(i, k);
      for (std::size_t j = 0; j < m; ++j) r(i, j) += su * f.u(j, k);
    }
  }
  // Exact symmetry against roundoff.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double avg = 0.5 * (r(i, j) + r(j, i));
      r(i, j) = r(j, i) = avg;
    }
  return r;
}

}  // namespace signtail
