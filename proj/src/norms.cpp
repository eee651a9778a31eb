#include "signtail/norms.hpp"

#include <cmath>
#include <limits>

#include "signtail/svd.hpp"

namespace signtail {

namespace {

// Shared flat-array kernels so that vector and matrix variants of the same
// norm produce bit-identical results on identical flat data.

double l1_flat(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double l2_flat(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

double linf_flat(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::fabs(x[i]));
  return s;
}

double lp_flat(const double* x, std::size_t n, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm_lp: p must be >= 1");
  if (std::isinf(p)) return linf_flat(x, n);
  const double m = linf_flat(x, n);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(x[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace

// ---- vector norms ----

double norm_l1(const DenseVector& x) { return l1_flat(x.data(), x.size()); }
double norm_l2(const DenseVector& x) { return l2_flat(x.data(), x.size()); }
double norm_linf(const DenseVector& x) { return linf_flat(x.data(), x.size()); }
double norm_lp(const DenseVector& x, double p) { return lp_flat(x.data(), x.size(), p); }

double norm_weighted(const DenseVector& x, const DenseVector& weights) {
  require_same_size(x, weights, "norm_weighted");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (weights[i] < 0.0)
      throw std::invalid_argument("norm_weighted: negative weight rejected");
    s += weights[i] * x[i] * x[i];
  }
  return std::sqrt(std::max(s, 0.0));
}

// ---- matrix norms ----

double norm_frobenius(const DenseMatrix& x) { return l2_flat(x.data(), x.size()); }
double norm_entrywise_l1(const DenseMatrix& x) { return l1_flat(x.data(), x.size()); }

double norm_nuclear(const DenseMatrix& x) {
  const SvdFactorization f = svd(x);
  double s = 0.0;
  for (std::size_t i = 0; i < f.singular_values.size(); ++i) s += f.singular_values[i];
  return s;
}

double norm_operator(const DenseMatrix& x) {
  const SvdFactorization f = svd(x);
  return f.singular_values.empty() ? 0.0 : f.singular_values[0];
}

double norm_schatten(const DenseMatrix& x, double q) {
  const SvdFactorization f = svd(x);
  return lp_flat(f.singular_values.data(), f.singular_values.size(), q);
}

double norm_weighted(const DenseMatrix& x, const DenseMatrix& l) {
  if (l.rows() != l.cols() || l.rows() != x.rows())
    throw std::invalid_argument("norm_weighted: L must be square with rows(L) == rows(X)");
  // PD check (throws on indefinite or singular L; no pseudo-inverse semantics).
  (void)cholesky(l);
  double s = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t a = 0; a < l.rows(); ++a) {
      double lx = 0.0;
      for (std::size_t b = 0; b < l.cols(); ++b) lx += l(a, b) * x(b, j);
      s += x(a, j) * lx;
    }
  }
  return std::sqrt(std::max(s, 0.0));
}

// ---- string dispatch ----

double norm(const DenseVector& x, const std::string& which, double p) {
  if (which == "l1") return norm_l1(x);
  if (which == "l2") return norm_l2(x);
  if (which == "linf") return norm_linf(x);
  if (which == "lp") return norm_lp(x, p);
  throw std::invalid_argument("norm(vector): unknown norm '" + which + "'");
}

double norm(const DenseMatrix& x, const std::string& which, double p) {
  if (which == "nuclear") return norm_nuclear(x);
  if (which == "operator") return norm_operator(x);
  if (which == "frobenius") return norm_frobenius(x);
  if (which == "l1") return norm_entrywise_l1(x);
  if (which == "lp") return norm_schatten(x, p);
  throw std::invalid_argument("norm(matrix): unknown norm '" + which + "'");
}

// ---- density functions ----

double density_phi(const DenseVector& v, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("density_phi: q must be >= 1");
  const double l1 = norm_l1(v);
  if (l1 == 0.0) throw std::invalid_argument("density_phi: zero vector rejected");
  return l1 / norm_lp(v, q);
}

double density_psi(const DenseMatrix& y, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("density_psi: q must be >= 1");
  const SvdFactorization f = svd(y);
  if (f.singular_values.empty())
    throw std::invalid_argument("density_psi: zero matrix rejected");
  const double* s = f.singular_values.data();
  const std::size_t r = f.singular_values.size();
  return l1_flat(s, r) / lp_flat(s, r, q);
}

}  // namespace signtail
