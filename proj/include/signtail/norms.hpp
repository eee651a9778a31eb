#pragma once

#include <string>

#include "signtail/dense.hpp"

namespace signtail {

// ---- vector norms ----

double norm_l1(const DenseVector& x);
double norm_l2(const DenseVector& x);
double norm_linf(const DenseVector& x);
/** General lp norm, p >= 1 (rescaled internally to avoid overflow). */
double norm_lp(const DenseVector& x, double p);
/** Weighted norm sqrt(sum_i w_i x_i^2). Negative weights are rejected. */
double norm_weighted(const DenseVector& x, const DenseVector& weights);

// ---- matrix norms ----

/** Frobenius norm. Bit-identical to norm_l2 of the row-major flattening,
 *  which the normalized-momentum optimizers rely on. */
double norm_frobenius(const DenseMatrix& x);
/** Entrywise l1 norm sum_ij |X_ij| (not the induced 1-norm). */
double norm_entrywise_l1(const DenseMatrix& x);
/** Nuclear norm (sum of singular values). */
double norm_nuclear(const DenseMatrix& x);
/** Operator norm (largest singular value). */
double norm_operator(const DenseMatrix& x);
/** Schatten q-norm (q >= 1; lq norm of the singular value vector). */
double norm_schatten(const DenseMatrix& x, double q);
/** Weighted norm sqrt(tr(X^T L X)). L must be symmetric positive definite;
 *  singular or indefinite L is rejected rather than pseudo-inverted. */
double norm_weighted(const DenseMatrix& x, const DenseMatrix& l);

// ---- string dispatch (CLI / serialization surface) ----

/** which: "l1" | "l2" | "linf" | "lp" (requires p). */
double norm(const DenseVector& x, const std::string& which, double p = 0.0);
/** which: "nuclear" | "operator" | "frobenius" | "l1" (entrywise) | "lp"
 *  (Schatten-q with q = p). */
double norm(const DenseMatrix& x, const std::string& which, double p = 0.0);

// ---- density (norm-ratio) functions ----

/** phi_q(v) = ||v||_1 / ||v||_q, q >= 1 (q may be +infinity).
 *  Measures density: 1 for one-hot vectors, d^(1-1/q) for flat ones.
 *  Zero input rejected. */
double density_phi(const DenseVector& v, double q);

/** psi_q(Y) = ||Y||_S1 / ||Y||_Sq — the spectral analogue of phi_q.
 *  Zero input rejected. */
double density_psi(const DenseMatrix& y, double q);

}  // namespace signtail
