#pragma once

#include "signtail/dense.hpp"

namespace signtail {

/**
 * Thin singular value decomposition X = U diag(s) V^T truncated to the
 * numerical rank r: U is m-by-r and V is n-by-r with orthonormal columns,
 * singular_values holds r strictly positive values in nonincreasing order.
 *
 * Column signs are not canonicalized: (u_k, v_k) -> (-u_k, -v_k) yields the
 * same factorization, and consumers must not rely on a particular choice.
 */
struct SvdFactorization {
  DenseMatrix u;
  DenseVector singular_values;
  DenseMatrix v;
};

/**
 * One-sided Jacobi SVD. Deterministic (fixed cyclic sweep order, no
 * threading), accurate for the dense desk-scale matrices used here
 * (dimensions up to a few hundred). Singular values below
 * max(m, n) * 2^-52 * s_max are treated as rank deficiency and dropped.
 *
 * Guarantees validated by the test suite: U^T U = I and V^T V = I within
 * 1e-10, and || U diag(s) V^T - X ||_F <= 1e-8 * ||X||_F.
 */
SvdFactorization svd(const DenseMatrix& x);

/** Inverse of a symmetric positive-definite matrix via Cholesky.
 *  Throws std::invalid_argument if the matrix is not strictly PD
 *  (no silent pseudo-inverse). */
DenseMatrix spd_inverse(const DenseMatrix& l);

/** Cholesky factor C (lower triangular, l = C C^T) of a symmetric
 *  positive-definite matrix; throws std::invalid_argument otherwise. */
DenseMatrix cholesky(const DenseMatrix& l);

}  // namespace signtail
