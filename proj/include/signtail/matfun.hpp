#pragma once

#include "signtail/dense.hpp"

namespace signtail {

/** Entrywise sign with sign(0) = 0; every output entry is in {-1, 0, +1}. */
DenseVector sign_vec(const DenseVector& x);

/**
 * Matrix sign operator msign(X) = U V^T from the SVD of X, using singular
 * triples with sigma > rank_tol * sigma_max. The result is the closest
 * partial isometry to X: all its nonzero singular values equal 1, it is
 * invariant to positive rescaling of X, and <X, msign(X)> equals the
 * nuclear norm of X. The all-zero matrix maps to the all-zero matrix (the
 * only continuous-in-scale choice for the degenerate case).
 */
DenseMatrix msign(const DenseMatrix& x, double rank_tol = 1e-12);

/**
 * Quintic Newton-Schulz approximation to msign. Starting from
 * Y = X / ||X||_F, iterates Y <- a Y + b (Y Y^T) Y + c (Y Y^T)^2 Y for q
 * rounds with fixed coefficients (a, b, c) = (3.4445, -4.7750, 2.0315).
 * q = 0 returns the normalized input unchanged; the zero matrix is rejected.
 *
 * Accuracy at the default q = 5 depends on conditioning: for inputs with
 * condition number <= 10 every output singular value lands in [0.65, 1.15]
 * (the iteration's oscillation band), while nearly rank-deficient inputs
 * keep small singular values small — msign and newton_schulz then disagree
 * in operator norm by up to about 1. See the unit tests for the measured
 * behavior.
 */
DenseMatrix newton_schulz(const DenseMatrix& x, int q = 5);

/** Matrix absolute value |X| = (X X^T)^(1/2): symmetric PSD with
 *  eigenvalues equal to the singular values of X. */
DenseMatrix matrix_abs(const DenseMatrix& x);

}  // namespace signtail
