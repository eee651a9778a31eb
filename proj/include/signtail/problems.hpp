#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "signtail/dense.hpp"
#include "signtail/dist.hpp"
#include "signtail/rng.hpp"

namespace signtail {

/** One stochastic-gradient sample at x (problems with intrinsic sampling
 *  noise, e.g. the Bernoulli regression, provide this). */
using StochasticGradFn = std::function<DenseVector(const DenseVector& x, RngStream&)>;

/**
 * Differentiable objective on vectors with exact gradient and known
 * coordinate-wise smoothness constants: curvature along coordinate i is
 * bounded by l0[i] + l1[i] * |grad_i f|.
 */
struct VectorProblem {
  std::string name;
  std::size_t dim = 0;
  std::function<double(const DenseVector&)> eval_f;
  std::function<DenseVector(const DenseVector&)> eval_grad;
  DenseVector l0, l1;
  double f_star = 0.0;
  std::optional<DenseVector> x_star;
};

/**
 * Differentiable objective on m-by-n matrices with gradient-Lipschitz
 * structure measured in nuclear/operator norms:
 * ||grad f(X') - grad f(X)||_* <= (L0_nuclear + L1_op ||grad f(X)||_*) ||X' - X||_op.
 */
struct MatrixProblem {
  std::string name;
  std::size_t rows = 0, cols = 0;
  std::function<double(const DenseMatrix&)> eval_f;
  std::function<DenseMatrix(const DenseMatrix&)> eval_grad;
  double L0_nuclear = 0.0;
  double L1_op = 0.0;
  double f_star = 0.0;
  std::optional<DenseMatrix> x_star;
};

/** f(x) = 1/2 sum_i l0_i (x_i - x*_i)^2; the canonical instance whose
 *  quadratic upper bound holds with equality (residual exactly zero). */
VectorProblem make_separable_quadratic(const DenseVector& l0, const DenseVector& x_star);

/**
 * f(x) = sum_i (l0 / l1^2) (cosh(l1 x_i) - 1): separable, with diagonal
 * Hessian l0 cosh(l1 x) that grows affinely with the gradient magnitude
 * |f'| = (l0/l1) sinh(l1 |x|). Satisfies the coordinate-wise generalized
 * smoothness model with constants (2 l0, l1).
 */
VectorProblem make_generalized_smooth(double l0, double l1, std::size_t d);

/**
 * The random-design linear regression with Bernoulli(1/2) masks:
 * per coordinate, f_i(x_i) = 1/2 E[(a x_i - b)^2] with a ~ Bernoulli(1/2)
 * and b = a x*_i + noise. In closed form (dropping the constant term so
 * f_star = 0):   f(x) = sum_i 1/4 (x_i - x*_i)^2,  grad_i = (x_i - x*_i)/2.
 *
 * The returned sampler draws the one-sample stochastic gradient
 * g_i = a (a x_i - b) = a (x_i - x*_i) - a * noise_i, whose deviation from
 * grad f has conditional mean zero and a p-th moment that provably grows
 * with |grad_i f|^p — the canonical example of gradient-proportional noise.
 * xi_family draws are scaled so that E|noise|^p = sigma^p.
 */
std::pair<VectorProblem, StochasticGradFn> make_bernoulli_regression(
    const DenseVector& x_star, double sigma, double p,
    NoiseFamily xi_family = NoiseFamily::gaussian, double xi_family_param = 0.0);

/** f(X) = 1/2 tr((X - X*)^T L (X - X*)) for symmetric PSD L;
 *  grad f = L (X - X*), L0_nuclear = ||L||_*, L1_op = 0. */
MatrixProblem make_matrix_quadratic(const DenseMatrix& l, const DenseMatrix& x_star);

}  // namespace signtail
