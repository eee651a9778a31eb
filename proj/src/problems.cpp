#include "signtail/problems.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "signtail/norms.hpp"
#include "signtail/svd.hpp"

namespace signtail {

VectorProblem make_separable_quadratic(const DenseVector& l0,
                                       const DenseVector& x_star) {
  require_same_size(l0, x_star, "make_separable_quadratic");
  for (std::size_t i = 0; i < l0.size(); ++i)
    if (l0[i] < 0.0)
      throw std::invalid_argument("make_separable_quadratic: l0 must be >= 0");

  VectorProblem p;
  p.name = "quadratic";
  p.dim = l0.size();
  p.l0 = l0;
  p.l1 = DenseVector::zeros(l0.size());
  p.f_star = 0.0;
  p.x_star = x_star;
  p.eval_f = [l0, x_star](const DenseVector& x) {
    require_same_size(x, x_star, "quadratic.eval_f");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - x_star[i];
      s += 0.5 * l0[i] * d * d;
    }
    return s;
  };
  p.eval_grad = [l0, x_star](const DenseVector& x) {
    require_same_size(x, x_star, "quadratic.eval_grad");
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = l0[i] * (x[i] - x_star[i]);
    return g;
  };
  return p;
}

VectorProblem make_generalized_smooth(double l0, double l1, std::size_t d) {
  if (!(l0 > 0.0) || !(l1 > 0.0))
    throw std::invalid_argument("make_generalized_smooth: l0, l1 must be > 0");

  VectorProblem p;
  p.name = "cosh";
  p.dim = d;
  // Curvature l0 cosh(l1 x) is bounded by 2 l0 + l1 |f'| (since
  // cosh <= 1 + sinh on x >= 0), so the published constants are (2 l0, l1).
  p.l0 = DenseVector::constant(d, 2.0 * l0);
  p.l1 = DenseVector::constant(d, l1);
  p.f_star = 0.0;
  p.x_star = DenseVector::zeros(d);
  const double amp = l0 / (l1 * l1);
  p.eval_f = [amp, l1, d](const DenseVector& x) {
    if (x.size() != d) throw std::invalid_argument("cosh.eval_f: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += amp * (std::cosh(l1 * x[i]) - 1.0);
    return s;
  };
  p.eval_grad = [amp, l1, d](const DenseVector& x) {
    if (x.size() != d) throw std::invalid_argument("cosh.eval_grad: dimension mismatch");
    DenseVector g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = amp * l1 * std::sinh(l1 * x[i]);
    return g;
  };
  return p;
}

std::pair<VectorProblem, StochasticGradFn> make_bernoulli_regression(
    const DenseVector& x_star, double sigma, double p, NoiseFamily xi_family,
    double xi_family_param) {
  if (!(p > 1.0 && p <= 2.0))
    throw std::invalid_argument("make_bernoulli_regression: p must be in (1, 2]");
  if (sigma < 0.0)
    throw std::invalid_argument("make_bernoulli_regression: sigma must be >= 0");

  VectorProblem prob;
  prob.name = "bernoulli";
  prob.dim = x_star.size();
  // Closed-form objective: E[a^2] = E[a] = 1/2, so
  //   1/2 E[(a x - b)^2] = 1/4 (x - x*)^2 + const;
  // the constant (noise variance term) is dropped, giving f_star = 0.
  prob.f_star = 0.0;
  prob.x_star = x_star;
  // Curvature is exactly 1/2 per coordinate (classical smoothness).
  prob.l0 = DenseVector::constant(x_star.size(), 0.5);
  prob.l1 = DenseVector::zeros(x_star.size());
  prob.eval_f = [x_star](const DenseVector& x) {
    require_same_size(x, x_star, "bernoulli.eval_f");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - x_star[i];
      s += 0.25 * d * d;
    }
    return s;
  };
  prob.eval_grad = [x_star](const DenseVector& x) {
    require_same_size(x, x_star, "bernoulli.eval_grad");
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = 0.5 * (x[i] - x_star[i]);
    return g;
  };

  // Scale so that E|noise|^p = sigma^p exactly.
  const double xi_scale =
      (sigma == 0.0)
          ? 0.0
          : sigma / std::pow(family_abs_moment(xi_family, xi_family_param, p), 1.0 / p);

  StochasticGradFn sampler = [x_star, xi_scale, xi_family, xi_family_param](
                                 const DenseVector& x, RngStream& rng) {
    require_same_size(x, x_star, "bernoulli.sampler");
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double a = (rng.next_u64() & 1ULL) ? 1.0 : 0.0;  // Bernoulli(1/2)
      const double xi =
          (xi_scale == 0.0)
              ? 0.0
              : xi_scale * sample_family(xi_family, xi_family_param, rng);
      const double b = a * x_star[i] + xi;
      g[i] = a * (a * x[i] - b);
    }
    return g;
  };

  return {std::move(prob), std::move(sampler)};
}

MatrixProblem make_matrix_quadratic(const DenseMatrix& l, const DenseMatrix& x_star) {
  if (l.rows() != l.cols())
    throw std::invalid_argument("make_matrix_quadratic: L must be square");
  if (l.rows() != x_star.rows())
    throw std::invalid_argument("make_matrix_quadratic: rows(L) must match rows(X*)");
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = i + 1; j < l.cols(); ++j)
      if (std::fabs(l(i, j) - l(j, i)) >
          1e-12 * (1.0 + std::fabs(l(i, j)) + std::fabs(l(j, i))))
        throw std::invalid_argument("make_matrix_quadratic: L must be symmetric");
  // PSD check via eigenvalues of the symmetric part (SVD of a symmetric
  // matrix gives |eigenvalues|; verify L + tiny has a Cholesky instead).
  {
    DenseMatrix jittered = l;
    double tr = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i) tr += l(i, i);
    const double jitter = 1e-12 * (tr > 0.0 ? tr : 1.0);
    for (std::size_t i = 0; i < l.rows(); ++i) jittered(i, i) += jitter;
    try {
      (void)cholesky(jittered);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("make_matrix_quadratic: L must be PSD");
    }
  }

  MatrixProblem p;
  p.name = "matquad";
  p.rows = x_star.rows();
  p.cols = x_star.cols();
  p.L0_nuclear = norm_nuclear(l);
  p.L1_op = 0.0;
  p.f_star = 0.0;
  p.x_star = x_star;
  p.eval_f = [l, x_star](const DenseMatrix& x) {
    require_same_shape(x, x_star, "matquad.eval_f");
    const DenseMatrix e = x - x_star;
    return 0.5 * frob_inner(e, matmul(l, e));
  };
  p.eval_grad = [l, x_star](const DenseMatrix& x) {
    require_same_shape(x, x_star, "matquad.eval_grad");
    return matmul(l, x - x_star);
  };
  return p;
}

}  // namespace signtail
