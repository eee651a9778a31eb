#include "signtail/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "signtail/norms.hpp"

namespace signtail {

void NoiseSpec::validate(std::size_t dim_hint) const {
  if (!(p > 1.0 && p <= 2.0))
    throw std::invalid_argument("NoiseSpec: p must be in (1, 2]");
  switch (family) {
    case NoiseFamily::gaussian:
      break;
    case NoiseFamily::alpha_stable:
      if (!(family_param > p))
        throw std::invalid_argument("NoiseSpec: alpha_stable requires alpha > p");
      if (!(family_param <= 2.0))
        throw std::invalid_argument("NoiseSpec: alpha_stable requires alpha <= 2");
      break;
    case NoiseFamily::pareto_symmetric:
      if (!(family_param > p))
        throw std::invalid_argument("NoiseSpec: pareto_symmetric requires alpha > p");
      break;
    case NoiseFamily::student_t:
      if (!(family_param > p))
        throw std::invalid_argument("NoiseSpec: student_t requires nu > p");
      break;
  }
  for (std::size_t i = 0; i < sigma0.size(); ++i)
    if (sigma0[i] < 0.0) throw std::invalid_argument("NoiseSpec: sigma0 must be >= 0");
  for (std::size_t i = 0; i < sigma1.size(); ++i)
    if (sigma1[i] < 0.0) throw std::invalid_argument("NoiseSpec: sigma1 must be >= 0");
  if (dim_hint != 0) {
    if (!sigma0.empty() && sigma0.size() != dim_hint)
      throw std::invalid_argument("NoiseSpec: sigma0 dimension mismatch");
    if (!sigma1.empty() && sigma1.size() != dim_hint)
      throw std::invalid_argument("NoiseSpec: sigma1 dimension mismatch");
  }
  if (v0_scale < 0.0 || v1_op < 0.0)
    throw std::invalid_argument("NoiseSpec: matrix-mode scales must be >= 0");
}

std::vector<DenseVector> noisy_gradient_batch(const DenseVector& grad,
                                              const NoiseSpec& spec, long batch,
                                              RngStream& rng) {
  if (batch < 1) throw std::invalid_argument("noisy_gradient_batch: batch must be >= 1");
  spec.validate(grad.size());
  const std::size_t d = grad.size();
  const bool s0 = !spec.sigma0.empty();
  const bool s1 = !spec.sigma1.empty();

  // Fully noiseless specs return exact copies without consuming randomness.
  bool noiseless = true;
  for (std::size_t i = 0; i < d && noiseless; ++i) {
    const double a = s0 ? spec.sigma0[i] : 0.0;
    const double b = s1 ? spec.sigma1[i] : 0.0;
    if (a != 0.0 || b != 0.0) noiseless = false;
  }

  std::vector<DenseVector> out;
  out.reserve(static_cast<std::size_t>(batch));
  if (noiseless) {
    for (long b = 0; b < batch; ++b) out.push_back(grad);
    return out;
  }

  const double u = unit_scale_factor(spec.family, spec.family_param, spec.p);
  for (long b = 0; b < batch; ++b) {
    DenseVector g(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double scale = (s0 ? spec.sigma0[i] : 0.0) +
                           (s1 ? spec.sigma1[i] : 0.0) * std::fabs(grad[i]);
      if (scale == 0.0) {
        g[i] = grad[i];
      } else {
        const double xi = u * sample_family(spec.family, spec.family_param, rng);
        g[i] = grad[i] + scale * xi;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<DenseMatrix> noisy_gradient_batch_matrix(const DenseMatrix& grad,
                                                     const NoiseSpec& spec, long batch,
                                                     RngStream& rng) {
  if (batch < 1)
    throw std::invalid_argument("noisy_gradient_batch_matrix: batch must be >= 1");
  if (!spec.has_matrix_mode)
    throw std::invalid_argument("noisy_gradient_batch_matrix: matrix_mode missing");
  spec.validate();

  const std::size_t m = grad.rows(), n = grad.cols();
  std::vector<DenseMatrix> out;
  out.reserve(static_cast<std::size_t>(batch));

  if (spec.v0_scale == 0.0 && spec.v1_op == 0.0) {
    for (long b = 0; b < batch; ++b) out.push_back(grad);
    return out;
  }

  // Entry calibration: E||Xi||_F^p <= sum_ij E|Xi_ij|^p = m n E|entry|^p
  // (subadditivity of x^(p/2)); choose the entry scale so the right side is
  // m^(p/2) / 2.
  const double mp = family_abs_moment(spec.family, spec.family_param, spec.p);
  const double entry_scale =
      std::pow(std::pow(static_cast<double>(m), 0.5 * spec.p) /
                   (2.0 * static_cast<double>(m * n) * mp),
               1.0 / spec.p);

  const double grad_nuclear = (spec.v1_op > 0.0) ? norm_nuclear(grad) : 0.0;
  const double scale =
      spec.v0_scale + spec.v1_op * grad_nuclear / static_cast<double>(m);

  for (long b = 0; b < batch; ++b) {
    DenseMatrix g(m, n);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double xi =
          entry_scale * sample_family(spec.family, spec.family_param, rng);
      g.data()[i] = grad.data()[i] + scale * xi;
    }
    out.push_back(std::move(g));
  }
  return out;
}

DenseVector batch_mean(const std::vector<DenseVector>& batch) {
  if (batch.empty()) throw std::invalid_argument("batch_mean: empty batch");
  DenseVector m(batch[0].size(), 0.0);
  for (const DenseVector& g : batch) {
    require_same_size(m, g, "batch_mean");
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += g[i];
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] *= inv;
  return m;
}

DenseMatrix batch_mean(const std::vector<DenseMatrix>& batch) {
  if (batch.empty()) throw std::invalid_argument("batch_mean: empty batch");
  DenseMatrix m(batch[0].rows(), batch[0].cols(), 0.0);
  for (const DenseMatrix& g : batch) {
    require_same_shape(m, g, "batch_mean");
    for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] += g.data()[i];
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] *= inv;
  return m;
}

double estimate_tail_index(const std::vector<double>& samples,
                           std::size_t block_count) {
  const std::size_t n = samples.size();
  if (n < 1000)
    throw std::invalid_argument("estimate_tail_index: need at least 1000 samples");

  std::size_t bc = block_count;
  std::size_t usable = n;
  if (bc == 0) {
    bc = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    usable = bc * (n / bc);  // default mode trims the remainder
  } else if (n % bc != 0) {
    throw std::invalid_argument(
        "estimate_tail_index: sample count must be divisible by block_count");
  }
  const std::size_t k = usable / bc;  // block size

  bool any_nonzero = false;
  for (std::size_t i = 0; i < usable; ++i)
    if (samples[i] != 0.0) {
      any_nonzero = true;
      break;
    }
  if (!any_nonzero)
    throw std::invalid_argument("estimate_tail_index: degenerate all-zero sample");

  // log|0| guard: continuous families are a.s. nonzero, so a tiny floor only
  // protects against pathological input without moving real estimates.
  const auto safe_log_abs = [](double x) {
    const double a = std::fabs(x);
    return std::log(a > 0.0 ? a : 1e-300);
  };

  double mean_log_block = 0.0;
  for (std::size_t b = 0; b < bc; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += samples[b * k + i];
    mean_log_block += safe_log_abs(s);
  }
  mean_log_block /= static_cast<double>(bc);

  double mean_log_x = 0.0;
  for (std::size_t i = 0; i < usable; ++i) mean_log_x += safe_log_abs(samples[i]);
  mean_log_x /= static_cast<double>(usable);

  const double inv_alpha =
      (mean_log_block - mean_log_x) / std::log(static_cast<double>(k));
  if (!(inv_alpha > 0.5)) return 2.0;  // clamp to the (0, 2] range
  return 1.0 / inv_alpha;
}

double effective_sigma_scale(const NoiseSpec& spec) {
  return std::pow(0.5, 1.0 / spec.p);
}

MatrixNoiseConstants effective_matrix_constants(const NoiseSpec& spec,
                                                std::size_t rows, std::size_t cols,
                                                int mc_trials, std::uint64_t seed) {
  if (!spec.has_matrix_mode)
    throw std::invalid_argument("effective_matrix_constants: matrix_mode missing");
  spec.validate();
  const double m = static_cast<double>(rows);
  const double mp = family_abs_moment(spec.family, spec.family_param, spec.p);
  const double entry_scale = std::pow(
      std::pow(m, 0.5 * spec.p) / (2.0 * static_cast<double>(rows * cols) * mp),
      1.0 / spec.p);

  MatrixNoiseConstants out;
  if (spec.family == NoiseFamily::gaussian && spec.p == 2.0) {
    // Exact: E||Xi||_F^2 = m n * entry_scale^2 = m / 2.
    out.xi_frob_moment = static_cast<double>(rows * cols) * entry_scale * entry_scale;
  } else {
    RngStream rng(seed, 0x9a75);
    double acc = 0.0;
    for (int t = 0; t < mc_trials; ++t) {
      double ss = 0.0;
      for (std::size_t i = 0; i < rows * cols; ++i) {
        const double xi =
            entry_scale * sample_family(spec.family, spec.family_param, rng);
        ss += xi * xi;
      }
      acc += std::pow(ss, 0.5 * spec.p);
    }
    out.xi_frob_moment = acc / static_cast<double>(mc_trials);
  }
  const double base = std::pow(m, 0.5 * spec.p) * out.xi_frob_moment;
  out.v0_nuclear_eff = std::pow(base, 1.0 / spec.p) * spec.v0_scale;
  out.v1_op_eff = std::pow(base, 1.0 / spec.p) * spec.v1_op / m;
  return out;
}

}  // namespace signtail
