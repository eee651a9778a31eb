#include "signtail/dist.hpp"

#include <cmath>
#include <stdexcept>

namespace signtail {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

/** Gamma(shape, 1) via Marsaglia-Tsang squeeze; the shape < 1 boost uses
 *  Gamma(a) = Gamma(a+1) * U^(1/a). Deterministic given the stream. */
double sample_gamma(double shape, RngStream& rng) {
  if (shape < 1.0) {
    const double u = rng.uniform01();
    return sample_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double gaussian_abs_moment(double q) {
  // E|N(0,1)|^q = 2^(q/2) Gamma((q+1)/2) / sqrt(pi)
  return std::exp(0.5 * q * std::log(2.0) + std::lgamma(0.5 * (q + 1.0))) /
         std::sqrt(kPi);
}

}  // namespace

std::string family_name(NoiseFamily f) {
  switch (f) {
    case NoiseFamily::gaussian: return "gaussian";
    case NoiseFamily::alpha_stable: return "alpha_stable";
    case NoiseFamily::pareto_symmetric: return "pareto_symmetric";
    case NoiseFamily::student_t: return "student_t";
  }
  throw std::logic_error("family_name: unreachable");
}

NoiseFamily family_from_name(const std::string& name) {
  if (name == "gaussian") return NoiseFamily::gaussian;
  if (name == "alpha_stable") return NoiseFamily::alpha_stable;
  if (name == "pareto_symmetric") return NoiseFamily::pareto_symmetric;
  if (name == "student_t") return NoiseFamily::student_t;
  throw std::invalid_argument("unknown noise family '" + name + "'");
}

double sample_alpha_stable(double alpha, double scale, RngStream& rng) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("sample_alpha_stable: alpha must be in (0, 2]");
  if (!(scale > 0.0)) throw std::invalid_argument("sample_alpha_stable: scale must be > 0");

  const double u = kPi * (rng.uniform01() - 0.5);  // Uniform(-pi/2, pi/2)
  if (alpha == 1.0) return scale * std::tan(u);
  const double w = rng.exponential();
  const double x = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
                   std::pow(std::cos(u - alpha * u) / w, (1.0 - alpha) / alpha);
  return scale * x;
}

std::vector<double> sample_alpha_stable(double alpha, double scale, std::size_t n,
                                        RngStream& rng) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sample_alpha_stable(alpha, scale, rng);
  return out;
}

double sample_family(NoiseFamily f, double family_param, RngStream& rng) {
  switch (f) {
    case NoiseFamily::gaussian:
      return rng.gaussian();
    case NoiseFamily::alpha_stable:
      return sample_alpha_stable(family_param, 1.0, rng);
    case NoiseFamily::pareto_symmetric: {
      if (!(family_param > 1.0))
        throw std::invalid_argument("pareto_symmetric: alpha must be > 1");
      const double s = rng.rademacher();
      const double u = rng.uniform01();
      return s * std::pow(u, -1.0 / family_param);  // sign * Pareto(alpha, 1)
    }
    case NoiseFamily::student_t: {
      const double nu = family_param;
      if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be > 0");
      const double z = rng.gaussian();
      const double chi2 = 2.0 * sample_gamma(0.5 * nu, rng);
      return z / std::sqrt(chi2 / nu);
    }
  }
  throw std::logic_error("sample_family: unreachable");
}

double family_abs_moment(NoiseFamily f, double family_param, double q) {
  if (!(q > 0.0)) throw std::domain_error("family_abs_moment: q must be > 0");
  switch (f) {
    case NoiseFamily::gaussian:
      return gaussian_abs_moment(q);
    case NoiseFamily::alpha_stable: {
      const double alpha = family_param;
      if (alpha == 2.0) {
        // Variance-2 Gaussian: E|X|^q = 2^(q/2) E|N(0,1)|^q.
        return std::pow(2.0, 0.5 * q) * gaussian_abs_moment(q);
      }
      if (!(q < alpha))
        throw std::domain_error("alpha_stable: E|X|^q infinite for q >= alpha");
      return std::exp(q * std::log(2.0) + std::lgamma(0.5 * (1.0 + q)) +
                      std::lgamma(1.0 - q / alpha) - std::lgamma(1.0 - 0.5 * q)) /
             std::sqrt(kPi);
    }
    case NoiseFamily::pareto_symmetric: {
      const double alpha = family_param;
      if (!(q < alpha))
        throw std::domain_error("pareto_symmetric: E|X|^q infinite for q >= alpha");
      return alpha / (alpha - q);
    }
    case NoiseFamily::student_t: {
      const double nu = family_param;
      if (!(q < nu)) throw std::domain_error("student_t: E|X|^q infinite for q >= nu");
      return std::exp(0.5 * q * std::log(nu) + std::lgamma(0.5 * (q + 1.0)) +
                      std::lgamma(0.5 * (nu - q)) - std::lgamma(0.5 * nu)) /
             std::sqrt(kPi);
    }
  }
  throw std::logic_error("family_abs_moment: unreachable");
}

double unit_scale_factor(NoiseFamily f, double family_param, double p) {
  const double mp = family_abs_moment(f, family_param, p);
  return std::pow(0.5 / mp, 1.0 / p);
}

}  // namespace signtail
