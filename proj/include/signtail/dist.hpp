#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signtail/rng.hpp"

namespace signtail {

/**
 * Symmetric heavy-tailed (and Gaussian) sample families. family_param is
 * the stability index alpha for alpha_stable and pareto_symmetric, the
 * degrees of freedom nu for student_t, and ignored for gaussian.
 */
enum class NoiseFamily { gaussian, alpha_stable, pareto_symmetric, student_t };

std::string family_name(NoiseFamily f);
NoiseFamily family_from_name(const std::string& name);

/** One raw (unit-parameter) draw from the family. All draws are symmetric
 *  about zero; pareto_symmetric is a fair sign times Pareto(alpha, 1), so
 *  symmetry itself provides the mean-zero centering. */
double sample_family(NoiseFamily f, double family_param, RngStream& rng);

/**
 * Symmetric alpha-stable sample, Chambers-Mallows-Stuck construction.
 * alpha in (0, 2]; at alpha = 2 the formula degenerates smoothly to a
 * Gaussian with variance 2 * scale^2, and at alpha = 1 to scale * tan(U).
 */
double sample_alpha_stable(double alpha, double scale, RngStream& rng);
std::vector<double> sample_alpha_stable(double alpha, double scale, std::size_t n,
                                        RngStream& rng);

/**
 * Closed-form absolute moment E|X|^q of the raw draw:
 *   gaussian:          2^(q/2) Gamma((q+1)/2) / sqrt(pi)
 *   alpha_stable:      2^q Gamma((1+q)/2) Gamma(1-q/alpha) /
 *                      (Gamma(1-q/2) sqrt(pi)), 0 < q < alpha < 2;
 *                      alpha = 2 routes to the Gaussian form with variance 2
 *   pareto_symmetric:  alpha / (alpha - q), 0 < q < alpha
 *   student_t:         nu^(q/2) Gamma((q+1)/2) Gamma((nu-q)/2) /
 *                      (sqrt(pi) Gamma(nu/2)), 0 < q < nu
 * Throws std::domain_error when the moment is infinite or undefined.
 */
double family_abs_moment(NoiseFamily f, double family_param, double q);

/** Scale u such that E|u * raw|^p = 1/2 exactly (from the closed forms). */
double unit_scale_factor(NoiseFamily f, double family_param, double p);

}  // namespace signtail
