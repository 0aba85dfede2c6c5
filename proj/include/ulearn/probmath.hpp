#pragma once

#include "ulearn/types.hpp"

namespace ulearn {

/// ln Gamma(x) for x > 0. Relative error <= 1e-12 on [1e-3, 1e6]
/// (delegates to std::lgamma, which is accurate to a few ulp there).
double log_gamma(double x);

/// ln Beta(alpha) = sum_i ln Gamma(alpha_i) - ln Gamma(sum_i alpha_i),
/// for a vector of at least two strictly positive parameters.
double log_beta(const Vector& alpha);

/// Log density of Dirichlet(alpha) at a simplex point x:
///   -ln Beta(alpha) + sum_i (alpha_i - 1) ln x_i.
/// x_i = 0 with alpha_i > 1 gives zero density (-inf); x_i = 0 with
/// alpha_i < 1 is a singularity and throws.
LogValue log_dirichlet_pdf(const ProbabilityVector& x, const Vector& alpha);

/// Log pmf of the Dirichlet-Multinomial compound with parameters alpha and
/// n trials at the count vector x (sum x = n required).
double log_dirichlet_multinomial_pmf(const CountVector& x, const Vector& alpha,
                                     std::int64_t n);

/// log DM(x; alpha, n) - log DM(x; beta, n) with the shared n! and x_i!
/// terms cancelled analytically, so counts never enter through ln x_i!.
double log_dm_ratio(const CountVector& x, const Vector& alpha,
                    const Vector& beta, std::int64_t n);

/// Kullback-Leibler divergence sum_i p_i ln(p_i / q_i), with the usual
/// 0 ln 0 = 0 convention. +inf when p puts mass where q has none.
double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q);

}  // namespace ulearn
