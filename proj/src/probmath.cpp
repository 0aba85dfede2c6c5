#include "ulearn/probmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ulearn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(const Vector& alpha, const char* who) {
  if (alpha.size() == 0) throw std::invalid_argument(std::string(who) + ": empty parameter vector");
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    if (!(alpha[i] > 0.0))
      throw std::domain_error(std::string(who) + ": parameter must be positive");
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be positive");
  return std::lgamma(x);
}

double log_beta(const Vector& alpha) {
  if (alpha.size() < 2)
    throw std::invalid_argument("log_beta: need at least two parameters");
  require_positive(alpha, "log_beta");
  double sum_lg = 0.0;
  double sum_alpha = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    sum_lg += std::lgamma(alpha[i]);
    sum_alpha += alpha[i];
  }
  return sum_lg - std::lgamma(sum_alpha);
}

LogValue log_dirichlet_pdf(const ProbabilityVector& x, const Vector& alpha) {
  if (x.size() != alpha.size())
    throw std::invalid_argument("log_dirichlet_pdf: dimension mismatch");
  require_positive(alpha, "log_dirichlet_pdf");
  double log_density = -log_beta(alpha);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double a = alpha[i] - 1.0;
    if (x[i] == 0.0) {
      if (a > 0.0) return LogValue::zero_probability();
      if (a < 0.0)
        throw std::domain_error("log_dirichlet_pdf: singular at x_i = 0 with alpha_i < 1");
      continue;  // alpha_i == 1: x_i^0 contributes nothing
    }
    log_density += a * std::log(x[i]);
  }
  return LogValue(log_density);
}

double log_dirichlet_multinomial_pmf(const CountVector& x, const Vector& alpha,
                                     std::int64_t n) {
  if (x.size() != alpha.size())
    throw std::invalid_argument("log_dirichlet_multinomial_pmf: dimension mismatch");
  require_positive(alpha, "log_dirichlet_multinomial_pmf");
  if (x.total() != n)
    throw std::invalid_argument("log_dirichlet_multinomial_pmf: counts do not sum to n");
  const double alpha_sum = alpha.sum();
  double lp = std::lgamma(static_cast<double>(n) + 1.0) + std::lgamma(alpha_sum) -
              std::lgamma(static_cast<double>(n) + alpha_sum);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto xi = static_cast<double>(x[i]);
    lp += std::lgamma(xi + alpha[i]) - std::lgamma(xi + 1.0) - std::lgamma(alpha[i]);
  }
  return lp;
}

double log_dm_ratio(const CountVector& x, const Vector& alpha,
                    const Vector& beta, std::int64_t n) {
  if (x.size() != alpha.size() || x.size() != beta.size())
    throw std::invalid_argument("log_dm_ratio: dimension mismatch");
  require_positive(alpha, "log_dm_ratio");
  require_positive(beta, "log_dm_ratio");
  if (x.total() != n)
    throw std::invalid_argument("log_dm_ratio: counts do not sum to n");
  const double nn = static_cast<double>(n);
  // grouped so identical parameters cancel exactly, term by term
  double lr = (std::lgamma(alpha.sum()) - std::lgamma(beta.sum())) +
              (std::lgamma(nn + beta.sum()) - std::lgamma(nn + alpha.sum()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto xi = static_cast<double>(x[i]);
    lr += (std::lgamma(xi + alpha[i]) - std::lgamma(xi + beta[i])) +
          (std::lgamma(beta[i]) - std::lgamma(alpha[i]));
  }
  return lr;
}

double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("kl_divergence: dimension mismatch");
  double kl = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    kl += p[i] * std::log(p[i] / q[i]);
  }
  return kl;
}

}  // namespace ulearn
