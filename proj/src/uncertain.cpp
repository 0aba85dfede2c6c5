#include "ulearn/uncertain.hpp"

#include <cmath>
#include <stdexcept>

#include "ulearn/probmath.hpp"

namespace ulearn {

void ObservationHistory::record(Eigen::Index symbol) {
  if (symbol < 0 || symbol >= counts_.size())
    throw std::out_of_range("ObservationHistory: symbol out of range");
  counts_.increment(symbol);
  last_symbol_ = symbol;
}

Eigen::Index ObservationHistory::last_symbol() const {
  if (last_symbol_ < 0)
    throw std::logic_error("ObservationHistory: no symbol observed yet");
  return last_symbol_;
}

Vector posterior_params(const HypothesisModel& model) {
  return model.prior_counts().as_reals().array() + 1.0;
}

double surrogate_likelihood(const HypothesisModel& model, Eigen::Index symbol) {
  if (symbol < 0 || symbol >= model.symbol_count())
    throw std::out_of_range("surrogate_likelihood: symbol out of range");
  const auto k = static_cast<double>(model.symbol_count());
  return (static_cast<double>(model.prior_counts()[symbol]) + 1.0) /
         (static_cast<double>(model.prior_total()) + k);
}

double log_uncertain_likelihood_ratio(const HypothesisModel& model,
                                      const ObservationHistory& history) {
  if (history.symbol_count() != model.symbol_count())
    throw std::invalid_argument("log_uncertain_likelihood_ratio: dimension mismatch");
  if (model.prior_total() == 0) return 0.0;  // numerator == denominator
  const Vector ones = Vector::Ones(model.symbol_count());
  const Vector n = history.counts().as_reals();
  const Vector z = model.prior_counts().as_reals();
  return log_beta(z + n + ones) + log_beta(ones) - log_beta(z + ones) -
         log_beta(n + ones);
}

double log_ell_step(const HypothesisModel& model,
                    const ObservationHistory& history) {
  if (history.symbol_count() != model.symbol_count())
    throw std::invalid_argument("log_ell_step: dimension mismatch");
  if (history.step() < 1)
    throw std::logic_error("log_ell_step: no symbol observed yet");
  if (model.prior_total() == 0) return 0.0;  // factor is identically 1
  const Eigen::Index s = history.last_symbol();
  const auto t = static_cast<double>(history.step());
  const auto k = static_cast<double>(model.symbol_count());
  const auto z_s = static_cast<double>(model.prior_counts()[s]);
  const auto n_s = static_cast<double>(history.counts()[s]);  // post-increment
  const auto r = static_cast<double>(model.prior_total());
  return std::log((z_s + n_s) * (k + t - 1.0)) -
         std::log((r + t + k - 1.0) * n_s);
}

LogValue log_asymptotic_limit(const HypothesisModel& model,
                              const ProbabilityVector& p_true) {
  if (p_true.size() != model.symbol_count())
    throw std::invalid_argument("log_asymptotic_limit: dimension mismatch");
  if (model.prior_total() == 0) return LogValue(0.0);
  const Vector ones = Vector::Ones(model.symbol_count());
  const Vector z = model.prior_counts().as_reals();
  double lv = log_beta(ones) - log_beta(z + ones);
  for (Eigen::Index i = 0; i < p_true.size(); ++i) {
    if (model.prior_counts()[i] == 0) continue;
    if (p_true[i] == 0.0) return LogValue::zero_probability();
    lv += z[i] * std::log(p_true[i]);
  }
  return LogValue(lv);
}

Eigen::Index sample_categorical(const ProbabilityVector& p, Rng& rng) {
  const double u = rng.uniform01();
  double cdf = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    cdf += p[i];
    if (u < cdf) return i;
  }
  return p.size() - 1;  // u landed in the rounding slack at the top
}

CountVector draw_prior_evidence(const ProbabilityVector& p_model,
                                std::int64_t trial_count, Rng& rng) {
  if (trial_count < 0)
    throw std::invalid_argument("draw_prior_evidence: negative trial count");
  CountsVec counts = CountsVec::Zero(p_model.size());
  for (std::int64_t t = 0; t < trial_count; ++t)
    ++counts[sample_categorical(p_model, rng)];
  return CountVector(std::move(counts));
}

}  // namespace ulearn
