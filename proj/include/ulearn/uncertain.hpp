#pragma once

#include "ulearn/rng.hpp"
#include "ulearn/types.hpp"

namespace ulearn {

/// An agent's statistical model for one hypothesis, built from finite prior
/// evidence: a count vector Z over the K symbol categories drawn in R
/// training observations. R = 0 means complete uncertainty about the
/// hypothesis. Immutable after construction.
class HypothesisModel {
 public:
  HypothesisModel(int hypothesis_id, CountVector prior_counts)
      : hypothesis_id_(hypothesis_id), prior_counts_(std::move(prior_counts)) {}

  int hypothesis_id() const { return hypothesis_id_; }
  const CountVector& prior_counts() const { return prior_counts_; }
  std::int64_t prior_total() const { return prior_counts_.total(); }
  Eigen::Index symbol_count() const { return prior_counts_.size(); }

 private:
  int hypothesis_id_;
  CountVector prior_counts_;
};

/// Running histogram of one agent's private observations. `step()` equals
/// the number of symbols recorded; `last_symbol()` is defined once at least
/// one symbol has been seen.
class ObservationHistory {
 public:
  explicit ObservationHistory(Eigen::Index symbol_count)
      : counts_(CountVector::zeros(symbol_count)) {}

  void record(Eigen::Index symbol);

  const CountVector& counts() const { return counts_; }
  std::int64_t step() const { return counts_.total(); }
  Eigen::Index last_symbol() const;
  Eigen::Index symbol_count() const { return counts_.size(); }

 private:
  CountVector counts_;
  Eigen::Index last_symbol_ = -1;
};

/// Dirichlet posterior parameters Z + 1 under the uniform prior.
Vector posterior_params(const HypothesisModel& model);

/// Posterior-predictive probability of observing `symbol` next:
/// (Z[symbol] + 1) / (R + K). Strictly positive; sums to one over symbols.
double surrogate_likelihood(const HypothesisModel& model, Eigen::Index symbol);

/// Log of the uncertain likelihood ratio of the full observation histogram:
/// the evidence-informed predictive over the evidence-free predictive,
///   ln [ Beta(Z+N+1) Beta(1) / (Beta(Z+1) Beta(N+1)) ].
/// Exactly zero for every history when the model has no prior evidence.
double log_uncertain_likelihood_ratio(const HypothesisModel& model,
                                      const ObservationHistory& history);

/// Log of the per-step ratio factor at t = history.step(), evaluated at the
/// symbol just recorded. The history must already include that symbol (the
/// count entering the formula is post-increment). Summing this over a stream
/// telescopes to log_uncertain_likelihood_ratio of the final history.
double log_ell_step(const HypothesisModel& model,
                    const ObservationHistory& history);

/// Almost-sure limit of the log uncertain likelihood ratio when the signals
/// follow p_true:
///   ln Beta(1) - ln Beta(Z+1) + sum_i Z_i ln p_true[i].
/// -inf when evidence puts weight on a symbol p_true never emits.
LogValue log_asymptotic_limit(const HypothesisModel& model,
                              const ProbabilityVector& p_true);

/// Multinomial draw of `trial_count` observations from p_model; the prior
/// evidence Z for one (agent, hypothesis) pair. Deterministic given the
/// rng state.
CountVector draw_prior_evidence(const ProbabilityVector& p_model,
                                std::int64_t trial_count, Rng& rng);

/// One categorical draw from p (inverse-CDF over the raw uniform).
Eigen::Index sample_categorical(const ProbabilityVector& p, Rng& rng);

}  // namespace ulearn
