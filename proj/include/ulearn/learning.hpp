#pragma once

#include "ulearn/netgraph.hpp"
#include "ulearn/rng.hpp"
#include "ulearn/types.hpp"
#include "ulearn/uncertain.hpp"

#include <iosfwd>
#include <memory>
#include <vector>

namespace ulearn {

/// One agent's full state. Beliefs are carried as phi = y * log(mu), one
/// entry per hypothesis, exactly the linear recursion the update rule
/// induces; the log-belief itself is recovered on demand as phi / y.
/// signal_dist is the ground-truth law of the agent's observations and is
/// never read by the inference path.
struct AgentState {
  int id = 0;
  double y = 1.0;
  Vector phi;
  ObservationHistory history;
  std::vector<HypothesisModel> models;
  ProbabilityVector signal_dist;

  AgentState(int id, std::vector<HypothesisModel> models,
             ProbabilityVector signal_dist, const Vector* initial_log_belief = nullptr);

  int hypothesis_count() const { return static_cast<int>(models.size()); }
};

/// The whole network at one time step. Mass sum(y) = m is conserved by the
/// column-stochastic exchange and checked as the simulation runs.
class NetworkState {
 public:
  NetworkState(std::vector<AgentState> agents, GraphSequence graph, Rng rng);

  std::vector<AgentState>& agents() { return agents_; }
  const std::vector<AgentState>& agents() const { return agents_; }
  long step() const { return step_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  int hypothesis_count() const { return agents_.front().hypothesis_count(); }
  const GraphSequence& graph() const { return graph_; }
  Rng& rng() { return rng_; }

  /// Consensus weights for time k, cached when the sequence is periodic.
  const WeightMatrix& weights_at(long k);

  void advance() { ++step_; }

 private:
  std::vector<AgentState> agents_;
  long step_ = 0;
  GraphSequence graph_;
  Rng rng_;
  std::vector<std::unique_ptr<WeightMatrix>> cache_;
  std::unique_ptr<WeightMatrix> scratch_;
};

/// Draws one symbol from the agent's signal law and records it in the
/// agent's history. Returns the symbol.
Eigen::Index observe(AgentState& agent, Rng& rng);

/// One synchronous round of the uncertain-model update: push-sum weights
/// and phi vectors mix through the column-stochastic matrix of the current
/// snapshot, every agent observes one symbol, and the per-step likelihood
/// factor is added to its own phi. All reads happen before any commit.
void network_step(NetworkState& state);

/// log mu = phi / y for one hypothesis.
double log_belief(const AgentState& agent, int hypothesis);

/// The classical (certain-model) Bayesian-style update: reweight the belief
/// vector over hypotheses by each model's surrogate likelihood of `symbol`
/// and renormalize. Computed through log space so long streams cannot
/// overflow the normalization.
Vector classical_update(const Vector& belief, Eigen::Index symbol,
                        const std::vector<HypothesisModel>& models);

/// Runs `steps` rounds and appends one CSV row per (step, agent, hypothesis)
/// with columns k,agent,hypothesis,log_belief,y.
void export_trajectory(NetworkState& state, long steps, std::ostream& os);

}  // namespace ulearn
