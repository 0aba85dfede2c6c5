#pragma once

#include "ulearn/netgraph.hpp"
#include "ulearn/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ulearn {

/// How much prior evidence each (agent, hypothesis) pair collects: R is
/// drawn uniformly from the regime's integer range.
enum class EvidenceRegime { kLow, kHigh, kExplicit };

struct EvidenceSpec {
  EvidenceRegime regime = EvidenceRegime::kLow;
  std::int64_t min_trials = 0;  // kExplicit only
  std::int64_t max_trials = 0;

  std::int64_t lo() const;
  std::int64_t hi() const;
  std::string label() const;
};

enum class GraphKind { kRing, kComplete, kStar, kCliques, kRandom, kCyclic };

struct GraphSpec {
  GraphKind kind = GraphKind::kRing;
  int window = 1;       // B of random and cyclic sequences
  int clique_size = 2;  // cliques topology
  /// kCyclic: explicit per-phase edge lists, cycled in order.
  std::vector<std::vector<std::pair<int, int>>> phases;

  GraphSequence build(int agent_count, std::uint64_t graph_seed) const;
  std::string label() const;
};

struct ExperimentConfig {
  int agents = 10;
  int symbols = 2;
  int true_hypothesis = 1;
  /// One (agents x symbols) row-stochastic matrix per hypothesis; row i is
  /// the distribution agent i's model of that hypothesis is built from.
  std::vector<Matrix> hypothesis_dists;
  EvidenceSpec evidence;
  GraphSpec graph;
  long steps = 100000;
  int trials = 10;
  std::uint64_t seed = 42;

  int hypothesis_count() const { return static_cast<int>(hypothesis_dists.size()); }
  ProbabilityVector hypothesis_dist(int hypothesis, int agent) const;
  ProbabilityVector signal_dist(int agent) const;

  /// Throws with the offending field named in the message.
  void validate() const;
};

/// Two hypotheses over two symbols, [0.4, 0.6] and [0.6, 0.4], the second
/// one true; ring graph, low evidence, 10 agents, 10 trials.
ExperimentConfig default_config();

struct TrialResult {
  /// error_series(k-1, t) = mean over agents of |log-belief - target| for
  /// hypothesis t after round k.
  Matrix error_series;
  /// (1/m) sum_i log mu_T^i per hypothesis.
  Vector final_points;
  /// (1/m) sum_i of the asymptotic log limit per hypothesis.
  Vector targets;
};

struct CampaignResult {
  Matrix mean_error;    // steps x hypotheses
  Matrix stderr_error;  // steps x hypotheses
  Vector mean_final;    // per hypothesis
  Vector stderr_final;
  Matrix trial_finals;  // trials x hypotheses
};

/// One Monte Carlo trial: evidence drawn per (agent, hypothesis), the
/// network simulated for config.steps rounds, the error series measured
/// against the asymptotic target. Deterministic in (config, trial_seed).
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed);

/// Runs config.trials trials (fanned out across a thread pool) and averages
/// them; results are reduced in trial-index order, so the output does not
/// depend on scheduling.
CampaignResult run_campaign(const ExperimentConfig& config);

/// First round k at which the mean error of every hypothesis has dropped
/// below `threshold`; steps + 1 when that never happens.
long threshold_crossing_step(const CampaignResult& campaign, double threshold);

void write_curves_csv(const CampaignResult& campaign, std::ostream& os);
void write_table_csv(const ExperimentConfig& config,
                     const CampaignResult& campaign, std::ostream& os);

struct Prop1Result {
  double flip_probability;        // wrong hypothesis strictly closer in KL
  double classical_failure_rate;  // of flipped draws: mu(theta*) < 1e-6
  int flipped = 0;
  int trials = 0;
};

/// Empirical check of the finite-evidence failure mode: draws evidence for
/// a wrong hypothesis (R1 trials from p_alt) and for the true one (R2
/// trials from p_star), measures how often the wrong surrogate lands
/// strictly closer to p_star in KL, and how often the classical update then
/// discards the true hypothesis on a fresh signal stream.
Prop1Result proposition1_demo(const ProbabilityVector& p_star,
                              const ProbabilityVector& p_alt, std::int64_t r1,
                              std::int64_t r2, int trials, std::uint64_t seed,
                              long classical_steps = 10000);

}  // namespace ulearn
