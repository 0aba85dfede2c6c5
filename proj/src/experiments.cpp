#include "ulearn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ulearn/csv.hpp"
#include "ulearn/learning.hpp"
#include "ulearn/probmath.hpp"
#include "ulearn/rng.hpp"
#include "ulearn/uncertain.hpp"

namespace ulearn {

std::int64_t EvidenceSpec::lo() const {
  switch (regime) {
    case EvidenceRegime::kLow: return 0;
    case EvidenceRegime::kHigh: return 1000;
    case EvidenceRegime::kExplicit: return min_trials;
  }
  return 0;
}

std::int64_t EvidenceSpec::hi() const {
  switch (regime) {
    case EvidenceRegime::kLow: return 100;
    case EvidenceRegime::kHigh: return 10000;
    case EvidenceRegime::kExplicit: return max_trials;
  }
  return 0;
}

std::string EvidenceSpec::label() const {
  switch (regime) {
    case EvidenceRegime::kLow: return "low";
    case EvidenceRegime::kHigh: return "high";
    case EvidenceRegime::kExplicit:
      return "r" + std::to_string(min_trials) + "-" + std::to_string(max_trials);
  }
  return "?";
}

GraphSequence GraphSpec::build(int agent_count, std::uint64_t graph_seed) const {
  switch (kind) {
    case GraphKind::kRing: return static_sequence(directed_ring(agent_count));
    case GraphKind::kComplete: return static_sequence(complete_graph(agent_count));
    case GraphKind::kStar: return static_sequence(star_graph(agent_count));
    case GraphKind::kCliques: {
      if (clique_size < 1 || agent_count % clique_size != 0)
        throw std::invalid_argument(
            "graph.clique_size: must divide the agent count");
      return static_sequence(
          ring_of_cliques(agent_count / clique_size, clique_size));
    }
    case GraphKind::kRandom:
      return random_b_connected(agent_count, window, graph_seed);
    case GraphKind::kCyclic: {
      if (phases.empty())
        throw std::invalid_argument("graph.phases: must not be empty");
      std::vector<GraphSnapshot> snapshots;
      snapshots.reserve(phases.size());
      for (const auto& phase : phases) {
        GraphSnapshot g(agent_count);
        for (const auto& [from, to] : phase) g.add_edge(from, to);
        snapshots.push_back(std::move(g));
      }
      return cyclic_sequence(std::move(snapshots), window);
    }
  }
  throw std::logic_error("GraphSpec: unknown kind");
}

std::string GraphSpec::label() const {
  switch (kind) {
    case GraphKind::kRing: return "ring";
    case GraphKind::kComplete: return "complete";
    case GraphKind::kStar: return "star";
    case GraphKind::kCliques:
      return "cliques(" + std::to_string(clique_size) + ")";
    case GraphKind::kRandom: return "random(B=" + std::to_string(window) + ")";
    case GraphKind::kCyclic:
      return "cyclic(" + std::to_string(phases.size()) + " phases)";
  }
  return "?";
}

ProbabilityVector ExperimentConfig::hypothesis_dist(int hypothesis,
                                                    int agent) const {
  return ProbabilityVector(
      hypothesis_dists[static_cast<size_t>(hypothesis)].row(agent).transpose());
}

ProbabilityVector ExperimentConfig::signal_dist(int agent) const {
  return hypothesis_dist(true_hypothesis, agent);
}

void ExperimentConfig::validate() const {
  if (agents < 1) throw std::invalid_argument("agents: must be >= 1");
  if (symbols < 2) throw std::invalid_argument("symbols: must be >= 2");
  if (hypothesis_dists.empty())
    throw std::invalid_argument("hypotheses: must not be empty");
  if (true_hypothesis < 0 || true_hypothesis >= hypothesis_count())
    throw std::invalid_argument("true_hypothesis: out of range");
  for (int t = 0; t < hypothesis_count(); ++t) {
    const Matrix& d = hypothesis_dists[static_cast<size_t>(t)];
    if (d.rows() != agents || d.cols() != symbols)
      throw std::invalid_argument("hypotheses[" + std::to_string(t) +
                                  "].distribution: wrong shape");
    for (int i = 0; i < agents; ++i)
      ProbabilityVector(d.row(i).transpose());  // throws when not a distribution
  }
  if (evidence.lo() < 0)
    throw std::invalid_argument("evidence.min: must be >= 0");
  if (evidence.hi() < evidence.lo())
    throw std::invalid_argument("evidence.max: must be >= evidence.min");
  if (steps < 1) throw std::invalid_argument("steps: must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (graph.kind == GraphKind::kRandom && graph.window < 1)
    throw std::invalid_argument("graph.window: must be >= 1");
  if (graph.kind == GraphKind::kCliques &&
      (graph.clique_size < 1 || agents % graph.clique_size != 0))
    throw std::invalid_argument("graph.clique_size: must divide agents");
  if (graph.kind == GraphKind::kCyclic) {
    if (graph.phases.empty())
      throw std::invalid_argument("graph.phases: must not be empty");
    if (graph.window < 1)
      throw std::invalid_argument("graph.window: must be >= 1");
    for (const auto& phase : graph.phases)
      for (const auto& [from, to] : phase)
        if (from < 0 || from >= agents || to < 0 || to >= agents)
          throw std::invalid_argument("graph.phases: edge endpoint out of range");
  }
}

ExperimentConfig default_config() {
  ExperimentConfig config;
  Matrix alt(config.agents, 2), star(config.agents, 2);
  for (int i = 0; i < config.agents; ++i) {
    alt.row(i) << 0.4, 0.6;
    star.row(i) << 0.6, 0.4;
  }
  config.hypothesis_dists = {alt, star};
  config.true_hypothesis = 1;
  return config;
}

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed) {
  config.validate();
  const int m = config.agents;
  const int h = config.hypothesis_count();

  // evidence first, on its own substreams: the graph and signal draws can
  // change without disturbing it
  std::vector<AgentState> agents;
  agents.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<HypothesisModel> models;
    models.reserve(static_cast<size_t>(h));
    for (int t = 0; t < h; ++t) {
      Rng evidence_rng(stream_seed(trial_seed, "evidence",
                                   static_cast<std::uint64_t>(i),
                                   static_cast<std::uint64_t>(t)));
      const std::int64_t r =
          evidence_rng.uniform_int(config.evidence.lo(), config.evidence.hi());
      models.emplace_back(
          t, draw_prior_evidence(config.hypothesis_dist(t, i), r, evidence_rng));
    }
    agents.emplace_back(i, std::move(models), config.signal_dist(i));
  }

  Vector targets = Vector::Zero(h);
  for (int t = 0; t < h; ++t) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i)
      sum += log_asymptotic_limit(agents[static_cast<size_t>(i)].models[static_cast<size_t>(t)],
                                  config.signal_dist(i));
    targets[t] = sum / m;
  }

  NetworkState net(std::move(agents),
                   config.graph.build(m, stream_seed(trial_seed, "graph")),
                   Rng(stream_seed(trial_seed, "signals")));

  TrialResult result;
  result.targets = targets;
  result.error_series.resize(config.steps, h);
  for (long k = 1; k <= config.steps; ++k) {
    network_step(net);
    for (int t = 0; t < h; ++t) {
      double err = 0.0;
      for (const AgentState& agent : net.agents())
        err += std::abs(log_belief(agent, t) - targets[t]);
      result.error_series(k - 1, t) = err / m;
    }
  }

  result.final_points = Vector::Zero(h);
  for (int t = 0; t < h; ++t) {
    double sum = 0.0;
    for (const AgentState& agent : net.agents()) sum += log_belief(agent, t);
    result.final_points[t] = sum / m;
  }
  return result;
}

CampaignResult run_campaign(const ExperimentConfig& config) {
  config.validate();
  const int n = config.trials;
  const int h = config.hypothesis_count();

  CampaignResult out;
  Matrix err_sum = Matrix::Zero(config.steps, h);
  Matrix err_sumsq = Matrix::Zero(config.steps, h);
  out.trial_finals.resize(n, h);

  // trials fan out in bounded waves; the reduction below consumes them in
  // trial-index order, so results are independent of scheduling
  const int wave = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int base = 0; base < n; base += wave) {
    const int end = std::min(n, base + wave);
    std::vector<std::future<TrialResult>> futures;
    futures.reserve(static_cast<size_t>(end - base));
    for (int t = base; t < end; ++t) {
      const std::uint64_t trial_seed =
          stream_seed(config.seed, "trial", static_cast<std::uint64_t>(t));
      futures.push_back(std::async(std::launch::async, [&config, trial_seed] {
        return run_trial(config, trial_seed);
      }));
    }
    for (int t = base; t < end; ++t) {
      const TrialResult trial = futures[static_cast<size_t>(t - base)].get();
      err_sum += trial.error_series;
      err_sumsq += trial.error_series.cwiseProduct(trial.error_series);
      out.trial_finals.row(t) = trial.final_points.transpose();
    }
  }

  out.mean_error = err_sum / n;
  if (n > 1) {
    Matrix var = (err_sumsq - err_sum.cwiseProduct(err_sum) / n) / (n - 1);
    out.stderr_error = (var.cwiseMax(0.0) / n).cwiseSqrt();
  } else {
    out.stderr_error = Matrix::Zero(config.steps, h);
  }

  out.mean_final = out.trial_finals.colwise().mean().transpose();
  out.stderr_final = Vector::Zero(h);
  if (n > 1) {
    for (int t = 0; t < h; ++t) {
      const double mu = out.mean_final[t];
      double ss = 0.0;
      for (int i = 0; i < n; ++i) {
        const double d = out.trial_finals(i, t) - mu;
        ss += d * d;
      }
      out.stderr_final[t] = std::sqrt(ss / (n - 1) / n);
    }
  }
  return out;
}

long threshold_crossing_step(const CampaignResult& campaign, double threshold) {
  const long steps = campaign.mean_error.rows();
  const int h = static_cast<int>(campaign.mean_error.cols());
  long crossing = 0;
  for (int t = 0; t < h; ++t) {
    long k = 1;
    while (k <= steps && !(campaign.mean_error(k - 1, t) < threshold)) ++k;
    crossing = std::max(crossing, k);
  }
  return crossing;
}

void write_curves_csv(const CampaignResult& campaign, std::ostream& os) {
  os << "k,hypothesis,mean_error,stderr\n";
  const long steps = campaign.mean_error.rows();
  const int h = static_cast<int>(campaign.mean_error.cols());
  for (long k = 1; k <= steps; ++k)
    for (int t = 0; t < h; ++t)
      os << k << ',' << t << ',' << format_double(campaign.mean_error(k - 1, t))
         << ',' << format_double(campaign.stderr_error(k - 1, t)) << '\n';
}

void write_table_csv(const ExperimentConfig& config,
                     const CampaignResult& campaign, std::ostream& os) {
  os << "regime,m,hypothesis,mean_final_point,stderr\n";
  for (int t = 0; t < config.hypothesis_count(); ++t)
    os << config.evidence.label() << ',' << config.agents << ',' << t << ','
       << format_double(campaign.mean_final[t]) << ','
       << format_double(campaign.stderr_final[t]) << '\n';
}

Prop1Result proposition1_demo(const ProbabilityVector& p_star,
                              const ProbabilityVector& p_alt, std::int64_t r1,
                              std::int64_t r2, int trials, std::uint64_t seed,
                              long classical_steps) {
  if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (p_star.size() != p_alt.size())
    throw std::invalid_argument("distributions: dimension mismatch");
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("evidence counts: negative");

  Prop1Result result;
  result.trials = trials;
  int failures = 0;
  for (int d = 0; d < trials; ++d) {
    Rng evidence_rng(stream_seed(seed, "evidence", static_cast<std::uint64_t>(d)));
    const HypothesisModel alt(0, draw_prior_evidence(p_alt, r1, evidence_rng));
    const HypothesisModel star(1, draw_prior_evidence(p_star, r2, evidence_rng));

    auto predictive = [](const HypothesisModel& model) {
      Vector q(model.symbol_count());
      for (Eigen::Index s = 0; s < model.symbol_count(); ++s)
        q[s] = surrogate_likelihood(model, s);
      return ProbabilityVector::normalized(q);
    };
    const double kl_alt = kl_divergence(p_star, predictive(alt));
    const double kl_star = kl_divergence(p_star, predictive(star));
    if (!(kl_alt < kl_star)) continue;

    ++result.flipped;
    Rng signal_rng(stream_seed(seed, "signals", static_cast<std::uint64_t>(d)));
    Vector belief = Vector::Constant(2, 0.5);
    const std::vector<HypothesisModel> models{alt, star};
    for (long k = 0; k < classical_steps; ++k)
      belief = classical_update(belief, sample_categorical(p_star, signal_rng),
                                models);
    if (belief[1] < 1e-6) ++failures;
  }
  result.flip_probability = static_cast<double>(result.flipped) / trials;
  result.classical_failure_rate =
      result.flipped > 0 ? static_cast<double>(failures) / result.flipped : 0.0;
  return result;
}

}  // namespace ulearn
