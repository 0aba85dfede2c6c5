#include "ulearn/learning.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ulearn/csv.hpp"

namespace ulearn {

AgentState::AgentState(int id_, std::vector<HypothesisModel> models_,
                       ProbabilityVector signal_dist_,
                       const Vector* initial_log_belief)
    : id(id_),
      history(signal_dist_.size()),
      models(std::move(models_)),
      signal_dist(std::move(signal_dist_)) {
  if (models.empty())
    throw std::invalid_argument("AgentState: need at least one hypothesis");
  for (const auto& m : models)
    if (m.symbol_count() != signal_dist.size())
      throw std::invalid_argument("AgentState: model dimension mismatch");
  phi = Vector::Zero(static_cast<Eigen::Index>(models.size()));  // mu_0 = 1
  if (initial_log_belief) {
    if (initial_log_belief->size() != phi.size())
      throw std::invalid_argument("AgentState: initial belief dimension mismatch");
    phi = *initial_log_belief;  // phi_0 = y_0 * log mu_0 with y_0 = 1
  }
}

NetworkState::NetworkState(std::vector<AgentState> agents, GraphSequence graph,
                           Rng rng)
    : agents_(std::move(agents)), graph_(std::move(graph)), rng_(rng) {
  if (agents_.empty())
    throw std::invalid_argument("NetworkState: no agents");
  if (static_cast<int>(agents_.size()) != graph_.agent_count())
    throw std::invalid_argument("NetworkState: graph size mismatch");
  const int h = agents_.front().hypothesis_count();
  for (const auto& a : agents_)
    if (a.hypothesis_count() != h)
      throw std::invalid_argument("NetworkState: agents disagree on hypothesis count");
  if (graph_.period() > 0)
    cache_.resize(static_cast<size_t>(graph_.period()));
}

const WeightMatrix& NetworkState::weights_at(long k) {
  if (graph_.period() > 0) {
    auto& slot = cache_[static_cast<size_t>(k % graph_.period())];
    if (!slot) slot = std::make_unique<WeightMatrix>(graph_.at(k));
    return *slot;
  }
  scratch_ = std::make_unique<WeightMatrix>(graph_.at(k));
  return *scratch_;
}

Eigen::Index observe(AgentState& agent, Rng& rng) {
  const Eigen::Index symbol = sample_categorical(agent.signal_dist, rng);
  agent.history.record(symbol);
  return symbol;
}

void network_step(NetworkState& state) {
  const int m = state.agent_count();
  const int h = state.hypothesis_count();
  const Matrix& a = state.weights_at(state.step()).matrix();

  // read phase: gather everybody's (y, phi)
  Vector y_old(m);
  Matrix phi_old(m, h);
  for (int i = 0; i < m; ++i) {
    y_old[i] = state.agents()[static_cast<size_t>(i)].y;
    phi_old.row(i) = state.agents()[static_cast<size_t>(i)].phi.transpose();
  }

  const Vector y_new = a * y_old;
  Matrix phi_new = a * phi_old;

  // private phase: one observation per agent, own likelihood factor added
  for (int i = 0; i < m; ++i) {
    AgentState& agent = state.agents()[static_cast<size_t>(i)];
    observe(agent, state.rng());
    for (int t = 0; t < h; ++t)
      phi_new(i, t) += log_ell_step(agent.models[static_cast<size_t>(t)], agent.history);
  }

  // commit phase
  double y_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    AgentState& agent = state.agents()[static_cast<size_t>(i)];
    agent.y = y_new[i];
    agent.phi = phi_new.row(i).transpose();
    if (!(agent.y > 0.0))
      throw std::logic_error("network_step: push-sum weight left (0, inf)");
    y_sum += agent.y;
  }
  if (std::abs(y_sum - m) > 1e-6)
    throw std::logic_error("network_step: sum(y) drifted away from m");
  state.advance();
}

double log_belief(const AgentState& agent, int hypothesis) {
  const double lb = agent.phi[hypothesis] / agent.y;
  if (std::isnan(lb)) throw std::logic_error("log_belief: NaN");
  return lb;
}

Vector classical_update(const Vector& belief, Eigen::Index symbol,
                        const std::vector<HypothesisModel>& models) {
  const auto h = static_cast<Eigen::Index>(models.size());
  if (belief.size() != h)
    throw std::invalid_argument("classical_update: dimension mismatch");
  double max_lw = -std::numeric_limits<double>::infinity();
  Vector lw(h);
  for (Eigen::Index t = 0; t < h; ++t) {
    if (!(belief[t] >= 0.0))
      throw std::invalid_argument("classical_update: negative belief entry");
    lw[t] = std::log(belief[t]) +
            std::log(surrogate_likelihood(models[static_cast<size_t>(t)], symbol));
    max_lw = std::max(max_lw, lw[t]);
  }
  if (max_lw == -std::numeric_limits<double>::infinity())
    throw std::invalid_argument("classical_update: belief vector is all zero");
  Vector next(h);
  double norm = 0.0;
  for (Eigen::Index t = 0; t < h; ++t) {
    next[t] = std::exp(lw[t] - max_lw);
    norm += next[t];
  }
  return next / norm;
}

void export_trajectory(NetworkState& state, long steps, std::ostream& os) {
  os << "k,agent,hypothesis,log_belief,y\n";
  for (long k = 1; k <= steps; ++k) {
    network_step(state);
    for (int i = 0; i < state.agent_count(); ++i) {
      const AgentState& agent = state.agents()[static_cast<size_t>(i)];
      for (int t = 0; t < state.hypothesis_count(); ++t) {
        os << k << ',' << i << ',' << t << ',' << format_double(log_belief(agent, t))
           << ',' << format_double(agent.y) << '\n';
      }
    }
  }
}

}  // namespace ulearn
