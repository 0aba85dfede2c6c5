#include "ulearn/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "ulearn/rng.hpp"

namespace ulearn {

GraphSnapshot::GraphSnapshot(int agent_count)
    : agent_count_(agent_count), targets_(static_cast<size_t>(agent_count)) {
  if (agent_count < 1)
    throw std::invalid_argument("GraphSnapshot: need at least one node");
}

void GraphSnapshot::add_edge(int from, int to) {
  if (from < 0 || from >= agent_count_ || to < 0 || to >= agent_count_)
    throw std::out_of_range("GraphSnapshot: node out of range");
  if (from == to) return;  // self-loops are implicit
  auto& ts = targets_[static_cast<size_t>(from)];
  auto it = std::lower_bound(ts.begin(), ts.end(), to);
  if (it == ts.end() || *it != to) ts.insert(it, to);
}

bool GraphSnapshot::has_edge(int from, int to) const {
  if (from < 0 || from >= agent_count_ || to < 0 || to >= agent_count_)
    return false;
  if (from == to) return true;
  const auto& ts = targets_[static_cast<size_t>(from)];
  return std::binary_search(ts.begin(), ts.end(), to);
}

int GraphSnapshot::out_degree(int node) const {
  return static_cast<int>(targets_[static_cast<size_t>(node)].size());
}

const std::vector<int>& GraphSnapshot::targets(int node) const {
  return targets_[static_cast<size_t>(node)];
}

void GraphSnapshot::write_edge_list(std::ostream& os) const {
  for (int j = 0; j < agent_count_; ++j) {
    os << j << ' ' << j << '\n';
    for (int i : targets_[static_cast<size_t>(j)]) os << j << ' ' << i << '\n';
  }
}

WeightMatrix::WeightMatrix(const GraphSnapshot& g)
    : entries_(Matrix::Zero(g.agent_count(), g.agent_count())) {
  for (int j = 0; j < g.agent_count(); ++j) {
    const double w = 1.0 / (g.out_degree(j) + 1.0);
    entries_(j, j) = w;
    for (int i : g.targets(j)) entries_(i, j) = w;
  }
}

GraphSequence::GraphSequence(Generator generator, int agent_count, int window,
                             long period)
    : generator_(std::move(generator)),
      agent_count_(agent_count),
      window_(window),
      period_(period) {
  if (window_ < 1) throw std::invalid_argument("GraphSequence: window must be >= 1");
  if (agent_count_ < 1)
    throw std::invalid_argument("GraphSequence: need at least one node");
}

GraphSnapshot GraphSequence::at(long k) const {
  if (k < 0) throw std::out_of_range("GraphSequence: negative time index");
  return generator_(k);
}

GraphSequence static_sequence(GraphSnapshot g) {
  const int m = g.agent_count();
  return GraphSequence([g = std::move(g)](long) { return g; }, m, 1, 1);
}

GraphSequence cyclic_sequence(std::vector<GraphSnapshot> phases, int window) {
  if (phases.empty())
    throw std::invalid_argument("cyclic_sequence: no phases given");
  const int m = phases.front().agent_count();
  for (const auto& p : phases)
    if (p.agent_count() != m)
      throw std::invalid_argument("cyclic_sequence: phases disagree on node count");
  const auto period = static_cast<long>(phases.size());
  return GraphSequence(
      [phases = std::move(phases), period](long k) {
        return phases[static_cast<size_t>(k % period)];
      },
      m, window, period);
}

GraphSequence random_b_connected(int agent_count, int window,
                                 std::uint64_t seed) {
  if (agent_count < 1)
    throw std::invalid_argument("random_b_connected: need at least one node");
  if (window < 1)
    throw std::invalid_argument("random_b_connected: window must be >= 1");
  const int m = agent_count;
  const int b = window;
  auto gen = [m, b, seed](long k) {
    const long w = k / b;
    const int phase = static_cast<int>(k % b);
    Rng rng(stream_seed(seed, "graph-window", static_cast<std::uint64_t>(w)));
    // random Hamiltonian cycle for this window
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.uniform_int(0, i));
      std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }
    // scatter the cycle's edges over the window's steps
    GraphSnapshot g(m);
    for (int e = 0; e < m; ++e) {
      const auto step = static_cast<int>(rng.uniform_int(0, b - 1));
      const int from = order[static_cast<size_t>(e)];
      const int to = order[static_cast<size_t>((e + 1) % m)];
      if (step == phase) g.add_edge(from, to);
    }
    // a few extra edges so snapshots are not bare cycle fragments
    for (int j = 0; j < m; ++j) {
      for (int p = 0; p < b; ++p) {
        const bool drawn = rng.uniform01() < 0.2;
        const auto to = static_cast<int>(rng.uniform_int(0, m - 1));
        if (drawn && p == phase) g.add_edge(j, to);
      }
    }
    return g;
  };
  return GraphSequence(std::move(gen), m, b, 0);
}

GraphSnapshot directed_ring(int agent_count) {
  GraphSnapshot g(agent_count);
  for (int i = 0; i < agent_count; ++i)
    g.add_edge(i, (i + 1) % agent_count);
  return g;
}

GraphSnapshot complete_graph(int agent_count) {
  GraphSnapshot g(agent_count);
  for (int i = 0; i < agent_count; ++i)
    for (int j = 0; j < agent_count; ++j)
      if (i != j) g.add_edge(i, j);
  return g;
}

GraphSnapshot star_graph(int agent_count) {
  GraphSnapshot g(agent_count);
  for (int i = 1; i < agent_count; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, 0);
  }
  return g;
}

GraphSnapshot ring_of_cliques(int clique_count, int clique_size) {
  if (clique_count < 1 || clique_size < 1)
    throw std::invalid_argument("ring_of_cliques: invalid shape");
  const int m = clique_count * clique_size;
  GraphSnapshot g(m);
  for (int c = 0; c < clique_count; ++c) {
    const int base = c * clique_size;
    for (int a = 0; a < clique_size; ++a)
      for (int b = 0; b < clique_size; ++b)
        if (a != b) g.add_edge(base + a, base + b);
    g.add_edge(base, (base + clique_size) % m);  // bridge to the next clique
  }
  return g;
}

namespace {

// forward-and-backward reachability from node 0 over a union adjacency
bool strongly_connected(const std::vector<std::vector<bool>>& adj) {
  const auto m = static_cast<int>(adj.size());
  auto reaches_all = [m](auto&& neighbor) {
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int found = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < m; ++u) {
        if (!seen[static_cast<size_t>(u)] && neighbor(v, u)) {
          seen[static_cast<size_t>(u)] = true;
          ++found;
          stack.push_back(u);
        }
      }
    }
    return found == m;
  };
  return reaches_all([&adj](int v, int u) { return adj[static_cast<size_t>(v)][static_cast<size_t>(u)]; }) &&
         reaches_all([&adj](int v, int u) { return adj[static_cast<size_t>(u)][static_cast<size_t>(v)]; });
}

}  // namespace

bool is_strongly_connected(const GraphSnapshot& g) {
  const int m = g.agent_count();
  std::vector<std::vector<bool>> adj(static_cast<size_t>(m),
                                     std::vector<bool>(static_cast<size_t>(m), false));
  for (int j = 0; j < m; ++j)
    for (int i : g.targets(j)) adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
  return strongly_connected(adj);
}

bool check_b_strong_connectivity(const GraphSequence& seq, long horizon) {
  const int m = seq.agent_count();
  const long b = seq.window();
  if (horizon < b - 1) return false;  // not even one complete window
  for (long k = 0; (k + 1) * b - 1 <= horizon; ++k) {
    std::vector<std::vector<bool>> adj(
        static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
    for (long t = k * b; t < (k + 1) * b; ++t) {
      const GraphSnapshot g = seq.at(t);
      for (int j = 0; j < m; ++j)
        for (int i : g.targets(j))
          adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
    }
    if (!strongly_connected(adj)) return false;
  }
  return true;
}

double delta_lower_bound(int agent_count, int window) {
  const auto m = static_cast<double>(agent_count);
  return std::exp(-m * window * std::log(m));
}

double delta_diagnostic(const GraphSequence& seq, long horizon) {
  if (horizon < 1)
    throw std::invalid_argument("delta_diagnostic: horizon must be >= 1");
  const int m = seq.agent_count();
  Vector mass = Vector::Ones(m);
  double delta = std::numeric_limits<double>::infinity();
  for (long k = 0; k <= horizon; ++k) {
    mass = WeightMatrix(seq.at(k)).matrix() * mass;  // A_{k:0} * 1
    delta = std::min(delta, mass.minCoeff());
  }
  const double bound = delta_lower_bound(m, seq.window());
  if (delta < bound * (1.0 - 1e-9))
    throw std::runtime_error(
        "delta_diagnostic: accumulated weight fell below 1/m^(mB); the "
        "sequence violates its connectivity window");
  return delta;
}

}  // namespace ulearn
