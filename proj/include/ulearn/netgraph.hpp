#pragma once

#include "ulearn/types.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace ulearn {

/// One time step of the communication topology. An edge (j, i) means node j
/// sends to node i. Every node carries an implicit self-loop; out_degree
/// counts edges to other nodes only, so the consensus weight of sender j is
/// 1 / (out_degree(j) + 1).
class GraphSnapshot {
 public:
  explicit GraphSnapshot(int agent_count);

  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;

  int agent_count() const { return agent_count_; }
  int out_degree(int node) const;

  /// Sorted out-neighbors of `node`, self excluded.
  const std::vector<int>& targets(int node) const;

  /// One "from to" pair per line, self-loops included.
  void write_edge_list(std::ostream& os) const;

 private:
  int agent_count_;
  std::vector<std::vector<int>> targets_;
};

/// Column-stochastic consensus weights of one snapshot:
/// entries(i, j) = 1/(d_j + 1) iff j sends to i (self-loops included).
class WeightMatrix {
 public:
  explicit WeightMatrix(const GraphSnapshot& g);

  const Matrix& matrix() const { return entries_; }
  int size() const { return static_cast<int>(entries_.rows()); }

 private:
  Matrix entries_;
};

inline WeightMatrix weight_matrix(const GraphSnapshot& g) {
  return WeightMatrix(g);
}

/// Time-indexed directed graph sequence. `at(k)` is a pure function of k
/// (and whatever seed the generator closed over), so concurrent evaluation
/// is safe. `window()` is the connectivity window B the sequence promises;
/// `period()` is the cycle length for periodic sequences (0 = aperiodic),
/// which lets simulators cache weight matrices.
class GraphSequence {
 public:
  using Generator = std::function<GraphSnapshot(long)>;

  GraphSequence(Generator generator, int agent_count, int window, long period);

  GraphSnapshot at(long k) const;
  int agent_count() const { return agent_count_; }
  int window() const { return window_; }
  long period() const { return period_; }

 private:
  Generator generator_;
  int agent_count_;
  int window_;
  long period_;
};

// sequence factories
GraphSequence static_sequence(GraphSnapshot g);
GraphSequence cyclic_sequence(std::vector<GraphSnapshot> phases, int window);

/// Random time-varying sequence satisfying the B-window connectivity
/// assumption by construction: each aligned window of `window` steps hides a
/// random directed Hamiltonian cycle, its edges scattered across the window,
/// plus a sprinkling of extra random edges.
GraphSequence random_b_connected(int agent_count, int window,
                                 std::uint64_t seed);

// snapshot builders
GraphSnapshot directed_ring(int agent_count);
GraphSnapshot complete_graph(int agent_count);
GraphSnapshot star_graph(int agent_count);

/// Slow-mixing topology: a directed ring of bidirectionally complete cliques
/// with a single bridging edge from each clique to the next.
GraphSnapshot ring_of_cliques(int clique_count, int clique_size);

/// True iff the union of every aligned window [kB, (k+1)B - 1] that fits
/// inside [0, horizon] is strongly connected.
bool check_b_strong_connectivity(const GraphSequence& seq, long horizon);

bool is_strongly_connected(const GraphSnapshot& g);

/// Finite-horizon proxy for delta = inf_k min_i [A_{k:0} 1]_i. Throws if the
/// computed value falls below the guaranteed bound 1/m^(mB), which cannot
/// happen for a sequence honoring its connectivity window.
double delta_diagnostic(const GraphSequence& seq, long horizon);

/// 1/m^(mB), evaluated in log space so large m do not overflow.
double delta_lower_bound(int agent_count, int window);

}  // namespace ulearn
