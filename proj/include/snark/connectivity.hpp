#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "snark/exec.hpp"
#include "snark/multipole.hpp"

namespace snark {

struct EdgeCut {
  std::vector<int> edges;   // sorted
  std::vector<int> side_a;  // a component of g - edges containing a circuit
  std::vector<int> side_b;  // all other vertices
};

class ConnectivityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// K4, K3,3 and the three-edge theta graph have no cycle-separating cut.
bool is_exceptional_cubic(const Graph& g);

/// True iff g - edges has at least two components containing a circuit.
bool is_cycle_separating(const Graph& g, std::span<const int> edges);

/// The edges leaving a shortest circuit, if that cut separates circuits.
std::optional<EdgeCut> trivial_cut_around_shortest_cycle(const Graph& g);

struct CyclicConnectivityResult {
  bool holds = true;               // no cycle-separating cut of fewer than k edges
  std::optional<EdgeCut> witness;  // a violating cut when holds is false
};

/// Exact test. The cut around a shortest circuit is tried first, then every
/// cut size s < k is swept in increasing order; the witness has the smallest
/// size of any cycle-separating cut.
/// Throws ConnectivityError for disconnected, non-cubic or exceptional input.
CyclicConnectivityResult cyclic_connectivity_at_least(const Graph& g, int k, Exec exec = Exec::parallel);

struct CyclicConnectivityValue {
  int lower = 0;                // lambda_c >= lower
  std::optional<int> exact;     // set when the value is pinned down
  std::optional<EdgeCut> witness;
};

/// Cyclic edge-connectivity, searched up to `cap` - 1. When no smaller cut
/// exists, the value is exact only if the shortest-circuit cut has size
/// `cap`; otherwise the result is the lower bound `cap`.
CyclicConnectivityValue cyclic_edge_connectivity(const Graph& g, int cap, Exec exec = Exec::parallel);

}  // namespace snark
