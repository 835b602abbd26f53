#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

enum class Search { found, none, undecided };

const char* to_string(Search s);

/// Search-node limit; 0 means unlimited.
struct Budget {
  std::uint64_t nodes = 0;
};

/// Backtracking search for nowhere-zero Klein-group flows (values 1..3 on
/// every edge, XOR sum 0 at every vertex). On a cubic multipole these are
/// exactly the proper 3-edge-colourings. Works for any vertex degree.
///
/// Branches on the least-index unassigned edge with values 1, 2, 3 in order,
/// with unit propagation at vertices that have one unassigned end left. Once
/// the unassigned edges fall apart into independent groups, each group is
/// solved separately; the first solution found is still the lexicographically
/// least one.
///
/// Solved groups are memoised by their edge set and the partial vertex sums
/// around them, so repeated subproblems (such as the interiors of identical
/// substituted multipoles) are decided once. The memo persists across
/// reset().
///
/// Ends that are free impose nothing. Loops contribute 0 to their vertex and
/// are set to 1 when encountered.
class FlowSearch {
 public:
  explicit FlowSearch(const Multipole& m);

  /// Clears all assignments.
  void reset();
  /// Assigns `value` to `edge` and propagates. Returns false on conflict, in
  /// which case the state is unusable until reset().
  bool fix(int edge, int value);
  /// Completes the current assignment.
  Search solve(Budget budget = {});

  const std::vector<int>& values() const { return val_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(int e, int c);
  bool propagate();
  void undo(std::size_t mark);
  bool solve_group(const std::vector<int>& group);
  bool branch(const std::vector<int>& group);
  std::vector<std::vector<int>> split(const std::vector<int>& edges);

  int n_ = 0;
  std::vector<std::array<int, 2>> ends_;  // -1 for free ends and for both ends of a loop
  std::vector<int> val_;
  std::vector<int> sum_;
  std::vector<int> unc_;
  std::vector<int> uncx_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<int> owner_;
  std::vector<int> owner_stamp_;
  std::vector<int> parent_;
  int stamp_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_ = 0;

  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const;
  };
  static constexpr std::size_t kMemoMaxEdges = 256;
  static constexpr std::size_t kMemoMaxEntries = 1 << 20;
  // Empty value: no solution.
  std::unordered_map<std::vector<int>, std::vector<int>, KeyHash> memo_;
};

}  // namespace snark
