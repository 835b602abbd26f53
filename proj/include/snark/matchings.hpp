#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "snark/exec.hpp"
#include "snark/flow_search.hpp"
#include "snark/multipole.hpp"

namespace snark {

/// Fixed-size bit set over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}
  static EdgeSet of(int size, std::span<const int> edges);

  int size() const { return size_; }
  bool test(int e) const { return (words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1U; }
  void set(int e) { words_[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(int e) { words_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  int count() const;
  std::vector<int> members() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  EdgeSet operator|(const EdgeSet& o) const;
  EdgeSet operator&(const EdgeSet& o) const;
  int count_and(const EdgeSet& o) const;
  int count_or(const EdgeSet& o) const;
  int count_minus(const EdgeSet& o) const;  // |this \ o|
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.members() <=> b.members(); }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

using PerfectMatching = EdgeSet;

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_perfect_matching(const Multipole& m, const EdgeSet& s);

/// All perfect matchings, sorted lexicographically by their sorted edge
/// lists. Loops never belong to a matching. With `limit` > 0, throws
/// MatchingError if more than `limit` matchings exist.
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g, std::size_t limit = 0);

/// The first matching (canonical order) containing `e`; throws MatchingError
/// if none exists.
PerfectMatching matching_through_edge(const Graph& g, int e);

/// A multiset of three perfect matchings with its coverage classes.
class ThreeArray {
 public:
  ThreeArray(const Graph& g, std::array<PerfectMatching, 3> ms);

  const std::array<PerfectMatching, 3>& matchings() const { return ms_; }
  const PerfectMatching& matching(int i) const { return ms_[static_cast<std::size_t>(i)]; }
  /// Number of members containing edge e.
  int coverage(int e) const { return cover_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& coverage() const { return cover_; }
  /// Edges covered exactly i times.
  const EdgeSet& E(int i) const { return classes_[static_cast<std::size_t>(i)]; }
  int uncovered() const { return classes_[0].count(); }
  /// |E0| == |E2| + 2|E3|.
  bool bookkeeping_holds() const;

 private:
  std::array<PerfectMatching, 3> ms_;
  std::vector<int> cover_;
  std::array<EdgeSet, 4> classes_;
};

struct DefectResult {
  int defect = 0;
  std::array<int, 3> witness{};  // indices into the matching list, i <= j <= k
  std::vector<PerfectMatching> matchings;
  std::uint64_t triples_examined = 0;
  ThreeArray array(const Graph& g) const;
};

/// Colouring defect: minimum |E0| over all multisets of three perfect
/// matchings, with the lexicographically least optimal index triple as
/// witness. Throws MatchingError if the graph has no perfect matching.
DefectResult defect(const Graph& g, Exec exec = Exec::parallel);
/// Same, over a precomputed canonical matching list.
DefectResult defect(const Graph& g, std::vector<PerfectMatching> matchings, Exec exec = Exec::parallel);

enum class CoreKind { even_circuit, odd_circuit, subdivision };
const char* to_string(CoreKind k);

struct CoreComponent {
  std::vector<int> vertices;
  std::vector<int> edges;
  CoreKind kind = CoreKind::even_circuit;
};

struct Core {
  std::vector<int> edges;  // E0 + E2 + E3
  std::vector<CoreComponent> components;
  bool cyclic = false;     // no triply covered edge
  bool audit_ok = true;    // incidence pattern at every core vertex
  std::vector<std::string> audit_issues;
};

Core core_of(const ThreeArray& a, const Graph& g);

/// phi label of each edge as a bit mask: bit i set iff the edge lies in
/// matching i+1. 0 is the empty label and 7 is "123".
struct PhiLabels {
  std::vector<int> mask;
  bool proper_colouring = false;  // labels are single colours only and proper
};
PhiLabels phi_of(const ThreeArray& a, const Graph& g);
std::string phi_label_string(int mask);

struct FanRaspaudResult {
  Search status = Search::none;
  std::optional<std::array<int, 3>> witness;
  std::vector<PerfectMatching> matchings;
};

/// First index triple i <= j <= k (lexicographic) whose matchings have empty
/// common intersection; `budget.nodes` bounds the triples examined.
FanRaspaudResult fan_raspaud_array(const Graph& g, Budget budget = {});

}  // namespace snark
