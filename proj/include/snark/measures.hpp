#pragma once

#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snark/colouring.hpp"
#include "snark/connectivity.hpp"
#include "snark/exec.hpp"
#include "snark/matchings.hpp"

namespace snark {

class MeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer invariant known to lie in [lo, hi]; hi = INT_MAX if unbounded.
struct Bounded {
  int lo = 0;
  int hi = INT_MAX;
  bool known = false;  // false: not computed at all

  static Bounded exactly(int v) { return {v, v, true}; }
  static Bounded at_least(int v) { return {v, INT_MAX, true}; }
  bool exact() const { return known && lo == hi; }
  std::string str() const;  // "3", ">=3", "3..5" or "?"
};

struct OddnessResult {
  int oddness = 0;
  int witness = -1;  // index of the perfect matching whose complement is optimal
  std::vector<PerfectMatching> matchings;
  std::vector<std::vector<int>> odd_circuits;  // of the witness 2-factor
};

/// Minimum number of odd circuits over all 2-factors. Throws MeasureError on
/// bridged or non-cubic input.
OddnessResult oddness(const Graph& g, Exec exec = Exec::parallel);
OddnessResult oddness(const Graph& g, std::vector<PerfectMatching> matchings, Exec exec = Exec::parallel);

struct ResistanceResult {
  Search status = Search::found;
  int resistance = 0;
  std::vector<int> witness;  // removed edges
};

/// Fewest edges whose removal leaves a colourable graph; subsets are tried by
/// increasing size in lexicographic order. `upper` (if >= 0) is a known upper
/// bound that stops the sweep. `budget` applies to each colourability check.
/// A size with more than 2^21 subsets ends the sweep as undecided.
ResistanceResult resistance(const Graph& g, Exec exec = Exec::parallel, int upper = -1, Budget budget = {});

struct DensityResult {
  int density = 0;
  std::array<int, 2> witness{};  // i <= j
  std::vector<PerfectMatching> matchings;
};

/// Minimum |Mi & Mj| over ordered pairs, equal pairs included; they never
/// decide the minimum when at least two matchings exist.
DensityResult density(const Graph& g, Exec exec = Exec::parallel);
DensityResult density(const Graph& g, std::vector<PerfectMatching> matchings, Exec exec = Exec::parallel);

/// Odd circuits of the 2-factor complementary to matching i, split into
/// C1: inside the core, all edges uncovered;
/// C2: inside the core, with a doubly covered edge;
/// C3: not inside the core.
struct OddCircuitClassification {
  int index = 0;
  int omega_i = 0;
  std::vector<std::vector<int>> c1;
  std::vector<std::vector<int>> c2;
  std::vector<std::vector<int>> c3;
  int e2_in_mi = 0;
  std::vector<int> special;  // vertices on triply covered edges
  bool c3_bound = true;      // |C3| <= |E2 & Mi|
  bool c1_bound = true;      // 3|C1| <= 2|E3|
};

OddCircuitClassification classify_odd_circuits(const Graph& g, const ThreeArray& a, int i);

struct CircuitAudit {
  std::array<OddCircuitClassification, 3> classes;
  bool c1_identical = true;
  bool c2_disjoint = true;   // circuits of C2 over all three factors are pairwise disjoint
  bool c2_bound = true;      // sum |C2_i| <= 2|E3|
  bool aggregate = true;     // sum omega_i <= 4|E3| + 2|E2| == 2|E0|
  bool special_count = true; // |S| == 2|E3|
  bool has_doubly_covered = true;  // required of optimal arrays of snarks only
  bool ok(bool optimal) const;
};

CircuitAudit audit_array_circuits(const Graph& g, const ThreeArray& a);

struct MeasureOptions {
  bool defect = true;
  bool oddness = true;
  bool resistance = true;
  bool density = true;
  bool girth = true;
  bool connectivity = true;
  int connectivity_cap = 5;
  std::size_t matching_limit = 200000;  // above this, matching-based fields are bounds only
  Budget colouring_budget{50'000'000};
  Exec exec = Exec::parallel;
};

struct MeasureReport {
  int vertices = 0;
  int edges = 0;
  bool cubic = false;
  bool bridgeless = false;
  std::optional<bool> colourable;
  std::optional<std::size_t> perfect_matchings;

  Bounded defect;
  Bounded oddness;
  Bounded resistance;
  Bounded density;
  Bounded girth;
  Bounded cyclic_connectivity;

  std::optional<std::array<std::vector<int>, 3>> defect_witness;
  std::optional<Core> core;
  std::optional<std::vector<int>> oddness_witness;  // perfect matching edges
  std::optional<std::vector<int>> resistance_witness;
  std::optional<std::array<std::vector<int>, 2>> density_witness;
  std::optional<std::vector<int>> girth_witness;
  std::optional<EdgeCut> connectivity_witness;
  std::vector<std::string> notes;
  bool incomplete = false;  // a budget or limit left a requested value open

  /// True if some requested field is not exact.
  bool undecided() const;
};

MeasureReport measure(const Graph& g, const MeasureOptions& opt = {});

enum class AuditStatus { pass, fail, skipped, undetermined };
const char* to_string(AuditStatus s);

struct AuditLine {
  std::string name;
  AuditStatus status = AuditStatus::skipped;
  std::optional<double> slack;  // right side minus left side, when both exact
};

/// The inequalities between the invariants: omega <= 2dn, 2dn <= d - 1,
/// d >= 3omega/2, d >= ceil(girth/2), rho <= omega, rho = 2 iff omega = 2.
/// Snark-only inequalities are skipped for colourable graphs; bounds are
/// audited one-sidedly.
std::vector<AuditLine> audit_inequalities(const MeasureReport& r);
bool audit_passed(const std::vector<AuditLine>& lines);

}  // namespace snark
