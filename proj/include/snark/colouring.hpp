#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "snark/exec.hpp"
#include "snark/flow_search.hpp"
#include "snark/multipole.hpp"

namespace snark {

// Colours are the nonzero elements of Z2 x Z2 encoded as 1=(0,1), 2=(1,0),
// 3=(1,1); addition is XOR and 0 is the neutral element.

/// Per-edge colour, 0 where unassigned.
using EdgeColouring = std::vector<int>;
/// One colour per free end, in Multipole::boundary_ends() order.
using BoundaryVector = std::vector<int>;

class ColouringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int klein_sum(std::span<const int> colours);
/// True iff the colours sum to 0.
bool parity_check(std::span<const int> colours);

/// XOR of the values on the ends at each vertex; a loop contributes 0.
std::vector<int> flow_residual(const Multipole& m, std::span<const int> values);
/// Vertices with nonzero residual.
std::vector<int> residual_support(const Multipole& m, std::span<const int> values);
/// Proper: values in {1,2,3}, distinct colours at every vertex.
bool is_proper_colouring(const Multipole& m, std::span<const int> colours);
bool is_nowhere_zero_flow(const Multipole& m, std::span<const int> values);

/// Throws ColouringError unless `colours` is a proper colouring of a cubic
/// multipole; the flow carries the same values.
std::vector<int> colouring_to_flow(const Multipole& m, std::span<const int> colours);
/// Empty if some value is 0 or Kirchhoff's law fails somewhere.
std::optional<EdgeColouring> flow_to_colouring(const Multipole& m, std::span<const int> flow);

struct ColouringResult {
  Search status = Search::none;
  EdgeColouring colours;
  std::uint64_t nodes = 0;
  bool found() const { return status == Search::found; }
};

/// Lexicographically least proper 3-edge-colouring of a cubic multipole
/// consistent with `boundary` and `partial`; status none if there is none.
/// Non-cubic input or a loop yields none. Throws ColouringError for
/// malformed constraints (wrong length, value outside 0..3, or a partial
/// assignment that is already improper at some vertex).
ColouringResult find_colouring(const Multipole& m, const std::optional<BoundaryVector>& boundary = std::nullopt,
                               const EdgeColouring* partial = nullptr, Budget budget = {});
/// Nowhere-zero Klein-group flow for any vertex degrees.
ColouringResult find_nowhere_zero_flow(const Multipole& m, Budget budget = {});

/// Decides colourability; throws std::runtime_error when the budget runs out.
bool is_colourable(const Multipole& m, Budget budget = {});

struct Spectrum {
  std::vector<BoundaryVector> vectors;  // sorted
  bool exact = true;                    // false if some candidate was undecided
  std::uint64_t nodes = 0;
  std::size_t candidates = 0;           // boundaries searched after the parity filter
};

/// All boundary vectors realised by proper colourings. Candidates failing the
/// Parity Lemma are discarded before search.
Spectrum boundary_spectrum(const Multipole& m, Exec exec = Exec::parallel, Budget per_candidate = {});

/// Total flow through a dipole: the colour sum over its first connector.
int total_flow(const Multipole& dipole, const BoundaryVector& b);

struct DipoleCheck {
  bool proper = false;
  bool exact = true;
  Spectrum spectrum;
  std::optional<BoundaryVector> offending;  // a vector with zero total flow
};

/// Proper iff every realisable boundary vector has nonzero total flow.
/// Throws ColouringError unless the multipole has exactly two connectors
/// covering all free ends.
DipoleCheck is_proper_dipole(const Multipole& f, Exec exec = Exec::parallel);

/// Boundary positions of each connector within a BoundaryVector.
std::vector<std::vector<int>> connector_positions(const Multipole& m);

enum class Strictness { strict, lenient };

/// Removes the vertices of `h`; edges to removed vertices become dangling.
Multipole remove_vertices(const Multipole& m, std::span<const int> h);

/// True iff g - V(h) is not colourable. In strict mode a colourable `g` is
/// rejected with ColouringError. Throws std::runtime_error when the budget
/// runs out.
bool is_removable(const Graph& g, std::span<const int> h, Strictness mode = Strictness::strict, Budget budget = {});

}  // namespace snark
