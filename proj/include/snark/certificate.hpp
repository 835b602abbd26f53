#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snark/colouring.hpp"
#include "snark/exec.hpp"
#include "snark/multipole.hpp"

namespace snark {

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One superedge: the vertices of class `cls` form a dipole whose first
/// connector consists of the edges to base vertex base_edge[0] and whose
/// second connector consists of the edges to base_edge[1]. An edge joining
/// two superedges whose base edges meet at w counts as an edge to w on both
/// sides (an isolated edge of a supervertex that dissolved in a junction).
struct SuperedgeWitness {
  std::array<int, 2> base_edge{};
  int cls = 0;
  std::vector<BoundaryVector> spectrum;  // sorted
};

/// Evidence that g is uncolourable by projection onto an uncolourable base.
/// classes[x] is a base vertex id, or the class id of a superedge (ids of
/// superedge classes are at least base.num_vertices()).
struct SnarkCertificate {
  Graph base;
  std::vector<int> classes;
  std::vector<SuperedgeWitness> superedges;
};

struct CertificateCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Sub-dipole of superedge `index` with connector ends ordered by their
/// inner vertex; labels cleared.
Multipole superedge_dipole(const Graph& g, const SnarkCertificate& c, int index);

/// Checks that contracting each class yields the base graph, that every
/// stored spectrum equals the recomputed one and has nonzero total flow
/// throughout, and that the base has no nowhere-zero Klein flow. Throws
/// CertificateError if the class vector does not fit g.
CertificateCheck check_snark_certificate(const Graph& g, const SnarkCertificate& c, Exec exec = Exec::parallel);
bool certify_snark(const Graph& g, const SnarkCertificate& c, Exec exec = Exec::parallel);

/// A colouring that is a proper colouring of g except at u and v, where
/// Kirchhoff's law fails; deleting the witness edges (one at u, one at v)
/// leaves a properly coloured graph.
struct NearColouring {
  int u = -1;
  int v = -1;
  EdgeColouring colours;
  std::array<int, 2> resistance_witness{-1, -1};
};

struct Bundle {
  std::string checksum;
  int vertices = 0;
  int girth = 0;
  std::vector<int> girth_cycle;
  SnarkCertificate snark;
  int connectivity_at_least = 5;
  std::optional<NearColouring> near_colouring;
  std::optional<int> oddness;
  std::optional<int> resistance;
  int defect_at_least = 0;
};

struct VerifyItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// One item per certificate. Throws CertificateError on checksum mismatch.
std::vector<VerifyItem> verify_bundle(const Graph& g, const Bundle& b, Exec exec = Exec::parallel);

std::string bundle_to_json(const Bundle& b);
/// Throws CertificateError on malformed input.
Bundle parse_bundle(std::string_view text);

std::string colouring_to_text(const Graph& g, const EdgeColouring& c);
/// Throws CertificateError on malformed input.
EdgeColouring parse_colouring(std::string_view text, const Graph& g);

}  // namespace snark
