#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snark/cages.hpp"
#include "snark/certificate.hpp"
#include "snark/colouring.hpp"
#include "snark/exec.hpp"
#include "snark/multipole.hpp"

namespace snark {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outer cycle 0..4, inner pentagram 5+i ~ 5+(i+2)%5, spokes i ~ 5+i.
Graph petersen_graph();

/// Fixed labellings of the Petersen copies.
struct PetersenLabels {
  // In P1 and P3: u_i, v_i, w_i, pairwise at distance 2.
  std::array<int, 3> uvw{8, 0, 2};
  // In P2: the edges x1x2 and x3x4.
  std::array<int, 4> x{0, 1, 3, 8};
  // Base graph: v0..v5 along the 6-cycle C; e_i joins v_i and v_(i+1).
  std::array<int, 6> cycle{0, 1, 2, 3, 8, 5};
  // Centre of the spanning tree P - E(C), and its neighbour next to v2, v5.
  int v = 9;
  int u = 7;
};

inline constexpr PetersenLabels kLabels{};

/// K: P1, P2 - {x1x2, x3x4} and P3 glued at four 5-valent vertices.
/// Vertex ids: P1 vertex i is i, the six remaining vertices of P2 are 10..15
/// in increasing order, P3 vertex i is 16 + i. Tags equal ids.
struct KStructure {
  Multipole k;
  std::array<int, 4> z{};  // z1..z4
  int u1 = 0;
  int u3 = 0;
  std::vector<int> decycling;  // W + {u1, u3}
};

/// Throws ConstructionError if a labelling condition fails.
KStructure build_K();

/// The 5-pole obtained from a cage by removing a path of length 2: the
/// least-index edge and its least-index extension.
struct FivePole {
  Multipole pole;           // one connector: two ends per path endpoint, then the middle end
  std::array<int, 3> path{};  // endpoint, middle, endpoint (cage vertex ids)
  std::array<bool, 5> from_middle{};
  int girth = 0;            // of the pole; 0 if acyclic
};

FivePole make_Mg(const CageEntry& l);

/// One vertex z with its three ends in connectors A, B, C, and two isolated
/// edges each with one end in A and one in B:
/// A = [z, iso1, iso2], B = [z, iso1, iso2], C = [z].
Multipole build_Z();

struct ConstructionPlan {
  int girth = 6;
  std::string cage;       // registry name
  std::string cage_path;  // user file; overrides `cage`
  std::uint64_t seed = 0;

  // Recorded by the build.
  std::array<int, 2> s_pattern{-1, -1};            // position of colour 2 in S1, S2 of K - {u1,u3}
  std::array<std::vector<int>, 4> k_attachment;    // per z_k: pole end taken by each incident end
  std::array<std::vector<int>, 4> base_attachment; // per v0, v1, v3, v4
  std::vector<int> base_colouring;                 // on the Petersen edges
  std::array<std::array<int, 3>, 4> sigma{};       // colour maps of the superedges on e1, e2, e4, e5
};

/// A (3,3)-pole F_g with connectors S1, S2 coloured 2,1,1 by `colouring`.
struct Superedge {
  Multipole dipole;
  EdgeColouring colouring;
};

/// Records s_pattern and k_attachment in `plan`.
Superedge build_Fg(const FivePole& m, ConstructionPlan& plan, Exec exec = Exec::parallel);

struct Construction {
  Graph graph;
  Bundle bundle;
  ConstructionPlan plan;
  FivePole pole;
  Superedge superedge;
  int u = -1;
  int v = -1;
};

/// Even girth with a bipartite cage: all certificates including the
/// near-colouring and the resulting oddness claim.
Construction assemble_Gtilde(ConstructionPlan plan, Exec exec = Exec::parallel);
/// Odd girth >= 7: snark, girth and connectivity certificates only.
Construction build_for_odd_girth(ConstructionPlan plan, Exec exec = Exec::parallel);
/// Dispatches on the girth; girth 5 is refused with guidance.
Construction build_snark(ConstructionPlan plan, Exec exec = Exec::parallel);

/// Plan as JSON. Attachments present in a parsed plan are replayed: the
/// build fails if it derives different ones.
std::string plan_to_json(const ConstructionPlan& p);
ConstructionPlan parse_plan(std::string_view text);

}  // namespace snark
