#pragma once

#include <optional>
#include <span>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

/// BFS distances in edges; -1 when unreachable. Free ends are ignored.
std::vector<int> bfs_distances(const Multipole& m, int source);

/// Component id per vertex, numbered in order of least vertex. Edges with
/// `removed[e] != 0` are skipped; vertices with `dead[v] != 0` get id -1.
std::vector<int> component_ids(const Multipole& m, std::span<const char> removed = {},
                               std::span<const char> dead = {});
int count_components(const Multipole& m);
bool is_connected(const Multipole& m);

/// Length of a shortest circuit, ignoring free ends (loops 1, parallel
/// pairs 2). Empty for forests.
std::optional<int> multipole_girth(const Multipole& m);
/// Throws std::domain_error on forest input.
int girth(const Graph& g);
/// Edge indices of one shortest circuit in traversal order.
std::vector<int> shortest_cycle(const Multipole& m);

/// True iff the graph with the listed vertices removed has no circuit.
bool is_decycling(const Multipole& m, std::span<const int> vertices);
bool is_acyclic(const Multipole& m, std::span<const char> removed_edges = {}, std::span<const char> dead = {});

bool is_bipartite(const Multipole& m);
std::vector<int> bridges(const Multipole& m);
bool is_bridgeless(const Multipole& m);

/// Edges with exactly one end in `vertices` (as a membership mask).
std::vector<int> boundary_edges(const Multipole& m, std::span<const char> inside);

/// The vertex set of each circuit of a 2-regular spanning subgraph given by
/// an edge mask, as edge lists in traversal order starting from the least
/// vertex of each circuit; circuits sorted by least vertex.
std::vector<std::vector<int>> circuits_of_2factor(const Multipole& m, std::span<const char> in_factor);

}  // namespace snark
