#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snark {

/// Endpoint value of an edge end that is not attached to a vertex (a semiedge).
inline constexpr int kFree = -1;

/// Refers to one end of an edge: `side` is 0 or 1.
struct EndRef {
  int edge = 0;
  int side = 0;
  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

/// An edge with two ends, each attached to a vertex or free. `label` is an
/// opaque integer attribute (0 = none) carried through junctions; the
/// construction code uses it to transport edge colours.
struct Edge {
  std::array<int, 2> ends{kFree, kFree};
  int label = 0;

  bool is_loop() const { return ends[0] != kFree && ends[0] == ends[1]; }
  bool is_dangling() const { return (ends[0] == kFree) != (ends[1] == kFree); }
  bool is_isolated() const { return ends[0] == kFree && ends[1] == kFree; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

using Connector = std::vector<EndRef>;

struct Incidence {
  int edge;
  int side;
};

class MultipoleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cubic multipole: vertices, edges whose ends may be free, and ordered
/// connectors grouping free ends. Ordinary graphs are 0-poles.
///
/// Edges are kept in canonical order: each edge is oriented so that its
/// smaller endpoint comes first (free ends count as larger than every vertex)
/// and the list is stably sorted by (first end, second end). Connector
/// references are remapped accordingly. Instances are immutable.
class Multipole {
 public:
  Multipole() = default;
  Multipole(int num_vertices, std::vector<Edge> edges,
            std::vector<Connector> connectors = {},
            std::vector<int> vertex_tags = {});

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Connector>& connectors() const { return connectors_; }
  const std::vector<int>& vertex_tags() const { return tags_; }
  int tag(int v) const { return tags_[static_cast<std::size_t>(v)]; }

  /// Edge ends at `v`, ordered by (edge, side). A loop contributes two entries.
  std::span<const Incidence> incident(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  /// The vertex at the other end of `e` as seen from side `side`.
  int other(int e, int side) const { return edge(e).ends[static_cast<std::size_t>(1 - side)]; }

  int num_free_ends() const;
  /// Free ends: connector ends in connector order, then unassigned free ends
  /// in (edge, side) order.
  std::vector<EndRef> boundary_ends() const;
  bool is_cubic() const;
  bool has_free_ends() const { return num_free_ends() > 0; }

  std::vector<int> edge_labels() const;

  friend bool operator==(const Multipole& a, const Multipole& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
           a.connectors_ == b.connectors_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Connector> connectors_;
  std::vector<int> tags_;
  std::vector<int> inc_offset_;
  std::vector<Incidence> inc_;
};

/// A multipole with no free ends.
class Graph {
 public:
  Graph() = default;
  /// Throws MultipoleError if `m` has free ends.
  explicit Graph(Multipole m);

  const Multipole& multipole() const { return m_; }
  int num_vertices() const { return m_.num_vertices(); }
  int num_edges() const { return m_.num_edges(); }
  const Edge& edge(int e) const { return m_.edge(e); }
  const std::vector<Edge>& edges() const { return m_.edges(); }
  std::span<const Incidence> incident(int v) const { return m_.incident(v); }
  int degree(int v) const { return m_.degree(v); }
  bool is_cubic() const { return m_.is_cubic(); }
  bool is_simple() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_; }

 private:
  Multipole m_;
};

/// Builds a graph from an undirected edge list.
Graph make_graph(int num_vertices, std::span<const std::pair<int, int>> edges);
/// Builds a cubic graph from LCF notation (Hamiltonian cycle plus chords).
Graph make_lcf_graph(int num_vertices, std::span<const int> shifts);

struct Diagnostics {
  std::vector<std::string> issues;
  int vertices = 0;
  int edges = 0;
  int free_ends = 0;
  bool ok() const { return issues.empty(); }
};

Diagnostics validate(const Multipole& m);

// ---- construction algebra -------------------------------------------------

/// Vertices of `b` are renumbered after those of `a`; connectors of `a` come
/// first.
Multipole disjoint_union(const Multipole& a, const Multipole& b);

/// Identifies free ends pairwise. Chains through isolated edges are followed,
/// so an isolated edge between two identified ends dissolves into the edge
/// that results. Identified ends leave their connectors; connectors that
/// become empty are removed. Labels along a chain must agree (0 is neutral).
Multipole identify_ends(const Multipole& m, std::span<const std::pair<EndRef, EndRef>> pairs);

/// Positional junction: end i of connector `ca` of `a` is identified with end
/// perm[i] of connector `cb` of `b` (identity when `perm` is empty).
Multipole junction(const Multipole& a, int ca, const Multipole& b, int cb,
                   std::span<const int> perm = {});

/// Detaches the edges at `v` and removes `v`; the released ends form a new
/// connector appended after the existing ones, in incidence order.
Multipole delete_vertex(const Multipole& m, int v);

/// Replaces vertex `v` by `sup`: the i-th end at `v` (incidence order) is
/// identified with free end `assignment[i]` of `sup`. Vertices of `sup` are
/// appended after the remaining vertices of `g`.
Multipole substitute_vertex(const Multipole& g, int v, const Multipole& sup,
                            std::span<const EndRef> assignment);

/// Replaces edge `e` = xy by `sup`: the ends of connector `ca` are attached to
/// x and those of `cb` to y. `ca` and `cb` must partition the free ends of
/// `sup`. x and y keep their ids; their degree changes accordingly.
Multipole substitute_edge(const Multipole& g, int e, const Multipole& sup, int ca, int cb);

/// Cuts each listed edge into two dangling edges. Two connectors are
/// appended: the side-0 halves and the side-1 halves, in the listed order.
Multipole cut_edges(const Multipole& m, std::span<const int> edges);

/// Sub-multipole induced by `vertices` (kept in increasing order and
/// renumbered). Each entry of `connector_edges` is a list of edges leaving the
/// set; each such edge becomes a dangling edge and the list a connector.
Multipole extract(const Multipole& m, std::span<const int> vertices,
                  std::span<const std::vector<int>> connector_edges);

Multipole with_tags(const Multipole& m, int tag);
Multipole with_labels(const Multipole& m, std::span<const int> labels);
/// Reorders the ends inside connector `c`: new position i holds old end perm[i].
Multipole permute_connector(const Multipole& m, int c, std::span<const int> perm);

}  // namespace snark
