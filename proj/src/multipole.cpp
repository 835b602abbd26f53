#include "snark/multipole.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace snark {

namespace {

int end_key(int end) { return end == kFree ? INT_MAX : end; }

// Mutable working form used by the construction algebra. Connector ends refer
// to raw (pre-canonical) edge indices.
struct Raw {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Connector> connectors;
  std::vector<int> tags;

  explicit Raw(const Multipole& m)
      : n(m.num_vertices()), edges(m.edges()), connectors(m.connectors()), tags(m.vertex_tags()) {}

  Multipole finish() { return Multipole(n, std::move(edges), std::move(connectors), std::move(tags)); }

  void append(const Multipole& b) {
    const int voff = n;
    const int eoff = static_cast<int>(edges.size());
    for (Edge e : b.edges()) {
      for (int& x : e.ends) {
        if (x != kFree) x += voff;
      }
      edges.push_back(e);
    }
    for (Connector c : b.connectors()) {
      for (EndRef& r : c) r.edge += eoff;
      connectors.push_back(std::move(c));
    }
    tags.insert(tags.end(), b.vertex_tags().begin(), b.vertex_tags().end());
    n += b.num_vertices();
  }

  bool is_free(EndRef r) const {
    return r.edge >= 0 && r.edge < static_cast<int>(edges.size()) && (r.side == 0 || r.side == 1) &&
           edges[static_cast<std::size_t>(r.edge)].ends[static_cast<std::size_t>(r.side)] == kFree;
  }

  void drop_ends(const std::set<EndRef>& gone) {
    for (Connector& c : connectors) {
      std::erase_if(c, [&](const EndRef& r) { return gone.count(r) > 0; });
    }
    std::erase_if(connectors, [](const Connector& c) { return c.empty(); });
  }

  // Removes vertices (their incident ends must already be detached or are
  // detached here) and compacts the numbering.
  void remove_vertices(const std::vector<int>& gone) {
    std::vector<int> newid(static_cast<std::size_t>(n), 0);
    std::vector<char> dead(static_cast<std::size_t>(n), 0);
    for (int v : gone) dead[static_cast<std::size_t>(v)] = 1;
    int next = 0;
    std::vector<int> ntags;
    for (int v = 0; v < n; ++v) {
      if (dead[static_cast<std::size_t>(v)]) {
        newid[static_cast<std::size_t>(v)] = kFree;
      } else {
        newid[static_cast<std::size_t>(v)] = next++;
        ntags.push_back(tags[static_cast<std::size_t>(v)]);
      }
    }
    for (Edge& e : edges) {
      for (int& x : e.ends) {
        if (x != kFree) x = newid[static_cast<std::size_t>(x)];
      }
    }
    n = next;
    tags = std::move(ntags);
  }

  void remove_edges(const std::vector<int>& gone) {
    std::vector<int> newid(edges.size(), -1);
    std::vector<char> dead(edges.size(), 0);
    for (int e : gone) dead[static_cast<std::size_t>(e)] = 1;
    std::vector<Edge> kept;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!dead[e]) {
        newid[e] = static_cast<int>(kept.size());
        kept.push_back(edges[e]);
      }
    }
    std::set<EndRef> lost;
    for (Connector& c : connectors) {
      for (EndRef& r : c) {
        if (dead[static_cast<std::size_t>(r.edge)]) lost.insert(r);
      }
    }
    drop_ends(lost);
    for (Connector& c : connectors) {
      for (EndRef& r : c) r.edge = newid[static_cast<std::size_t>(r.edge)];
    }
    edges = std::move(kept);
  }

  void identify(std::span<const std::pair<EndRef, EndRef>> pairs) {
    std::map<EndRef, EndRef> partner;
    for (const auto& [p, q] : pairs) {
      if (!is_free(p) || !is_free(q)) throw MultipoleError("identify_ends: end is not free");
      if (p == q) throw MultipoleError("identify_ends: end identified with itself");
      if (!partner.emplace(p, q).second || !partner.emplace(q, p).second) {
        throw MultipoleError("identify_ends: end used twice");
      }
    }
    const int m = static_cast<int>(edges.size());
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<Edge> out;
    std::map<EndRef, EndRef> moved;  // surviving free end -> new (edge, side)

    auto walk = [&](EndRef start) {
      Edge merged;
      merged.ends[0] = edges[static_cast<std::size_t>(start.edge)].ends[static_cast<std::size_t>(start.side)];
      int label = 0;
      EndRef cur = start;
      for (;;) {
        used[static_cast<std::size_t>(cur.edge)] = 1;
        const int lab = edges[static_cast<std::size_t>(cur.edge)].label;
        if (lab != 0) {
          if (label != 0 && label != lab) throw MultipoleError("identify_ends: label conflict");
          label = lab;
        }
        EndRef far{cur.edge, 1 - cur.side};
        auto it = partner.find(far);
        if (it == partner.end()) {
          merged.ends[1] = edges[static_cast<std::size_t>(far.edge)].ends[static_cast<std::size_t>(far.side)];
          merged.label = label;
          const int id = static_cast<int>(out.size());
          if (merged.ends[0] == kFree) moved[start] = EndRef{id, 0};
          if (merged.ends[1] == kFree) moved[far] = EndRef{id, 1};
          out.push_back(merged);
          return;
        }
        cur = it->second;
        if (used[static_cast<std::size_t>(cur.edge)]) throw MultipoleError("identify_ends: closed chain");
      }
    };

    for (int e = 0; e < m; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      for (int s = 0; s < 2 && !used[static_cast<std::size_t>(e)]; ++s) {
        EndRef r{e, s};
        const bool attached = edges[static_cast<std::size_t>(e)].ends[static_cast<std::size_t>(s)] != kFree;
        if (attached || partner.count(r) == 0) walk(r);
      }
    }
    for (int e = 0; e < m; ++e) {
      if (!used[static_cast<std::size_t>(e)]) throw MultipoleError("identify_ends: identification closes a free circle");
    }
    std::set<EndRef> gone;
    for (const auto& kv : partner) gone.insert(kv.first);
    drop_ends(gone);
    for (Connector& c : connectors) {
      for (EndRef& r : c) r = moved.at(r);
    }
    edges = std::move(out);
  }

  // Ends at v in (edge, side) order, as raw references.
  std::vector<EndRef> ends_at(int v) const {
    std::vector<EndRef> r;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (int s = 0; s < 2; ++s) {
        if (edges[e].ends[static_cast<std::size_t>(s)] == v) r.push_back(EndRef{static_cast<int>(e), s});
      }
    }
    return r;
  }
};

}  // namespace

Multipole::Multipole(int num_vertices, std::vector<Edge> edges, std::vector<Connector> connectors,
                     std::vector<int> vertex_tags)
    : num_vertices_(num_vertices), tags_(std::move(vertex_tags)) {
  if (num_vertices < 0) throw MultipoleError("negative vertex count");
  tags_.resize(static_cast<std::size_t>(num_vertices), 0);
  const std::size_t m = edges.size();
  std::vector<char> flipped(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Edge& e = edges[i];
    if (end_key(e.ends[0]) > end_key(e.ends[1])) {
      std::swap(e.ends[0], e.ends[1]);
      flipped[i] = 1;
    }
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& x = edges[static_cast<std::size_t>(a)];
    const Edge& y = edges[static_cast<std::size_t>(b)];
    return std::pair(end_key(x.ends[0]), end_key(x.ends[1])) <
           std::pair(end_key(y.ends[0]), end_key(y.ends[1]));
  });
  std::vector<int> rank(m);
  edges_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    edges_.push_back(edges[static_cast<std::size_t>(order[i])]);
  }
  connectors_ = std::move(connectors);
  for (Connector& c : connectors_) {
    for (EndRef& r : c) {
      if (r.edge < 0 || r.edge >= static_cast<int>(m)) continue;  // reported by validate()
      if (flipped[static_cast<std::size_t>(r.edge)] && (r.side == 0 || r.side == 1)) r.side = 1 - r.side;
      r.edge = rank[static_cast<std::size_t>(r.edge)];
    }
  }

  std::vector<int> count(static_cast<std::size_t>(num_vertices_) + 1, 0);
  for (const Edge& e : edges_) {
    for (int x : e.ends) {
      if (x >= 0 && x < num_vertices_) ++count[static_cast<std::size_t>(x) + 1];
    }
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  inc_offset_ = count;
  inc_.resize(static_cast<std::size_t>(count.back()));
  std::vector<int> fill(count.begin(), count.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    for (int s = 0; s < 2; ++s) {
      const int x = edges_[static_cast<std::size_t>(e)].ends[static_cast<std::size_t>(s)];
      if (x >= 0 && x < num_vertices_) inc_[static_cast<std::size_t>(fill[static_cast<std::size_t>(x)]++)] = {e, s};
    }
  }
}

std::span<const Incidence> Multipole::incident(int v) const {
  const auto b = static_cast<std::size_t>(inc_offset_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(inc_offset_[static_cast<std::size_t>(v) + 1]);
  return std::span<const Incidence>(inc_.data() + b, e - b);
}

int Multipole::num_free_ends() const {
  int k = 0;
  for (const Edge& e : edges_) k += (e.ends[0] == kFree) + (e.ends[1] == kFree);
  return k;
}

std::vector<EndRef> Multipole::boundary_ends() const {
  std::vector<EndRef> out;
  std::set<EndRef> seen;
  for (const Connector& c : connectors_) {
    for (const EndRef& r : c) {
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    for (int s = 0; s < 2; ++s) {
      if (edges_[static_cast<std::size_t>(e)].ends[static_cast<std::size_t>(s)] == kFree && !seen.count(EndRef{e, s})) {
        out.push_back(EndRef{e, s});
      }
    }
  }
  return out;
}

bool Multipole::is_cubic() const {
  for (int v = 0; v < num_vertices_; ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

std::vector<int> Multipole::edge_labels() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

Graph::Graph(Multipole m) : m_(std::move(m)) {
  if (m_.num_free_ends() != 0) throw MultipoleError("graph has free ends");
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges()) {
    if (e.is_loop() || !seen.insert({e.ends[0], e.ends[1]}).second) return false;
  }
  return true;
}

Graph make_graph(int num_vertices, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) throw MultipoleError("vertex out of range");
    es.push_back(Edge{{a, b}, 0});
  }
  return Graph(Multipole(num_vertices, std::move(es)));
}

Graph make_lcf_graph(int num_vertices, std::span<const int> shifts) {
  std::set<std::pair<int, int>> es;
  for (int i = 0; i < num_vertices; ++i) {
    const int j = (i + 1) % num_vertices;
    es.insert({std::min(i, j), std::max(i, j)});
    const int s = shifts[static_cast<std::size_t>(i) % shifts.size()];
    const int k = ((i + s) % num_vertices + num_vertices) % num_vertices;
    es.insert({std::min(i, k), std::max(i, k)});
  }
  std::vector<std::pair<int, int>> list(es.begin(), es.end());
  return make_graph(num_vertices, list);
}

Diagnostics validate(const Multipole& m) {
  Diagnostics d;
  d.vertices = m.num_vertices();
  d.edges = m.num_edges();
  d.free_ends = m.num_free_ends();
  for (int e = 0; e < m.num_edges(); ++e) {
    for (int x : m.edge(e).ends) {
      if (x != kFree && (x < 0 || x >= m.num_vertices())) {
        d.issues.push_back("edge " + std::to_string(e) + " has endpoint " + std::to_string(x) + " out of range");
      }
    }
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) != 3) {
      d.issues.push_back("vertex " + std::to_string(v) + " has " + std::to_string(m.degree(v)) +
                         " edge-ends (cubicity violation)");
    }
  }
  std::set<EndRef> seen;
  for (std::size_t c = 0; c < m.connectors().size(); ++c) {
    for (const EndRef& r : m.connectors()[c]) {
      std::ostringstream where;
      where << "connector " << c << " end " << r.edge << ":" << r.side;
      if (r.edge < 0 || r.edge >= m.num_edges() || (r.side != 0 && r.side != 1)) {
        d.issues.push_back(where.str() + " refers to no edge end");
      } else if (m.edge(r.edge).ends[static_cast<std::size_t>(r.side)] != kFree) {
        d.issues.push_back(where.str() + " is attached to a vertex");
      } else if (!seen.insert(r).second) {
        d.issues.push_back(where.str() + " assigned to more than one connector position");
      }
    }
  }
  return d;
}

Multipole disjoint_union(const Multipole& a, const Multipole& b) {
  Raw r(a);
  r.append(b);
  return r.finish();
}

Multipole identify_ends(const Multipole& m, std::span<const std::pair<EndRef, EndRef>> pairs) {
  Raw r(m);
  r.identify(pairs);
  return r.finish();
}

Multipole junction(const Multipole& a, int ca, const Multipole& b, int cb, std::span<const int> perm) {
  const auto na = static_cast<int>(a.connectors().size());
  if (ca < 0 || ca >= na || cb < 0 || cb >= static_cast<int>(b.connectors().size())) {
    throw MultipoleError("junction: no such connector");
  }
  const Connector& sa = a.connectors()[static_cast<std::size_t>(ca)];
  const Connector& sb = b.connectors()[static_cast<std::size_t>(cb)];
  if (sa.size() != sb.size()) throw MultipoleError("junction: connector sizes differ");
  if (!perm.empty() && perm.size() != sa.size()) throw MultipoleError("junction: permutation has wrong length");
  Raw r(a);
  const int eoff = a.num_edges();
  r.append(b);
  std::vector<std::pair<EndRef, EndRef>> pairs;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const std::size_t j = perm.empty() ? i : static_cast<std::size_t>(perm[i]);
    if (j >= sb.size()) throw MultipoleError("junction: permutation out of range");
    EndRef q = sb[j];
    q.edge += eoff;
    pairs.emplace_back(sa[i], q);
  }
  r.identify(pairs);
  return r.finish();
}

Multipole delete_vertex(const Multipole& m, int v) {
  if (v < 0 || v >= m.num_vertices()) throw MultipoleError("delete_vertex: no such vertex");
  Raw r(m);
  Connector released;
  for (const Incidence& inc : m.incident(v)) {
    r.edges[static_cast<std::size_t>(inc.edge)].ends[static_cast<std::size_t>(inc.side)] = kFree;
    released.push_back(EndRef{inc.edge, inc.side});
  }
  r.connectors.push_back(std::move(released));
  r.remove_vertices({v});
  return r.finish();
}

Multipole substitute_vertex(const Multipole& g, int v, const Multipole& sup, std::span<const EndRef> assignment) {
  if (v < 0 || v >= g.num_vertices()) throw MultipoleError("substitute_vertex: no such vertex");
  const auto at = g.incident(v);
  if (assignment.size() != at.size()) {
    throw MultipoleError("substitute_vertex: arity mismatch (vertex has " + std::to_string(at.size()) +
                         " ends, " + std::to_string(assignment.size()) + " assigned)");
  }
  std::set<EndRef> distinct(assignment.begin(), assignment.end());
  if (distinct.size() != assignment.size()) throw MultipoleError("substitute_vertex: repeated end in assignment");
  Raw r(g);
  const int eoff = g.num_edges();
  r.append(sup);
  std::vector<std::pair<EndRef, EndRef>> pairs;
  for (std::size_t i = 0; i < at.size(); ++i) {
    r.edges[static_cast<std::size_t>(at[i].edge)].ends[static_cast<std::size_t>(at[i].side)] = kFree;
    EndRef q = assignment[i];
    if (q.edge < 0 || q.edge >= sup.num_edges() || sup.edge(q.edge).ends[static_cast<std::size_t>(q.side)] != kFree) {
      throw MultipoleError("substitute_vertex: assignment refers to a non-free end");
    }
    q.edge += eoff;
    pairs.emplace_back(EndRef{at[i].edge, at[i].side}, q);
  }
  r.remove_vertices({v});
  r.identify(pairs);
  return r.finish();
}

Multipole substitute_edge(const Multipole& g, int e, const Multipole& sup, int ca, int cb) {
  if (e < 0 || e >= g.num_edges()) throw MultipoleError("substitute_edge: no such edge");
  const Edge& old = g.edge(e);
  if (old.is_loop()) throw MultipoleError("substitute_edge: loop edge");
  if (old.ends[0] == kFree || old.ends[1] == kFree) throw MultipoleError("substitute_edge: edge has a free end");
  const auto nc = static_cast<int>(sup.connectors().size());
  if (ca == cb || ca < 0 || cb < 0 || ca >= nc || cb >= nc) throw MultipoleError("substitute_edge: connector misuse");
  const Connector& sa = sup.connectors()[static_cast<std::size_t>(ca)];
  const Connector& sb = sup.connectors()[static_cast<std::size_t>(cb)];
  if (static_cast<int>(sa.size() + sb.size()) != sup.num_free_ends()) {
    throw MultipoleError("substitute_edge: connectors do not partition the free ends");
  }
  Raw r(g);
  const int eoff = g.num_edges();
  r.append(sup);
  std::set<EndRef> consumed;
  for (int k = 0; k < 2; ++k) {
    const Connector& c = k == 0 ? sa : sb;
    for (EndRef q : c) {
      q.edge += eoff;
      if (!r.is_free(q)) throw MultipoleError("substitute_edge: connector end is not free");
      r.edges[static_cast<std::size_t>(q.edge)].ends[static_cast<std::size_t>(q.side)] = old.ends[static_cast<std::size_t>(k)];
      consumed.insert(q);
    }
  }
  r.drop_ends(consumed);
  r.remove_edges({e});
  return r.finish();
}

Multipole cut_edges(const Multipole& m, std::span<const int> edges) {
  Raw r(m);
  Connector side0;
  Connector side1;
  std::set<int> seen;
  for (int e : edges) {
    if (e < 0 || e >= m.num_edges() || !seen.insert(e).second) throw MultipoleError("cut_edges: bad edge list");
    Edge& old = r.edges[static_cast<std::size_t>(e)];
    if (old.ends[0] == kFree || old.ends[1] == kFree) throw MultipoleError("cut_edges: edge already has a free end");
    Edge half{{old.ends[1], kFree}, old.label};
    old.ends[1] = kFree;
    side0.push_back(EndRef{e, 1});
    side1.push_back(EndRef{static_cast<int>(r.edges.size()), 1});
    r.edges.push_back(half);
  }
  r.connectors.push_back(std::move(side0));
  r.connectors.push_back(std::move(side1));
  return r.finish();
}

Multipole extract(const Multipole& m, std::span<const int> vertices, std::span<const std::vector<int>> connector_edges) {
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> newid(static_cast<std::size_t>(m.num_vertices()), kFree);
  for (std::size_t i = 0; i < keep.size(); ++i) newid[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::map<int, int> boundary_slot;  // edge -> connector index
  for (std::size_t c = 0; c < connector_edges.size(); ++c) {
    for (int e : connector_edges[c]) {
      if (!boundary_slot.emplace(e, static_cast<int>(c)).second) throw MultipoleError("extract: edge listed twice");
    }
  }
  std::vector<Edge> edges;
  std::map<int, int> placed;  // original edge -> new edge
  std::vector<Connector> conns(connector_edges.size());
  std::vector<int> tags;
  for (int v : keep) tags.push_back(m.tag(v));
  for (int e = 0; e < m.num_edges(); ++e) {
    const Edge& old = m.edge(e);
    const int a = old.ends[0] == kFree ? kFree : newid[static_cast<std::size_t>(old.ends[0])];
    const int b = old.ends[1] == kFree ? kFree : newid[static_cast<std::size_t>(old.ends[1])];
    const bool ina = a != kFree;
    const bool inb = b != kFree;
    if (ina && inb) {
      edges.push_back(Edge{{a, b}, old.label});
    } else if (ina || inb) {
      auto slot = boundary_slot.find(e);
      if (slot == boundary_slot.end()) throw MultipoleError("extract: leaving edge " + std::to_string(e) + " not in any connector");
      placed[e] = static_cast<int>(edges.size());
      edges.push_back(Edge{{ina ? a : b, kFree}, old.label});
    }
  }
  for (std::size_t c = 0; c < connector_edges.size(); ++c) {
    for (int e : connector_edges[c]) {
      auto it = placed.find(e);
      if (it == placed.end()) throw MultipoleError("extract: connector edge " + std::to_string(e) + " does not leave the set");
      conns[c].push_back(EndRef{it->second, 1});
    }
  }
  return Multipole(static_cast<int>(keep.size()), std::move(edges), std::move(conns), std::move(tags));
}

Multipole with_tags(const Multipole& m, int tag) {
  return Multipole(m.num_vertices(), m.edges(), m.connectors(), std::vector<int>(static_cast<std::size_t>(m.num_vertices()), tag));
}

Multipole with_labels(const Multipole& m, std::span<const int> labels) {
  if (labels.size() != static_cast<std::size_t>(m.num_edges())) throw MultipoleError("with_labels: size mismatch");
  std::vector<Edge> edges = m.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].label = labels[e];
  return Multipole(m.num_vertices(), std::move(edges), m.connectors(), m.vertex_tags());
}

Multipole permute_connector(const Multipole& m, int c, std::span<const int> perm) {
  if (c < 0 || c >= static_cast<int>(m.connectors().size())) throw MultipoleError("permute_connector: no such connector");
  const Connector& old = m.connectors()[static_cast<std::size_t>(c)];
  if (perm.size() != old.size()) throw MultipoleError("permute_connector: wrong length");
  std::vector<Connector> conns = m.connectors();
  Connector next;
  for (int p : perm) next.push_back(old.at(static_cast<std::size_t>(p)));
  conns[static_cast<std::size_t>(c)] = std::move(next);
  return Multipole(m.num_vertices(), m.edges(), std::move(conns), m.vertex_tags());
}

}  // namespace snark
