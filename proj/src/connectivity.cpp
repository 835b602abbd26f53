#include "snark/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <random>

#include "snark/graph_algo.hpp"

namespace snark {

bool is_exceptional_cubic(const Graph& g) {
  if (!g.is_cubic()) return false;
  const int n = g.num_vertices();
  if (n == 2) {
    return std::none_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
  }
  if (n == 4) return g.is_simple();
  if (n == 6) return g.is_simple() && is_bipartite(g.multipole());
  return false;
}

namespace {

// Components of g minus `removed`; fills per-component vertex and edge counts.
struct Split {
  std::vector<int> comp;
  std::vector<int> vertices;
  std::vector<int> edges;
};

Split split_by(const Graph& g, std::span<const char> removed) {
  Split s;
  s.comp = component_ids(g.multipole(), removed);
  int k = 0;
  for (int c : s.comp) k = std::max(k, c + 1);
  s.vertices.assign(static_cast<std::size_t>(k), 0);
  s.edges.assign(static_cast<std::size_t>(k), 0);
  for (int c : s.comp) ++s.vertices[static_cast<std::size_t>(c)];
  for (int e = 0; e < g.num_edges(); ++e) {
    if (removed[static_cast<std::size_t>(e)]) continue;
    ++s.edges[static_cast<std::size_t>(s.comp[static_cast<std::size_t>(g.edge(e).ends[0])])];
  }
  return s;
}

std::optional<EdgeCut> as_witness(const Graph& g, std::span<const int> edges) {
  std::vector<char> removed(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : edges) removed[static_cast<std::size_t>(e)] = 1;
  const Split s = split_by(g, removed);
  int cyclic = 0;
  int first = -1;
  for (std::size_t c = 0; c < s.vertices.size(); ++c) {
    if (s.edges[c] >= s.vertices[c]) {
      ++cyclic;
      if (first < 0) first = static_cast<int>(c);
    }
  }
  if (cyclic < 2) return std::nullopt;
  EdgeCut cut;
  cut.edges.assign(edges.begin(), edges.end());
  std::sort(cut.edges.begin(), cut.edges.end());
  for (int v = 0; v < g.num_vertices(); ++v) {
    (s.comp[static_cast<std::size_t>(v)] == first ? cut.side_a : cut.side_b).push_back(v);
  }
  return cut;
}

void check_input(const Graph& g) {
  if (!g.is_cubic()) throw ConnectivityError("cyclic connectivity needs a cubic graph");
  if (!is_connected(g.multipole())) throw ConnectivityError("cyclic connectivity needs a connected graph");
  if (is_exceptional_cubic(g)) throw ConnectivityError("K4, K3,3 and the theta graph have no cycle-separating cuts");
}

// Finds, for a fixed prefix O, the lexicographically least completion
// O + {x, y} with max(O) < x < y that separates circuits. Every edge cut that
// leaves g - O connected and uses exactly two more edges is found: those two
// edges then carry equal cycle-space labels.
class PairSweep {
 public:
  explicit PairSweep(const Graph& g) : g_(g), m_(g.num_edges()), n_(g.num_vertices()) {
    std::mt19937_64 rng(0x5eedc0ffeeULL);
    rnd_.resize(static_cast<std::size_t>(m_));
    for (auto& r : rnd_) r = rng() | 1;
    removed_.assign(static_cast<std::size_t>(m_), 0);
    label_.assign(static_cast<std::size_t>(m_), 0);
    acc_.assign(static_cast<std::size_t>(n_), 0);
    parent_edge_.assign(static_cast<std::size_t>(n_), -1);
    seen_.assign(static_cast<std::size_t>(n_), 0);
    order_.reserve(static_cast<std::size_t>(n_));
  }

  std::optional<std::vector<int>> run(const std::vector<int>& prefix) {
    for (int e : prefix) removed_[static_cast<std::size_t>(e)] = 1;
    std::optional<std::vector<int>> found;
    if (build_labels()) found = best_pair(prefix);
    for (int e : prefix) removed_[static_cast<std::size_t>(e)] = 0;
    return found;
  }

 private:
  // BFS spanning tree of g - O; false if g - O is disconnected.
  bool build_labels() {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(acc_.begin(), acc_.end(), 0);
    order_.clear();
    order_.push_back(0);
    seen_[0] = 1;
    parent_edge_[0] = -1;
    std::vector<char> tree(static_cast<std::size_t>(m_), 0);
    for (std::size_t h = 0; h < order_.size(); ++h) {
      const int x = order_[h];
      for (const Incidence& inc : g_.incident(x)) {
        if (removed_[static_cast<std::size_t>(inc.edge)]) continue;
        const int y = g_.multipole().other(inc.edge, inc.side);
        if (!seen_[static_cast<std::size_t>(y)]) {
          seen_[static_cast<std::size_t>(y)] = 1;
          parent_edge_[static_cast<std::size_t>(y)] = inc.edge;
          tree[static_cast<std::size_t>(inc.edge)] = 1;
          order_.push_back(y);
        }
      }
    }
    if (static_cast<int>(order_.size()) != n_) return false;
    for (int e = 0; e < m_; ++e) {
      label_[static_cast<std::size_t>(e)] = 0;
      if (removed_[static_cast<std::size_t>(e)] || tree[static_cast<std::size_t>(e)]) continue;
      const Edge& ed = g_.edge(e);
      label_[static_cast<std::size_t>(e)] = rnd_[static_cast<std::size_t>(e)];
      acc_[static_cast<std::size_t>(ed.ends[0])] ^= rnd_[static_cast<std::size_t>(e)];
      acc_[static_cast<std::size_t>(ed.ends[1])] ^= rnd_[static_cast<std::size_t>(e)];
    }
    for (std::size_t h = order_.size(); h-- > 1;) {
      const int x = order_[h];
      const int pe = parent_edge_[static_cast<std::size_t>(x)];
      label_[static_cast<std::size_t>(pe)] = acc_[static_cast<std::size_t>(x)];
      const Edge& ed = g_.edge(pe);
      const int p = ed.ends[0] == x ? ed.ends[1] : ed.ends[0];
      acc_[static_cast<std::size_t>(p)] ^= acc_[static_cast<std::size_t>(x)];
    }
    return true;
  }

  std::optional<std::vector<int>> best_pair(const std::vector<int>& prefix) {
    const int lo = prefix.empty() ? 0 : prefix.back() + 1;
    std::vector<std::pair<std::uint64_t, int>> tagged;
    for (int e = lo; e < m_; ++e) {
      const auto l = label_[static_cast<std::size_t>(e)];
      if (l != 0) tagged.emplace_back(l, e);
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < tagged.size();) {
      std::size_t b = a;
      while (b < tagged.size() && tagged[b].first == tagged[a].first) ++b;
      for (std::size_t i = a; i < b; ++i) {
        for (std::size_t j = i + 1; j < b; ++j) pairs.emplace_back(tagged[i].second, tagged[j].second);
      }
      a = b;
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [x, y] : pairs) {
      std::vector<int> cut = prefix;
      cut.push_back(x);
      cut.push_back(y);
      if (is_cycle_separating(g_, cut)) return cut;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int m_;
  int n_;
  std::vector<std::uint64_t> rnd_;
  std::vector<char> removed_;
  std::vector<std::uint64_t> label_;
  std::vector<std::uint64_t> acc_;
  std::vector<int> parent_edge_;
  std::vector<char> seen_;
  std::vector<int> order_;
};

// Advances `c` to the next (size-t) combination of 0..m-1 that keeps c[0]
// fixed; false when exhausted.
bool next_tail(std::vector<int>& c, int m) {
  const int t = static_cast<int>(c.size());
  for (int i = t - 1; i >= 1; --i) {
    if (c[static_cast<std::size_t>(i)] < m - (t - i)) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> first_cut_with_lead(const Graph& g, PairSweep& sweep, int lead, int t) {
  const int m = g.num_edges();
  std::vector<int> c(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = lead + i;
  if (c.back() >= m) return std::nullopt;
  do {
    if (auto cut = sweep.run(c)) return cut;
  } while (next_tail(c, m));
  return std::nullopt;
}

// Lexicographically least cycle-separating cut of exactly s edges that is
// found by the prefix sweep; every minimum-size cut is among them.
std::optional<std::vector<int>> find_cut_of_size(const Graph& g, int s, Exec exec) {
  if (s == 1) {
    for (int b : bridges(g.multipole())) {
      const std::vector<int> cut{b};
      if (is_cycle_separating(g, cut)) return cut;
    }
    return std::nullopt;
  }
  if (s == 2) {
    PairSweep sweep(g);
    return sweep.run({});
  }
  const int t = s - 2;
  const int m = g.num_edges();
  const int leads = m - t + 1;
  if (leads <= 0) return std::nullopt;
  std::vector<std::optional<std::vector<int>>> per_lead(static_cast<std::size_t>(leads));
  if (exec == Exec::serial) {
    PairSweep sweep(g);
    for (int lead = 0; lead < leads; ++lead) {
      if (auto cut = first_cut_with_lead(g, sweep, lead, t)) return cut;
    }
    return std::nullopt;
  }
  std::atomic<int> done_lead{INT_MAX};
#pragma omp parallel
  {
    PairSweep sweep(g);
#pragma omp for schedule(dynamic, 1)
    for (int lead = 0; lead < leads; ++lead) {
      if (lead > done_lead.load(std::memory_order_relaxed)) continue;
      per_lead[static_cast<std::size_t>(lead)] = first_cut_with_lead(g, sweep, lead, t);
      if (per_lead[static_cast<std::size_t>(lead)]) {
        int cur = done_lead.load();
        while (lead < cur && !done_lead.compare_exchange_weak(cur, lead)) {
        }
      }
    }
  }
  for (auto& r : per_lead) {
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

bool is_cycle_separating(const Graph& g, std::span<const int> edges) { return as_witness(g, edges).has_value(); }

std::optional<EdgeCut> trivial_cut_around_shortest_cycle(const Graph& g) {
  const auto cyc = shortest_cycle(g.multipole());
  if (cyc.empty()) return std::nullopt;
  std::vector<char> inside(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int e : cyc) {
    for (int x : g.edge(e).ends) inside[static_cast<std::size_t>(x)] = 1;
  }
  const auto cut = boundary_edges(g.multipole(), inside);
  return as_witness(g, cut);
}

CyclicConnectivityResult cyclic_connectivity_at_least(const Graph& g, int k, Exec exec) {
  check_input(g);
  CyclicConnectivityResult r;
  if (auto t = trivial_cut_around_shortest_cycle(g); t && static_cast<int>(t->edges.size()) < k) {
    r.holds = false;
    r.witness = std::move(t);
  }
  for (int s = 1; s < k; ++s) {
    if (r.witness && static_cast<int>(r.witness->edges.size()) <= s) break;
    if (auto cut = find_cut_of_size(g, s, exec)) {
      r.holds = false;
      r.witness = as_witness(g, *cut);
      break;
    }
  }
  return r;
}

CyclicConnectivityValue cyclic_edge_connectivity(const Graph& g, int cap, Exec exec) {
  check_input(g);
  CyclicConnectivityValue v;
  for (int s = 1; s < cap; ++s) {
    if (auto cut = find_cut_of_size(g, s, exec)) {
      v.lower = s;
      v.exact = s;
      v.witness = as_witness(g, *cut);
      return v;
    }
  }
  v.lower = cap;
  if (auto t = trivial_cut_around_shortest_cycle(g); t && static_cast<int>(t->edges.size()) == cap) {
    v.exact = cap;
    v.witness = std::move(t);
  }
  return v;
}

}  // namespace snark
