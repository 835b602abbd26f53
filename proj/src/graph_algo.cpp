#include "snark/graph_algo.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

namespace snark {

namespace {

bool skip(std::span<const char> mask, int i) {
  return !mask.empty() && mask[static_cast<std::size_t>(i)] != 0;
}

}  // namespace

std::vector<int> bfs_distances(const Multipole& m, int source) {
  std::vector<int> dist(static_cast<std::size_t>(m.num_vertices()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (const Incidence& inc : m.incident(x)) {
      const int y = m.other(inc.edge, inc.side);
      if (y != kFree && dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> component_ids(const Multipole& m, std::span<const char> removed, std::span<const char> dead) {
  const int n = m.num_vertices();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (id[static_cast<std::size_t>(s)] >= 0 || skip(dead, s)) continue;
    id[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : m.incident(x)) {
        if (skip(removed, inc.edge)) continue;
        const int y = m.other(inc.edge, inc.side);
        if (y == kFree || skip(dead, y) || id[static_cast<std::size_t>(y)] >= 0) continue;
        id[static_cast<std::size_t>(y)] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  return id;
}

int count_components(const Multipole& m) {
  const auto id = component_ids(m);
  return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

bool is_connected(const Multipole& m) { return count_components(m) <= 1; }

namespace {

struct GirthHit {
  int length = INT_MAX;
  int source = -1;
  int edge = -1;  // closing edge
};

GirthHit girth_search(const Multipole& m) {
  GirthHit best;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (m.edge(e).is_loop()) return GirthHit{1, m.edge(e).ends[0], e};
  }
  const int n = m.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> via(static_cast<std::size_t>(n));
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    via[static_cast<std::size_t>(s)] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    q[tail++] = s;
    while (head < tail) {
      const int x = q[head++];
      const int dx = dist[static_cast<std::size_t>(x)];
      if (2 * dx + 1 >= best.length) break;
      for (const Incidence& inc : m.incident(x)) {
        if (inc.edge == via[static_cast<std::size_t>(x)]) continue;
        const int y = m.other(inc.edge, inc.side);
        if (y == kFree) continue;
        const int dy = dist[static_cast<std::size_t>(y)];
        if (dy < 0) {
          dist[static_cast<std::size_t>(y)] = dx + 1;
          via[static_cast<std::size_t>(y)] = inc.edge;
          q[tail++] = y;
        } else if (dy >= dx) {
          const int len = dx + dy + 1;
          if (len < best.length) best = GirthHit{len, s, inc.edge};
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> multipole_girth(const Multipole& m) {
  const GirthHit h = girth_search(m);
  if (h.length == INT_MAX) return std::nullopt;
  return h.length;
}

int girth(const Graph& g) {
  const auto r = multipole_girth(g.multipole());
  if (!r) throw std::domain_error("girth of a forest is undefined");
  return *r;
}

std::vector<int> shortest_cycle(const Multipole& m) {
  const GirthHit h = girth_search(m);
  if (h.length == INT_MAX) return {};
  if (h.length == 1) return {h.edge};
  // Rebuild BFS tree from the source and join the two tree paths.
  const int n = m.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(h.source)] = 0;
  q.push(h.source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (const Incidence& inc : m.incident(x)) {
      const int y = m.other(inc.edge, inc.side);
      if (y != kFree && dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        via[static_cast<std::size_t>(y)] = inc.edge;
        q.push(y);
      }
    }
  }
  auto path_up = [&](int x) {
    std::vector<int> p;
    while (x != h.source) {
      const int e = via[static_cast<std::size_t>(x)];
      p.push_back(e);
      const Edge& ed = m.edge(e);
      x = ed.ends[0] == x ? ed.ends[1] : ed.ends[0];
    }
    return p;
  };
  const Edge& close = m.edge(h.edge);
  std::vector<int> a = path_up(close.ends[0]);
  std::vector<int> b = path_up(close.ends[1]);
  std::vector<int> cycle(a.rbegin(), a.rend());
  cycle.push_back(h.edge);
  cycle.insert(cycle.end(), b.begin(), b.end());
  return cycle;
}

bool is_acyclic(const Multipole& m, std::span<const char> removed_edges, std::span<const char> dead) {
  // A forest has (#vertices - #components) edges.
  const auto id = component_ids(m, removed_edges, dead);
  int vertices = 0;
  int comps = 0;
  for (int x : id) {
    if (x >= 0) {
      ++vertices;
      comps = std::max(comps, x + 1);
    }
  }
  int edges = 0;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (skip(removed_edges, e)) continue;
    const Edge& ed = m.edge(e);
    if (ed.ends[0] == kFree || ed.ends[1] == kFree) continue;
    if (skip(dead, ed.ends[0]) || skip(dead, ed.ends[1])) continue;
    ++edges;
  }
  return edges == vertices - comps;
}

bool is_decycling(const Multipole& m, std::span<const int> vertices) {
  std::vector<char> dead(static_cast<std::size_t>(m.num_vertices()), 0);
  for (int v : vertices) dead.at(static_cast<std::size_t>(v)) = 1;
  return is_acyclic(m, {}, dead);
}

bool is_bipartite(const Multipole& m) {
  const int n = m.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : m.incident(x)) {
        const int y = m.other(inc.edge, inc.side);
        if (y == kFree) continue;
        if (side[static_cast<std::size_t>(y)] < 0) {
          side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> bridges(const Multipole& m) {
  const int n = m.num_vertices();
  std::vector<int> tin(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  int timer = 0;
  struct Frame {
    int v;
    int via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < n; ++s) {
    if (tin[static_cast<std::size_t>(s)] >= 0) continue;
    tin[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = m.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence in = inc[f.next++];
        if (in.edge == f.via) continue;
        const int y = m.other(in.edge, in.side);
        if (y == kFree) continue;
        if (tin[static_cast<std::size_t>(y)] >= 0) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], tin[static_cast<std::size_t>(y)]);
        } else {
          tin[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = timer++;
          stack.push_back({y, in.edge, 0});
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[static_cast<std::size_t>(p.v)] = std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > tin[static_cast<std::size_t>(p.v)]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bridgeless(const Multipole& m) { return bridges(m).empty(); }

std::vector<int> boundary_edges(const Multipole& m, std::span<const char> inside) {
  std::vector<int> out;
  for (int e = 0; e < m.num_edges(); ++e) {
    const Edge& ed = m.edge(e);
    const bool a = ed.ends[0] != kFree && inside[static_cast<std::size_t>(ed.ends[0])];
    const bool b = ed.ends[1] != kFree && inside[static_cast<std::size_t>(ed.ends[1])];
    if (a != b) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> circuits_of_2factor(const Multipole& m, std::span<const char> in_factor) {
  const int n = m.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> cyc;
    int x = s;
    int prev = -1;
    for (;;) {
      seen[static_cast<std::size_t>(x)] = 1;
      int step = -1;
      for (const Incidence& inc : m.incident(x)) {
        if (!in_factor[static_cast<std::size_t>(inc.edge)] || inc.edge == prev) continue;
        step = inc.edge;
        break;
      }
      if (step < 0) throw std::invalid_argument("edge set is not a 2-factor");
      cyc.push_back(step);
      prev = step;
      const Edge& ed = m.edge(step);
      x = ed.ends[0] == x ? ed.ends[1] : ed.ends[0];
      if (x == s) break;
      if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("edge set is not a 2-factor");
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace snark
