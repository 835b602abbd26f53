#include "snark/matchings.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <tuple>

namespace snark {

EdgeSet EdgeSet::of(int size, std::span<const int> edges) {
  EdgeSet s(size);
  for (int e : edges) s.set(e);
  return s;
}

int EdgeSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> EdgeSet::members() const {
  std::vector<int> out;
  for (int e = 0; e < size_; ++e) {
    if (test(e)) out.push_back(e);
  }
  return out;
}

EdgeSet EdgeSet::operator|(const EdgeSet& o) const {
  EdgeSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

EdgeSet EdgeSet::operator&(const EdgeSet& o) const {
  EdgeSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

int EdgeSet::count_and(const EdgeSet& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

int EdgeSet::count_or(const EdgeSet& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] | o.words_[i]);
  return c;
}

int EdgeSet::count_minus(const EdgeSet& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~o.words_[i]);
  return c;
}

bool is_perfect_matching(const Multipole& m, const EdgeSet& s) {
  if (s.size() != m.num_edges()) return false;
  std::vector<int> hits(static_cast<std::size_t>(m.num_vertices()), 0);
  for (int e : s.members()) {
    const Edge& ed = m.edge(e);
    if (ed.is_loop() || ed.ends[0] == kFree || ed.ends[1] == kFree) return false;
    ++hits[static_cast<std::size_t>(ed.ends[0])];
    ++hits[static_cast<std::size_t>(ed.ends[1])];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

struct MatchingEnum {
  const Graph& g;
  std::size_t limit;
  std::vector<char> covered;
  std::vector<int> chosen;
  std::vector<PerfectMatching> out;

  void run(int from) {
    int v = from;
    while (v < g.num_vertices() && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == g.num_vertices()) {
      out.push_back(EdgeSet::of(g.num_edges(), chosen));
      if (limit != 0 && out.size() > limit) throw MatchingError("more than " + std::to_string(limit) + " perfect matchings");
      return;
    }
    for (const Incidence& inc : g.incident(v)) {
      const int y = g.multipole().other(inc.edge, inc.side);
      if (y == v || covered[static_cast<std::size_t>(y)]) continue;
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(y)] = 1;
      chosen.push_back(inc.edge);
      run(v + 1);
      chosen.pop_back();
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(y)] = 0;
    }
  }
};

bool lex_less(const PerfectMatching& a, const PerfectMatching& b) {
  // Compare sorted member lists: the first differing edge decides.
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // matchings of one graph have equal size, so the set holding the least
    // differing edge comes first
    return (wa[i] & low) != 0;
  }
  return false;
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g, std::size_t limit) {
  if (g.num_vertices() % 2 != 0) return {};
  MatchingEnum en{g, limit, std::vector<char>(static_cast<std::size_t>(g.num_vertices()), 0), {}, {}};
  en.run(0);
  std::sort(en.out.begin(), en.out.end(), lex_less);
  return std::move(en.out);
}

PerfectMatching matching_through_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw MatchingError("no such edge");
  if (g.edge(e).is_loop()) throw MatchingError("a loop lies in no perfect matching");
  for (auto& pm : enumerate_perfect_matchings(g)) {
    if (pm.test(e)) return pm;
  }
  throw MatchingError("no perfect matching contains edge " + std::to_string(e));
}

ThreeArray::ThreeArray(const Graph& g, std::array<PerfectMatching, 3> ms) : ms_(std::move(ms)) {
  for (const auto& pm : ms_) {
    if (!is_perfect_matching(g.multipole(), pm)) throw MatchingError("array member is not a perfect matching");
  }
  const int m = g.num_edges();
  cover_.assign(static_cast<std::size_t>(m), 0);
  for (auto& c : classes_) c = EdgeSet(m);
  for (int e = 0; e < m; ++e) {
    int c = 0;
    for (const auto& pm : ms_) c += pm.test(e) ? 1 : 0;
    cover_[static_cast<std::size_t>(e)] = c;
    classes_[static_cast<std::size_t>(c)].set(e);
  }
}

bool ThreeArray::bookkeeping_holds() const {
  return E(0).count() == E(2).count() + 2 * E(3).count();
}

ThreeArray DefectResult::array(const Graph& g) const {
  return ThreeArray(g, {matchings[static_cast<std::size_t>(witness[0])], matchings[static_cast<std::size_t>(witness[1])],
                        matchings[static_cast<std::size_t>(witness[2])]});
}

namespace {

void atomic_min(std::atomic<int>& a, int v) {
  int cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

DefectResult defect_serial(const Graph& g, std::vector<PerfectMatching> pms) {
  DefectResult r;
  const int m = g.num_edges();
  const int half = g.num_vertices() / 2;
  const int np = static_cast<int>(pms.size());
  int best = INT_MAX;
  for (int i = 0; i < np && best > 0; ++i) {
    for (int j = i; j < np && best > 0; ++j) {
      const EdgeSet u = pms[static_cast<std::size_t>(i)] | pms[static_cast<std::size_t>(j)];
      const int uc = u.count();
      if (m - uc - half >= best) continue;
      for (int k = j; k < np; ++k) {
        ++r.triples_examined;
        const int d = m - uc - pms[static_cast<std::size_t>(k)].count_minus(u);
        if (d < best) {
          best = d;
          r.witness = {i, j, k};
          if (d == 0) break;
        }
      }
    }
  }
  r.defect = best;
  r.matchings = std::move(pms);
  return r;
}

DefectResult defect_parallel(const Graph& g, std::vector<PerfectMatching> pms) {
  const int m = g.num_edges();
  const int half = g.num_vertices() / 2;
  const int np = static_cast<int>(pms.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(np) * static_cast<std::size_t>(np + 1) / 2);
  for (int i = 0; i < np; ++i) {
    for (int j = i; j < np; ++j) pairs.emplace_back(i, j);
  }
  std::atomic<int> best{INT_MAX};
  std::atomic<int> zero_pair{INT_MAX};
  using Key = std::tuple<int, int, int>;  // (d, pair, k)
  Key global{INT_MAX, INT_MAX, INT_MAX};
  std::uint64_t examined = 0;
  const auto npairs = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel
  {
    Key local{INT_MAX, INT_MAX, INT_MAX};
    std::uint64_t seen = 0;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t p = 0; p < npairs; ++p) {
      if (p > zero_pair.load(std::memory_order_relaxed)) continue;
      const auto [i, j] = pairs[static_cast<std::size_t>(p)];
      const EdgeSet u = pms[static_cast<std::size_t>(i)] | pms[static_cast<std::size_t>(j)];
      const int uc = u.count();
      if (m - uc - half > best.load(std::memory_order_relaxed)) continue;
      for (int k = j; k < np; ++k) {
        ++seen;
        const int d = m - uc - pms[static_cast<std::size_t>(k)].count_minus(u);
        const Key key{d, static_cast<int>(p), k};
        if (key < local) local = key;
        atomic_min(best, d);
        if (d == 0) {
          atomic_min(zero_pair, static_cast<int>(p));
          break;
        }
      }
    }
#pragma omp critical
    {
      if (local < global) global = local;
      examined += seen;
    }
  }
  DefectResult r;
  r.defect = std::get<0>(global);
  const auto [i, j] = pairs[static_cast<std::size_t>(std::get<1>(global))];
  r.witness = {i, j, std::get<2>(global)};
  r.triples_examined = examined;
  r.matchings = std::move(pms);
  return r;
}

}  // namespace

DefectResult defect(const Graph& g, std::vector<PerfectMatching> matchings, Exec exec) {
  if (matchings.empty()) throw MatchingError("defect is undefined without a perfect matching");
  return exec == Exec::parallel ? defect_parallel(g, std::move(matchings)) : defect_serial(g, std::move(matchings));
}

DefectResult defect(const Graph& g, Exec exec) { return defect(g, enumerate_perfect_matchings(g), exec); }

const char* to_string(CoreKind k) {
  switch (k) {
    case CoreKind::even_circuit: return "even-circuit";
    case CoreKind::odd_circuit: return "odd-circuit";
    case CoreKind::subdivision: return "subdivision";
  }
  return "?";
}

Core core_of(const ThreeArray& a, const Graph& g) {
  Core core;
  const int n = g.num_vertices();
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (a.coverage(e) != 1) {
      in[static_cast<std::size_t>(e)] = 1;
      core.edges.push_back(e);
    }
  }
  core.cyclic = a.E(3).count() == 0;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    bool touches = false;
    for (const Incidence& inc : g.incident(s)) touches = touches || in[static_cast<std::size_t>(inc.edge)];
    if (!touches) continue;
    CoreComponent cc;
    std::vector<int> stack{s};
    const int id = static_cast<int>(core.components.size());
    comp[static_cast<std::size_t>(s)] = id;
    std::vector<char> edge_seen(static_cast<std::size_t>(g.num_edges()), 0);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      cc.vertices.push_back(x);
      for (const Incidence& inc : g.incident(x)) {
        if (!in[static_cast<std::size_t>(inc.edge)]) continue;
        if (!edge_seen[static_cast<std::size_t>(inc.edge)]) {
          edge_seen[static_cast<std::size_t>(inc.edge)] = 1;
          cc.edges.push_back(inc.edge);
        }
        const int y = g.multipole().other(inc.edge, inc.side);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cc.vertices.begin(), cc.vertices.end());
    std::sort(cc.edges.begin(), cc.edges.end());
    bool has3 = false;
    for (int x : cc.vertices) {
      int deg = 0;
      int c0 = 0;
      int c2 = 0;
      int c3 = 0;
      for (const Incidence& inc : g.incident(x)) {
        if (!in[static_cast<std::size_t>(inc.edge)]) continue;
        ++deg;
        const int c = a.coverage(inc.edge);
        c0 += c == 0;
        c2 += c == 2;
        c3 += c == 3;
      }
      if (deg == 3) has3 = true;
      const bool ok = (deg == 2 && c0 == 1 && c2 == 1) || (deg == 3 && c3 == 1 && c0 == 2);
      if (!ok) {
        core.audit_ok = false;
        core.audit_issues.push_back("vertex " + std::to_string(x) + " has core degree " + std::to_string(deg) +
                                    " with coverage counts 0:" + std::to_string(c0) + " 2:" + std::to_string(c2) +
                                    " 3:" + std::to_string(c3));
      }
    }
    if (has3) {
      cc.kind = CoreKind::subdivision;
    } else {
      cc.kind = cc.edges.size() % 2 == 0 ? CoreKind::even_circuit : CoreKind::odd_circuit;
    }
    if (cc.kind == CoreKind::odd_circuit) {
      core.audit_ok = false;
      core.audit_issues.push_back("odd circuit component in core");
    }
    core.components.push_back(std::move(cc));
  }
  return core;
}

PhiLabels phi_of(const ThreeArray& a, const Graph& g) {
  PhiLabels p;
  p.mask.assign(static_cast<std::size_t>(g.num_edges()), 0);
  for (int i = 0; i < 3; ++i) {
    for (int e : a.matching(i).members()) p.mask[static_cast<std::size_t>(e)] |= 1 << i;
  }
  bool proper = true;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (std::popcount(static_cast<unsigned>(p.mask[static_cast<std::size_t>(e)])) != 1) proper = false;
  }
  if (proper) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      int seen = 0;
      for (const Incidence& inc : g.incident(v)) seen |= p.mask[static_cast<std::size_t>(inc.edge)];
      if (seen != 7) proper = false;
    }
  }
  p.proper_colouring = proper;
  return p;
}

std::string phi_label_string(int mask) {
  if (mask == 0) return "-";
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (mask & (1 << i)) s.push_back(static_cast<char>('1' + i));
  }
  return s;
}

FanRaspaudResult fan_raspaud_array(const Graph& g, Budget budget) {
  FanRaspaudResult r;
  r.matchings = enumerate_perfect_matchings(g);
  const int np = static_cast<int>(r.matchings.size());
  std::uint64_t examined = 0;
  for (int i = 0; i < np; ++i) {
    for (int j = i; j < np; ++j) {
      const EdgeSet ij = r.matchings[static_cast<std::size_t>(i)] & r.matchings[static_cast<std::size_t>(j)];
      for (int k = j; k < np; ++k) {
        if (budget.nodes != 0 && examined >= budget.nodes) {
          r.status = Search::undecided;
          return r;
        }
        ++examined;
        if (ij.count_and(r.matchings[static_cast<std::size_t>(k)]) == 0) {
          r.status = Search::found;
          r.witness = std::array<int, 3>{i, j, k};
          return r;
        }
      }
    }
  }
  r.status = Search::none;
  return r;
}

}  // namespace snark
