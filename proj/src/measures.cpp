#include "snark/measures.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <tuple>

#include "snark/graph_algo.hpp"

namespace snark {

std::string Bounded::str() const {
  if (!known) return "?";
  if (lo == hi) return std::to_string(lo);
  if (hi == INT_MAX) return ">=" + std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

namespace {

int odd_circuits_of_complement(const Graph& g, const PerfectMatching& pm, std::vector<std::vector<int>>* out) {
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e = 0; e < g.num_edges(); ++e) in[static_cast<std::size_t>(e)] = pm.test(e) ? 0 : 1;
  int odd = 0;
  for (auto& c : circuits_of_2factor(g.multipole(), in)) {
    if (c.size() % 2 == 1) {
      ++odd;
      if (out) out->push_back(std::move(c));
    }
  }
  return odd;
}

void require_bridgeless_cubic(const Graph& g, const char* what) {
  if (!g.is_cubic()) throw MeasureError(std::string(what) + " needs a cubic graph");
  if (!is_bridgeless(g.multipole())) throw MeasureError(std::string(what) + " is defined for bridgeless graphs only");
}

}  // namespace

OddnessResult oddness(const Graph& g, std::vector<PerfectMatching> pms, Exec exec) {
  require_bridgeless_cubic(g, "oddness");
  if (pms.empty()) throw MeasureError("graph has no perfect matching");
  const auto np = static_cast<std::int64_t>(pms.size());
  std::vector<int> odd(pms.size(), 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < np; ++i) {
      odd[static_cast<std::size_t>(i)] = odd_circuits_of_complement(g, pms[static_cast<std::size_t>(i)], nullptr);
    }
  } else {
    for (std::int64_t i = 0; i < np; ++i) {
      odd[static_cast<std::size_t>(i)] = odd_circuits_of_complement(g, pms[static_cast<std::size_t>(i)], nullptr);
    }
  }
  OddnessResult r;
  const auto it = std::min_element(odd.begin(), odd.end());
  r.oddness = *it;
  if (r.oddness % 2 != 0) throw std::logic_error("odd number of odd circuits in a 2-factor");
  r.witness = static_cast<int>(it - odd.begin());
  odd_circuits_of_complement(g, pms[static_cast<std::size_t>(r.witness)], &r.odd_circuits);
  r.matchings = std::move(pms);
  return r;
}

OddnessResult oddness(const Graph& g, Exec exec) {
  require_bridgeless_cubic(g, "oddness");
  return oddness(g, enumerate_perfect_matchings(g), exec);
}

namespace {

std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  if (k > m) return out;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

constexpr double kMaxSubsets = 1 << 21;

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Search colourable_without(const Graph& g, const std::vector<int>& edges, Budget budget) {
  const Multipole cut = edges.empty() ? g.multipole() : cut_edges(g.multipole(), edges);
  return find_colouring(cut, std::nullopt, nullptr, budget).status;
}

}  // namespace

ResistanceResult resistance(const Graph& g, Exec exec, int upper, Budget budget) {
  if (!g.is_cubic()) throw MeasureError("resistance needs a cubic graph");
  ResistanceResult r;
  const int m = g.num_edges();
  const int top = upper >= 0 ? std::min(upper, m) : m;
  constexpr std::size_t kBatch = 256;
  for (int k = 0; k <= top; ++k) {
    if (binomial(m, k) > kMaxSubsets) {
      r.status = Search::undecided;
      r.resistance = k;
      return r;
    }
    const auto subsets = combinations(m, k);
    bool undecided = false;
    for (std::size_t start = 0; start < subsets.size(); start += kBatch) {
      const std::size_t stop = std::min(subsets.size(), start + kBatch);
      std::vector<char> st(stop - start, 0);
      const auto count = static_cast<std::int64_t>(stop - start);
      auto check = [&](std::int64_t i) {
        const Search s = colourable_without(g, subsets[start + static_cast<std::size_t>(i)], budget);
        st[static_cast<std::size_t>(i)] = s == Search::found ? 1 : (s == Search::undecided ? 2 : 0);
      };
      if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i) check(i);
      } else {
        for (std::int64_t i = 0; i < count; ++i) check(i);
      }
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i] == 2) undecided = true;
        if (st[i] == 1) {
          r.resistance = k;
          r.witness = subsets[start + i];
          r.status = undecided ? Search::undecided : Search::found;
          return r;
        }
      }
    }
    if (undecided) {
      r.status = Search::undecided;
      r.resistance = k;
      return r;
    }
  }
  r.status = Search::none;
  r.resistance = top + 1;
  return r;
}

DensityResult density(const Graph&, std::vector<PerfectMatching> pms, Exec exec) {
  if (pms.empty()) throw MeasureError("density is undefined without a perfect matching");
  const int np = static_cast<int>(pms.size());
  using Key = std::tuple<int, int, int>;
  Key best{INT_MAX, INT_MAX, INT_MAX};
  auto row = [&](int i) {
    Key local{INT_MAX, INT_MAX, INT_MAX};
    for (int j = i; j < np; ++j) {
      const Key k{pms[static_cast<std::size_t>(i)].count_and(pms[static_cast<std::size_t>(j)]), i, j};
      if (k < local) local = k;
    }
    return local;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      Key local{INT_MAX, INT_MAX, INT_MAX};
#pragma omp for schedule(dynamic, 4)
      for (int i = 0; i < np; ++i) local = std::min(local, row(i));
#pragma omp critical
      best = std::min(best, local);
    }
  } else {
    for (int i = 0; i < np; ++i) best = std::min(best, row(i));
  }
  DensityResult r;
  r.density = std::get<0>(best);
  r.witness = {std::get<1>(best), std::get<2>(best)};
  r.matchings = std::move(pms);
  return r;
}

DensityResult density(const Graph& g, Exec exec) { return density(g, enumerate_perfect_matchings(g), exec); }

OddCircuitClassification classify_odd_circuits(const Graph& g, const ThreeArray& a, int i) {
  OddCircuitClassification c;
  c.index = i;
  const PerfectMatching& mi = a.matching(i);
  std::vector<std::vector<int>> odd;
  c.omega_i = odd_circuits_of_complement(g, mi, &odd);
  for (auto& circ : odd) {
    const bool in_core = std::all_of(circ.begin(), circ.end(), [&](int e) { return a.coverage(e) != 1; });
    if (!in_core) {
      c.c3.push_back(std::move(circ));
    } else if (std::all_of(circ.begin(), circ.end(), [&](int e) { return a.coverage(e) == 0; })) {
      c.c1.push_back(std::move(circ));
    } else {
      c.c2.push_back(std::move(circ));
    }
  }
  for (int e : a.E(2).members()) c.e2_in_mi += mi.test(e) ? 1 : 0;
  std::set<int> special;
  for (int e : a.E(3).members()) {
    for (int x : g.edge(e).ends) special.insert(x);
  }
  c.special.assign(special.begin(), special.end());
  c.c3_bound = static_cast<int>(c.c3.size()) <= c.e2_in_mi;
  c.c1_bound = 3 * static_cast<int>(c.c1.size()) <= 2 * a.E(3).count();
  return c;
}

bool CircuitAudit::ok(bool optimal) const {
  for (const auto& c : classes) {
    if (!c.c1_bound || !c.c3_bound) return false;
  }
  return c1_identical && c2_disjoint && c2_bound && aggregate && special_count && (!optimal || has_doubly_covered);
}

CircuitAudit audit_array_circuits(const Graph& g, const ThreeArray& a) {
  CircuitAudit au;
  for (int i = 0; i < 3; ++i) au.classes[static_cast<std::size_t>(i)] = classify_odd_circuits(g, a, i);
  auto canon = [](std::vector<std::vector<int>> cs) {
    for (auto& c : cs) std::sort(c.begin(), c.end());
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  const auto c1 = canon(au.classes[0].c1);
  au.c1_identical = canon(au.classes[1].c1) == c1 && canon(au.classes[2].c1) == c1;
  std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
  int c2_total = 0;
  int id = 0;
  for (const auto& cl : au.classes) {
    for (const auto& circ : cl.c2) {
      ++c2_total;
      for (int e : circ) {
        for (int x : g.edge(e).ends) {
          int& o = owner[static_cast<std::size_t>(x)];
          if (o >= 0 && o != id) au.c2_disjoint = false;
          o = id;
        }
      }
      ++id;
    }
  }
  const int e2 = a.E(2).count();
  const int e3 = a.E(3).count();
  au.c2_bound = c2_total <= 2 * e3;
  int omega_sum = 0;
  for (const auto& cl : au.classes) omega_sum += cl.omega_i;
  au.aggregate = omega_sum <= 4 * e3 + 2 * e2 && 4 * e3 + 2 * e2 == 2 * a.E(0).count();
  au.special_count = static_cast<int>(au.classes[0].special.size()) == 2 * e3;
  au.has_doubly_covered = e2 > 0 || a.E(0).count() == 0;
  return au;
}

bool MeasureReport::undecided() const {
  if (incomplete) return true;
  for (const Bounded* b : {&defect, &oddness, &resistance, &density, &girth}) {
    if (b->known && !b->exact()) return true;
  }
  return false;
}

MeasureReport measure(const Graph& g, const MeasureOptions& opt) {
  MeasureReport r;
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  r.cubic = g.is_cubic();
  r.bridgeless = is_bridgeless(g.multipole());

  if (opt.girth) {
    if (const auto cyc = shortest_cycle(g.multipole()); !cyc.empty()) {
      r.girth = Bounded::exactly(static_cast<int>(cyc.size()));
      r.girth_witness = cyc;
    } else {
      r.notes.push_back("girth: graph is a forest");
    }
  }

  if (r.cubic) {
    const auto c = find_colouring(g.multipole(), std::nullopt, nullptr, opt.colouring_budget);
    if (c.status != Search::undecided) r.colourable = c.found();
    else r.incomplete = true;
  }

  std::optional<std::vector<PerfectMatching>> pms;
  const bool need_pms = opt.defect || opt.oddness || opt.density;
  if (need_pms && r.cubic) {
    try {
      pms = enumerate_perfect_matchings(g, opt.matching_limit);
      r.perfect_matchings = pms->size();
    } catch (const MatchingError&) {
      r.notes.push_back("more than " + std::to_string(opt.matching_limit) + " perfect matchings: matching-based fields are bounds");
    }
  }
  const bool snark = r.colourable.has_value() && !*r.colourable;

  if (opt.defect) {
    if (pms && !pms->empty()) {
      const auto d = defect(g, *pms, opt.exec);
      r.defect = Bounded::exactly(d.defect);
      const ThreeArray arr = d.array(g);
      r.defect_witness = std::array<std::vector<int>, 3>{arr.matching(0).members(), arr.matching(1).members(),
                                                          arr.matching(2).members()};
      r.core = core_of(arr, g);
    } else if (pms) {
      r.notes.push_back("defect: no perfect matching");
    } else if (r.colourable) {
      r.defect = *r.colourable ? Bounded::exactly(0) : Bounded::at_least(3);
    }
  }

  if (opt.oddness) {
    if (!r.bridgeless || !r.cubic) {
      r.notes.push_back("oddness: defined for bridgeless cubic graphs only");
    } else if (pms && !pms->empty()) {
      const auto o = oddness(g, *pms, opt.exec);
      r.oddness = Bounded::exactly(o.oddness);
      r.oddness_witness = o.matchings[static_cast<std::size_t>(o.witness)].members();
    } else if (r.colourable) {
      r.oddness = *r.colourable ? Bounded::exactly(0) : Bounded::at_least(2);
    }
  }

  if (opt.density) {
    if (pms && !pms->empty()) {
      const auto dn = density(g, *pms, opt.exec);
      r.density = Bounded::exactly(dn.density);
      r.density_witness = std::array<std::vector<int>, 2>{
          dn.matchings[static_cast<std::size_t>(dn.witness[0])].members(),
          dn.matchings[static_cast<std::size_t>(dn.witness[1])].members()};
    } else if (r.colourable && *r.colourable) {
      r.density = Bounded::exactly(0);
    }
  }

  if (opt.resistance && r.cubic) {
    const auto rho = resistance(g, opt.exec, -1, opt.colouring_budget);
    if (rho.status == Search::found) {
      r.resistance = Bounded::exactly(rho.resistance);
      r.resistance_witness = rho.witness;
    } else {
      r.resistance = Bounded::at_least(rho.resistance);
    }
  }

  if (opt.connectivity) {
    if (!r.cubic || !is_connected(g.multipole())) {
      r.notes.push_back("cyclic connectivity: needs a connected cubic graph");
    } else if (is_exceptional_cubic(g)) {
      r.notes.push_back("cyclic connectivity: exceptional graph without cycle-separating cuts");
    } else {
      const auto cc = cyclic_edge_connectivity(g, opt.connectivity_cap, opt.exec);
      r.cyclic_connectivity = cc.exact ? Bounded::exactly(*cc.exact) : Bounded::at_least(cc.lower);
      r.connectivity_witness = cc.witness;
    }
  }
  if (snark && !r.bridgeless) r.notes.push_back("uncolourable but has a bridge");
  return r;
}

const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::pass: return "pass";
    case AuditStatus::fail: return "fail";
    case AuditStatus::skipped: return "skipped";
    case AuditStatus::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Interval arithmetic on [lo, hi] with hi possibly unbounded.
struct Iv {
  long long lo;
  long long hi;  // LLONG_MAX = unbounded
};

Iv iv(const Bounded& b) { return {b.lo, b.hi == INT_MAX ? LLONG_MAX : b.hi}; }
Iv scale(Iv a, long long k) { return {a.lo * k, a.hi == LLONG_MAX ? LLONG_MAX : a.hi * k}; }
Iv shift(Iv a, long long c) { return {a.lo + c, a.hi == LLONG_MAX ? LLONG_MAX : a.hi + c}; }

// left <= right
AuditLine compare(std::string name, Iv left, Iv right, double unit) {
  AuditLine l{std::move(name), AuditStatus::undetermined, std::nullopt};
  if (left.hi != LLONG_MAX && left.hi <= right.lo) {
    l.status = AuditStatus::pass;
  } else if (right.hi != LLONG_MAX && left.lo > right.hi) {
    l.status = AuditStatus::fail;
  }
  if (left.lo == left.hi && right.lo == right.hi) l.slack = static_cast<double>(right.lo - left.lo) / unit;
  return l;
}

}  // namespace

std::vector<AuditLine> audit_inequalities(const MeasureReport& r) {
  std::vector<AuditLine> out;
  const bool bridgeless = r.cubic && r.bridgeless;
  const bool snark = bridgeless && r.colourable.has_value() && !*r.colourable;
  auto skip = [&](std::string name) { out.push_back({std::move(name), AuditStatus::skipped, std::nullopt}); };
  auto have = [](std::initializer_list<const Bounded*> bs) {
    return std::all_of(bs.begin(), bs.end(), [](const Bounded* b) { return b->known; });
  };

  const std::string n1 = "oddness <= 2*density";
  if (bridgeless && have({&r.oddness, &r.density})) {
    out.push_back(compare(n1, iv(r.oddness), scale(iv(r.density), 2), 1));
  } else {
    skip(n1);
  }
  const std::string n2 = "2*density <= defect-1";
  if (snark && have({&r.density, &r.defect})) {
    out.push_back(compare(n2, scale(iv(r.density), 2), shift(iv(r.defect), -1), 1));
  } else {
    skip(n2);
  }
  const std::string n3 = "defect >= 3*oddness/2";
  if (bridgeless && have({&r.oddness, &r.defect})) {
    out.push_back(compare(n3, scale(iv(r.oddness), 3), scale(iv(r.defect), 2), 2));
  } else {
    skip(n3);
  }
  const std::string n4 = "defect >= ceil(girth/2)";
  if (snark && have({&r.girth, &r.defect})) {
    const Iv g = iv(r.girth);
    const Iv half{(g.lo + 1) / 2, g.hi == LLONG_MAX ? LLONG_MAX : (g.hi + 1) / 2};
    out.push_back(compare(n4, half, iv(r.defect), 1));
  } else {
    skip(n4);
  }
  const std::string n5 = "resistance <= oddness";
  if (bridgeless && have({&r.resistance, &r.oddness})) {
    out.push_back(compare(n5, iv(r.resistance), iv(r.oddness), 1));
  } else {
    skip(n5);
  }
  const std::string n6 = "resistance = 2 iff oddness = 2";
  if (bridgeless && r.resistance.exact() && r.oddness.exact()) {
    out.push_back({n6, (r.resistance.lo == 2) == (r.oddness.lo == 2) ? AuditStatus::pass : AuditStatus::fail, std::nullopt});
  } else {
    skip(n6);
  }
  return out;
}

bool audit_passed(const std::vector<AuditLine>& lines) {
  return std::none_of(lines.begin(), lines.end(), [](const AuditLine& l) { return l.status == AuditStatus::fail; });
}

}  // namespace snark
