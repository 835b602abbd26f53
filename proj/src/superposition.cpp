#include "snark/superposition.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "snark/flow_search.hpp"
#include "snark/graph_algo.hpp"
#include "snark/graph_io.hpp"

namespace snark {

using nlohmann::json;

Graph petersen_graph() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return make_graph(10, es);
}

namespace {

constexpr int kPoleTag = 100;
constexpr int kSuperedgeClass = 10;

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

int vertex_with_tag(const Multipole& m, int tag) {
  int found = -1;
  for (int x = 0; x < m.num_vertices(); ++x) {
    if (m.tag(x) == tag) {
      require(found < 0, "tag " + std::to_string(tag) + " is not unique");
      found = x;
    }
  }
  require(found >= 0, "no vertex tagged " + std::to_string(tag));
  return found;
}

int edge_between_tags(const Multipole& m, int ta, int tb) {
  int found = -1;
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [a, b] = m.edge(e).ends;
    if (a == kFree || b == kFree) continue;
    const int x = m.tag(a);
    const int y = m.tag(b);
    if ((x == ta && y == tb) || (x == tb && y == ta)) {
      require(found < 0, "several edges between tags");
      found = e;
    }
  }
  require(found >= 0, "no edge between tags " + std::to_string(ta) + " and " + std::to_string(tb));
  return found;
}

int petersen_edge(const Graph& p, int a, int b) {
  for (int e = 0; e < p.num_edges(); ++e) {
    const auto [x, y] = p.edge(e).ends;
    if ((x == a && y == b) || (x == b && y == a)) return e;
  }
  throw ConstructionError("no Petersen edge " + std::to_string(a) + "-" + std::to_string(b));
}

// Colours a copy of the pole so that its boundary carries the multiset of
// `wanted` and returns, for each entry of `wanted`, the pole end position
// with that colour.
struct PoleAttachment {
  EdgeColouring colouring;
  std::vector<int> positions;
};

PoleAttachment attach_pole(const FivePole& m, const Spectrum& spec, const std::vector<int>& wanted) {
  auto key = wanted;
  std::sort(key.begin(), key.end());
  for (const auto& beta : spec.vectors) {
    auto sorted = beta;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != key) continue;
    const auto col = find_colouring(m.pole, beta);
    require(col.found(), "pole spectrum vector without colouring");
    PoleAttachment a{col.colours, {}};
    std::vector<char> used(beta.size(), 0);
    for (int c : wanted) {
      std::size_t p = 0;
      while (used[p] || beta[p] != c) ++p;
      used[p] = 1;
      a.positions.push_back(static_cast<int>(p));
    }
    return a;
  }
  throw ConstructionError("no colouring of the 5-pole matches the boundary colours; the cage is unusable");
}

Multipole relabel(const Multipole& m, const std::array<int, 3>& sigma) {
  auto labels = m.edge_labels();
  for (int& l : labels) l = l == 0 ? 0 : sigma[static_cast<std::size_t>(l - 1)];
  return with_labels(m, labels);
}

}  // namespace

KStructure build_K() {
  const Graph p = petersen_graph();
  const PetersenLabels& L = kLabels;
  auto dist = [&](int a, int b) { return bfs_distances(p.multipole(), a)[static_cast<std::size_t>(b)]; };
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) require(dist(L.uvw[static_cast<std::size_t>(i)], L.uvw[static_cast<std::size_t>(j)]) == 2, "K: u, v, w not at distance 2");
  }
  require(dist(L.x[0], L.x[1]) == 1 && dist(L.x[2], L.x[3]) == 1, "K: x1x2 or x3x4 is not an edge");
  for (int i = 0; i < 2; ++i) {
    for (int j = 2; j < 4; ++j) require(dist(L.x[static_cast<std::size_t>(i)], L.x[static_cast<std::size_t>(j)]) == 2, "K: x endvertices not at distance 2");
  }
  require(is_decycling(p.multipole(), L.uvw), "K: {u, v, w} is not decycling");
  require(is_decycling(p.multipole(), L.x), "K: {x1, x2, x3, x4} is not decycling");

  std::vector<int> m2(10, -1);
  m2[static_cast<std::size_t>(L.x[0])] = L.uvw[1];
  m2[static_cast<std::size_t>(L.x[1])] = L.uvw[2];
  m2[static_cast<std::size_t>(L.x[2])] = 16 + L.uvw[1];
  m2[static_cast<std::size_t>(L.x[3])] = 16 + L.uvw[2];
  int next = 10;
  for (int x = 0; x < 10; ++x) {
    if (m2[static_cast<std::size_t>(x)] < 0) m2[static_cast<std::size_t>(x)] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : p.edges()) edges.push_back({{e.ends[0], e.ends[1]}, 0});
  for (const auto& e : p.edges()) {
    const auto [a, b] = e.ends;
    const std::set<int> ab{a, b};
    if (ab == std::set<int>{L.x[0], L.x[1]} || ab == std::set<int>{L.x[2], L.x[3]}) continue;
    edges.push_back({{m2[static_cast<std::size_t>(a)], m2[static_cast<std::size_t>(b)]}, 0});
  }
  for (const auto& e : p.edges()) edges.push_back({{16 + e.ends[0], 16 + e.ends[1]}, 0});
  std::vector<int> tags(26);
  for (int i = 0; i < 26; ++i) tags[static_cast<std::size_t>(i)] = i;

  KStructure k;
  k.k = Multipole(26, std::move(edges), {}, tags);
  k.z = {L.uvw[1], L.uvw[2], 16 + L.uvw[1], 16 + L.uvw[2]};
  k.u1 = L.uvw[0];
  k.u3 = 16 + L.uvw[0];
  k.decycling = {k.z[0], k.z[1], k.z[2], k.z[3], k.u1, k.u3};
  std::sort(k.decycling.begin(), k.decycling.end());
  for (int x = 0; x < 26; ++x) {
    const bool five = std::find(k.z.begin(), k.z.end(), x) != k.z.end();
    require(k.k.degree(x) == (five ? 5 : 3), "K: wrong degree at vertex " + std::to_string(x));
  }
  require(is_decycling(k.k, k.decycling), "K: U is not decycling");
  return k;
}

FivePole make_Mg(const CageEntry& l) {
  const Multipole& g = l.graph.multipole();
  require(l.girth >= 6, "cage girth must be at least 6");
  const auto [a, b] = g.edge(0).ends;
  int ext = -1;
  for (int e = 1; e < g.num_edges() && ext < 0; ++e) {
    const auto [x, y] = g.edge(e).ends;
    if (x == a || y == a || x == b || y == b) ext = e;
  }
  const auto [x, y] = g.edge(ext).ends;
  const int mid = (x == a || y == a) ? a : b;
  const int p0 = mid == a ? b : a;
  const int p2 = x == mid ? y : x;

  FivePole f;
  f.path = {p0, mid, p2};
  std::vector<int> conn;
  for (int end : {p0, p2, mid}) {
    std::vector<int> es;
    for (const auto& inc : g.incident(end)) {
      const int o = g.other(inc.edge, inc.side);
      if (o != p0 && o != mid && o != p2) es.push_back(inc.edge);
    }
    std::sort(es.begin(), es.end());
    conn.insert(conn.end(), es.begin(), es.end());
  }
  require(conn.size() == 5, "path removal does not leave five dangling edges");
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v != p0 && v != mid && v != p2) keep.push_back(v);
  }
  const std::vector<std::vector<int>> conns{conn};
  f.pole = extract(g, keep, conns);
  f.from_middle = {false, false, false, false, true};
  f.girth = multipole_girth(f.pole).value_or(0);
  return f;
}

Multipole build_Z() {
  std::vector<Edge> edges{
      {{0, kFree}, 0}, {{0, kFree}, 0}, {{0, kFree}, 0}, {{kFree, kFree}, 0}, {{kFree, kFree}, 0}};
  std::vector<Connector> conns{
      {{0, 1}, {3, 0}, {4, 0}},
      {{1, 1}, {3, 1}, {4, 1}},
      {{2, 1}},
  };
  return Multipole(1, std::move(edges), std::move(conns));
}

Superedge build_Fg(const FivePole& m, ConstructionPlan& plan, Exec exec) {
  const KStructure k = build_K();
  Multipole kp = delete_vertex(k.k, k.u1);
  kp = delete_vertex(kp, vertex_with_tag(kp, k.u3));
  const Spectrum spec = boundary_spectrum(m.pole, exec);
  require(!spec.vectors.empty(), "the 5-pole has no colouring; the cage is unusable");

  // A nowhere-zero flow of K - {u1, u3} with colours 1, 1, 2 on each connector.
  FlowSearch fs(kp);
  bool found = false;
  for (int p1 : {2, 1, 0}) {
    for (int p2 : {2, 1, 0}) {
      if (found) break;
      fs.reset();
      bool ok = true;
      for (int c = 0; c < 2 && ok; ++c) {
        const Connector& con = kp.connectors()[static_cast<std::size_t>(c)];
        for (int i = 0; i < 3 && ok; ++i) ok = fs.fix(con[static_cast<std::size_t>(i)].edge, i == (c == 0 ? p1 : p2) ? 2 : 1);
      }
      if (ok && fs.solve() == Search::found) {
        found = true;
        plan.s_pattern = {p1, p2};
      }
    }
  }
  require(found, "K - {u1, u3} has no flow with connector colours 1, 1, 2");

  Multipole cur = with_labels(kp, fs.values());
  for (int i = 0; i < 4; ++i) {
    const int z = vertex_with_tag(cur, k.z[static_cast<std::size_t>(i)]);
    std::vector<int> wanted;
    for (const auto& inc : cur.incident(z)) wanted.push_back(cur.edge(inc.edge).label);
    const PoleAttachment att = attach_pole(m, spec, wanted);
    const Multipole copy = with_tags(with_labels(m.pole, att.colouring), kPoleTag + i);
    const auto ends = copy.boundary_ends();
    std::vector<EndRef> assignment;
    for (int p : att.positions) assignment.push_back(ends[static_cast<std::size_t>(p)]);
    plan.k_attachment[static_cast<std::size_t>(i)] = att.positions;
    cur = substitute_vertex(cur, z, copy, assignment);
  }
  for (int c = 0; c < 2; ++c) {
    const Connector& con = cur.connectors()[static_cast<std::size_t>(c)];
    std::vector<int> perm;
    for (int i = 0; i < 3; ++i) {
      if (cur.edge(con[static_cast<std::size_t>(i)].edge).label == 2) perm.insert(perm.begin(), i);
      else perm.push_back(i);
    }
    cur = permute_connector(cur, c, perm);
  }
  const auto labels = cur.edge_labels();
  require(is_proper_colouring(cur, labels), "superedge colouring is not proper");
  const auto gi = multipole_girth(cur);
  require(!gi || *gi >= plan.girth, "superedge has a circuit shorter than the girth");
  return {cur, labels};
}

namespace {

CageEntry resolve_cage(ConstructionPlan& plan) {
  if (!plan.cage_path.empty()) return load_cage_file(plan.cage_path, plan.girth);
  if (plan.cage.empty()) {
    CageEntry c = cage_for_girth(plan.girth);
    plan.cage = c.name;
    return c;
  }
  CageEntry c = load_cage(plan.cage);
  if (c.girth != plan.girth) {
    throw CageError("cage " + c.name + " has girth " + std::to_string(c.girth) + ", requested " + std::to_string(plan.girth));
  }
  return c;
}

void replay_check(const ConstructionPlan& in, const ConstructionPlan& out) {
  auto fail = [](const char* what) { throw ConstructionError(std::string("plan ") + what + " differs from the derived one"); };
  if (in.s_pattern[0] >= 0 && in.s_pattern != out.s_pattern) fail("s_pattern");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!in.k_attachment[i].empty() && in.k_attachment[i] != out.k_attachment[i]) fail("k_attachment");
    if (!in.base_attachment[i].empty() && in.base_attachment[i] != out.base_attachment[i]) fail("base_attachment");
    if (in.sigma[i][0] != 0 && in.sigma[i] != out.sigma[i]) fail("sigma");
  }
  if (!in.base_colouring.empty() && in.base_colouring != out.base_colouring) fail("base_colouring");
}

Construction build(ConstructionPlan plan, Exec exec, bool near) {
  const ConstructionPlan input = plan;
  const PetersenLabels& L = kLabels;
  Construction out;
  const CageEntry cage = resolve_cage(plan);
  out.pole = make_Mg(cage);
  out.superedge = build_Fg(out.pole, plan, exec);
  const Spectrum spec = boundary_spectrum(out.pole.pole, exec);

  // Base colouring: least colouring of P - {u, v}, with uv coloured last.
  const Graph p = petersen_graph();
  std::vector<Edge> cut;
  for (int e = 0; e < p.num_edges(); ++e) {
    Edge d = p.edge(e);
    for (int& x : d.ends) {
      if (x == L.u || x == L.v) x = kFree;
    }
    d.label = e + 1;
    cut.push_back(d);
  }
  const Multipole pp(10, cut);
  FlowSearch fs(pp);
  require(fs.solve() == Search::found, "P - {u, v} is not colourable");
  std::vector<int> xi(static_cast<std::size_t>(p.num_edges()), 0);
  for (int e = 0; e < pp.num_edges(); ++e) xi[static_cast<std::size_t>(pp.edge(e).label - 1)] = fs.values()[static_cast<std::size_t>(e)];
  const int uv = petersen_edge(p, L.u, L.v);
  auto side_colour = [&](int w) {
    std::set<int> cs;
    for (const auto& inc : p.incident(w)) {
      if (inc.edge != uv) cs.insert(xi[static_cast<std::size_t>(inc.edge)]);
    }
    require(cs.size() == 1, "base colouring does not repeat a colour at u or v");
    return *cs.begin();
  };
  const int cu = side_colour(L.u);
  const int cv = side_colour(L.v);
  for (int c = 1; c <= 3; ++c) {
    if (c != cu && c != cv) {
      xi[static_cast<std::size_t>(uv)] = c;
      break;
    }
  }
  plan.base_colouring = xi;
  std::vector<int> tags(10);
  for (int i = 0; i < 10; ++i) tags[static_cast<std::size_t>(i)] = i;
  Multipole cur(10, p.edges(), {}, tags);
  cur = with_labels(cur, xi);

  // Superedges on e1, e2, e4, e5.
  const std::array<int, 4> js{1, 2, 4, 5};
  std::array<std::array<int, 2>, 4> base_edges{};
  for (std::size_t i = 0; i < 4; ++i) {
    const int x = L.cycle[static_cast<std::size_t>(js[i])];
    const int y = L.cycle[static_cast<std::size_t>((js[i] + 1) % 6)];
    base_edges[i] = {std::min(x, y), std::max(x, y)};
    const int zv = (x == L.cycle[2] || x == L.cycle[5]) ? x : y;
    const int a = xi[static_cast<std::size_t>(petersen_edge(p, x, y))];
    const int b = xi[static_cast<std::size_t>(petersen_edge(p, zv, L.u))];
    plan.sigma[i] = {b, a, a ^ b};
    const Multipole f = with_tags(relabel(out.superedge.dipole, plan.sigma[i]), kSuperedgeClass + static_cast<int>(i));
    cur = substitute_edge(cur, edge_between_tags(cur, x, y), f, 0, 1);
  }

  // Z at v2 and v5: connector A meets the superedge on the earlier cycle edge.
  const Multipole z0 = build_Z();
  for (int side = 0; side < 2; ++side) {
    const int zv = L.cycle[static_cast<std::size_t>(2 + 3 * side)];
    const int first = kSuperedgeClass + 2 * side;
    const int a1 = xi[static_cast<std::size_t>(petersen_edge(p, base_edges[static_cast<std::size_t>(2 * side)][0], base_edges[static_cast<std::size_t>(2 * side)][1]))];
    const int a2 = xi[static_cast<std::size_t>(petersen_edge(p, base_edges[static_cast<std::size_t>(2 * side + 1)][0], base_edges[static_cast<std::size_t>(2 * side + 1)][1]))];
    const int t = xi[static_cast<std::size_t>(petersen_edge(p, zv, L.u))];
    const Multipole z = with_tags(with_labels(z0, std::vector<int>{a1, a2, t, cu, cu}), zv);
    const auto& zc = z.connectors();
    const int id = vertex_with_tag(cur, zv);
    std::vector<EndRef> assignment;
    std::array<std::size_t, 2> next{1, 1};
    for (const auto& inc : cur.incident(id)) {
      const int other_tag = cur.tag(cur.other(inc.edge, inc.side));
      const int label = cur.edge(inc.edge).label;
      if (other_tag == L.u) {
        assignment.push_back(zc[2][0]);
        continue;
      }
      const std::size_t g = other_tag == first ? 0 : 1;
      require(other_tag == first || other_tag == first + 1, "unexpected neighbour of a Z position");
      if (label == (g == 0 ? a1 : a2)) {
        assignment.push_back(zc[g][0]);
      } else {
        require(next[g] < 3, "Z connector overfull");
        assignment.push_back(zc[g][next[g]++]);
      }
    }
    cur = substitute_vertex(cur, id, z, assignment);
  }

  // Poles at v0, v1, v3, v4.
  const std::array<int, 4> mpos{0, 1, 3, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    const int bv = L.cycle[static_cast<std::size_t>(mpos[i])];
    const int id = vertex_with_tag(cur, bv);
    std::vector<int> wanted;
    for (const auto& inc : cur.incident(id)) wanted.push_back(cur.edge(inc.edge).label);
    const PoleAttachment att = attach_pole(out.pole, spec, wanted);
    const Multipole copy = with_tags(with_labels(out.pole.pole, att.colouring), bv);
    const auto ends = copy.boundary_ends();
    std::vector<EndRef> assignment;
    for (int q : att.positions) assignment.push_back(ends[static_cast<std::size_t>(q)]);
    plan.base_attachment[i] = att.positions;
    cur = substitute_vertex(cur, id, copy, assignment);
  }
  replay_check(input, plan);

  require(validate(cur).ok() && cur.is_cubic(), "assembled graph is not cubic");
  out.graph = Graph(cur);
  const Graph& g = out.graph;
  out.u = vertex_with_tag(cur, L.u);
  out.v = vertex_with_tag(cur, L.v);

  Bundle& b = out.bundle;
  b.checksum = checksum_hex(g);
  b.vertices = g.num_vertices();
  b.girth_cycle = shortest_cycle(g.multipole());
  b.girth = static_cast<int>(b.girth_cycle.size());
  require(b.girth >= plan.girth, "assembled graph has girth " + std::to_string(b.girth));
  b.snark.base = p;
  b.snark.classes = cur.vertex_tags();
  for (std::size_t i = 0; i < 4; ++i) {
    b.snark.superedges.push_back({base_edges[i], kSuperedgeClass + static_cast<int>(i), {}});
  }
  std::vector<std::pair<Multipole, DipoleCheck>> cache;
  for (std::size_t i = 0; i < 4; ++i) {
    const Multipole d = superedge_dipole(g, b.snark, static_cast<int>(i));
    auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& q) { return q.first == d; });
    if (it == cache.end()) {
      cache.emplace_back(d, is_proper_dipole(d, exec));
      it = cache.end() - 1;
    }
    require(it->second.exact && it->second.proper, "superedge copy is not a proper dipole");
    b.snark.superedges[i].spectrum = it->second.spectrum.vectors;
  }
  b.connectivity_at_least = 5;
  b.defect_at_least = (b.girth + 1) / 2;

  const EdgeColouring colours = cur.edge_labels();
  const auto support = residual_support(cur, colours);
  require(support == std::vector<int>{std::min(out.u, out.v), std::max(out.u, out.v)},
          "near-colouring fails away from u and v");
  if (near) {
    NearColouring nc;
    nc.u = out.u;
    nc.v = out.v;
    nc.colours = colours;
    auto witness = [&](int w, int colour) {
      for (const auto& inc : g.incident(w)) {
        const int o = g.multipole().other(inc.edge, inc.side);
        if (o != out.u && o != out.v && colours[static_cast<std::size_t>(inc.edge)] == colour) return inc.edge;
      }
      throw ConstructionError("no resistance witness edge");
    };
    nc.resistance_witness = {witness(out.u, cu), witness(out.v, cv)};
    b.near_colouring = std::move(nc);
    b.oddness = 2;
    b.resistance = 2;
  }
  out.plan = plan;
  return out;
}

}  // namespace

Construction assemble_Gtilde(ConstructionPlan plan, Exec exec) {
  if (plan.girth < 6 || plan.girth % 2 != 0) throw ConstructionError("assemble_Gtilde needs an even girth of at least 6");
  ConstructionPlan probe = plan;
  if (!resolve_cage(probe).bipartite) throw ConstructionError("assemble_Gtilde needs a bipartite cage");
  return build(plan, exec, true);
}

Construction build_for_odd_girth(ConstructionPlan plan, Exec exec) {
  if (plan.girth < 7 || plan.girth % 2 == 0) throw ConstructionError("build_for_odd_girth needs an odd girth of at least 7");
  return build(plan, exec, false);
}

Construction build_snark(ConstructionPlan plan, Exec exec) {
  if (plan.girth == 5) {
    throw ConstructionError(
        "girth 5 is not built here: use a known family of cyclically 5-edge-connected snarks of girth 5, "
        "for example rotation snarks or permutation snarks, or the Petersen graph itself");
  }
  if (plan.girth < 5) throw ConstructionError("girth must be at least 5");
  if (plan.girth % 2 == 1) return build_for_odd_girth(plan, exec);
  ConstructionPlan probe = plan;
  const bool bip = resolve_cage(probe).bipartite;
  return build(plan, exec, bip);
}

std::string plan_to_json(const ConstructionPlan& p) {
  json j;
  j["girth"] = p.girth;
  j["cage"] = p.cage;
  j["cage_path"] = p.cage_path;
  j["seed"] = p.seed;
  j["labels"] = {{"uvw", kLabels.uvw}, {"x", kLabels.x}, {"cycle", kLabels.cycle}, {"u", kLabels.u}, {"v", kLabels.v}};
  j["s_pattern"] = p.s_pattern;
  j["k_attachment"] = p.k_attachment;
  j["base_attachment"] = p.base_attachment;
  j["base_colouring"] = p.base_colouring;
  j["sigma"] = p.sigma;
  return j.dump(1) + "\n";
}

ConstructionPlan parse_plan(std::string_view text) {
  try {
    const json j = json::parse(text);
    ConstructionPlan p;
    p.girth = j.at("girth").get<int>();
    p.cage = j.value("cage", std::string());
    p.cage_path = j.value("cage_path", std::string());
    p.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("labels")) {
      const auto& l = j.at("labels");
      if (l.at("uvw").get<std::array<int, 3>>() != kLabels.uvw || l.at("x").get<std::array<int, 4>>() != kLabels.x ||
          l.at("cycle").get<std::array<int, 6>>() != kLabels.cycle || l.at("u").get<int>() != kLabels.u ||
          l.at("v").get<int>() != kLabels.v) {
        throw ConstructionError("plan labels differ from the fixed Petersen labellings");
      }
    }
    if (j.contains("s_pattern")) p.s_pattern = j.at("s_pattern").get<std::array<int, 2>>();
    if (j.contains("k_attachment")) p.k_attachment = j.at("k_attachment").get<std::array<std::vector<int>, 4>>();
    if (j.contains("base_attachment")) p.base_attachment = j.at("base_attachment").get<std::array<std::vector<int>, 4>>();
    if (j.contains("base_colouring")) p.base_colouring = j.at("base_colouring").get<std::vector<int>>();
    if (j.contains("sigma")) p.sigma = j.at("sigma").get<std::array<std::array<int, 3>, 4>>();
    return p;
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("malformed plan: ") + e.what());
  }
}

}  // namespace snark
