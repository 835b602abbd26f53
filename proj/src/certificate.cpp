#include "snark/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "snark/connectivity.hpp"
#include "snark/graph_algo.hpp"
#include "snark/graph_io.hpp"

namespace snark {

using nlohmann::json;

namespace {

void check_classes(const Graph& g, const SnarkCertificate& c) {
  if (static_cast<int>(c.classes.size()) != g.num_vertices()) {
    throw CertificateError("certificate has " + std::to_string(c.classes.size()) + " vertex classes, graph has " +
                           std::to_string(g.num_vertices()) + " vertices");
  }
}

// An edge from superedge `s` to another superedge whose base edge shares an
// endpoint w with that of `s` passes through w. Returns the base vertex the
// class `cls` stands for as seen from `s`, or -1.
int through_vertex(const SnarkCertificate& c, const SuperedgeWitness& s, int cls) {
  const int nb = c.base.num_vertices();
  if (cls >= 0 && cls < nb) return cls;
  for (const auto& t : c.superedges) {
    if (t.cls != cls || &t == &s) continue;
    for (int w : s.base_edge) {
      if (w == t.base_edge[0] || w == t.base_edge[1]) return w;
    }
  }
  return -1;
}

}  // namespace

Multipole superedge_dipole(const Graph& g, const SnarkCertificate& c, int index) {
  check_classes(g, c);
  const SuperedgeWitness& s = c.superedges.at(static_cast<std::size_t>(index));
  std::vector<int> inner;
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (c.classes[static_cast<std::size_t>(x)] == s.cls) {
      pos[static_cast<std::size_t>(x)] = static_cast<int>(inner.size());
      inner.push_back(x);
    }
  }
  std::array<std::vector<std::pair<int, int>>, 2> keyed;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e).ends;
    const bool ia = pos[static_cast<std::size_t>(a)] >= 0;
    const bool ib = pos[static_cast<std::size_t>(b)] >= 0;
    if (ia == ib) continue;
    const int in = ia ? a : b;
    const int out = ia ? b : a;
    const int cls = through_vertex(c, s, c.classes[static_cast<std::size_t>(out)]);
    for (int k = 0; k < 2; ++k) {
      if (cls == s.base_edge[static_cast<std::size_t>(k)]) keyed[static_cast<std::size_t>(k)].emplace_back(pos[static_cast<std::size_t>(in)], e);
    }
  }
  std::vector<std::vector<int>> conns(2);
  for (int k = 0; k < 2; ++k) {
    auto& kk = keyed[static_cast<std::size_t>(k)];
    std::sort(kk.begin(), kk.end());
    for (const auto& [p, e] : kk) conns[static_cast<std::size_t>(k)].push_back(e);
  }
  const Multipole d = extract(g.multipole(), inner, conns);
  return with_labels(d, std::vector<int>(static_cast<std::size_t>(d.num_edges()), 0));
}

CertificateCheck check_snark_certificate(const Graph& g, const SnarkCertificate& c, Exec exec) {
  check_classes(g, c);
  CertificateCheck out;
  const int nb = c.base.num_vertices();
  std::map<int, int> sidx;
  for (std::size_t i = 0; i < c.superedges.size(); ++i) {
    const auto& s = c.superedges[i];
    if (s.cls < nb || !sidx.emplace(s.cls, static_cast<int>(i)).second) {
      out.failures.push_back("superedge " + std::to_string(i) + ": bad class id " + std::to_string(s.cls));
    }
    for (int x : s.base_edge) {
      if (x < 0 || x >= nb) out.failures.push_back("superedge " + std::to_string(i) + ": base edge out of range");
    }
  }
  for (int x = 0; x < g.num_vertices(); ++x) {
    const int cl = c.classes[static_cast<std::size_t>(x)];
    if ((cl < 0 || cl >= nb) && !sidx.count(cl)) {
      out.failures.push_back("vertex " + std::to_string(x) + ": unknown class " + std::to_string(cl));
    }
  }
  if (!out.ok()) return out;

  // Contract every class and compare with the base.
  std::vector<std::pair<int, int>> quotient;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e).ends;
    const int ca = c.classes[static_cast<std::size_t>(a)];
    const int cb = c.classes[static_cast<std::size_t>(b)];
    if (ca == cb) continue;
    const bool sa = ca >= nb;
    const bool sb = cb >= nb;
    if (sa && sb) {
      if (through_vertex(c, c.superedges[static_cast<std::size_t>(sidx[ca])], cb) < 0) {
        out.failures.push_back("edge " + std::to_string(e) + " joins two superedges without a common end");
      }
    } else if (sa || sb) {
      const int s = sa ? ca : cb;
      const int x = sa ? cb : ca;
      const auto& be = c.superedges[static_cast<std::size_t>(sidx[s])].base_edge;
      if (x != be[0] && x != be[1]) {
        out.failures.push_back("edge " + std::to_string(e) + " leaves superedge class " + std::to_string(s) +
                               " towards base vertex " + std::to_string(x));
      }
    } else {
      quotient.emplace_back(std::min(ca, cb), std::max(ca, cb));
    }
  }
  for (const auto& s : c.superedges) quotient.emplace_back(std::min(s.base_edge[0], s.base_edge[1]), std::max(s.base_edge[0], s.base_edge[1]));
  std::vector<std::pair<int, int>> base;
  for (const auto& e : c.base.edges()) base.emplace_back(std::min(e.ends[0], e.ends[1]), std::max(e.ends[0], e.ends[1]));
  std::sort(quotient.begin(), quotient.end());
  std::sort(base.begin(), base.end());
  if (quotient != base) out.failures.push_back("contracting the classes does not give the base graph");

  const auto flow = find_nowhere_zero_flow(c.base.multipole());
  if (flow.status != Search::none) out.failures.push_back("base graph admits a nowhere-zero Klein flow");

  std::vector<std::pair<Multipole, DipoleCheck>> cache;
  for (std::size_t i = 0; i < c.superedges.size(); ++i) {
    const auto& s = c.superedges[i];
    const std::string tag = "superedge " + std::to_string(i);
    const Multipole d = superedge_dipole(g, c, static_cast<int>(i));
    if (d.connectors().size() != 2 || d.connectors()[0].empty() || d.connectors()[1].empty()) {
      out.failures.push_back(tag + ": not a dipole");
      continue;
    }
    auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& p) { return p.first == d; });
    if (it == cache.end()) {
      cache.emplace_back(d, is_proper_dipole(d, exec));
      it = cache.end() - 1;
    }
    const DipoleCheck& chk = it->second;
    for (const auto& v : s.spectrum) {
      if (total_flow(d, v) == 0) out.failures.push_back(tag + ": stored spectrum has a vector with zero total flow");
    }
    if (!chk.exact) out.failures.push_back(tag + ": spectrum search undecided");
    if (!chk.proper) out.failures.push_back(tag + ": dipole is not proper");
    auto stored = s.spectrum;
    std::sort(stored.begin(), stored.end());
    if (stored != chk.spectrum.vectors) out.failures.push_back(tag + ": stored spectrum differs from recomputed spectrum");
  }
  return out;
}

bool certify_snark(const Graph& g, const SnarkCertificate& c, Exec exec) { return check_snark_certificate(g, c, exec).ok(); }

namespace {

VerifyItem check_near(const Graph& g, const NearColouring& nc) {
  VerifyItem it{"near-colouring", false, ""};
  const int n = g.num_vertices();
  if (static_cast<int>(nc.colours.size()) != g.num_edges()) {
    it.detail = "colouring has " + std::to_string(nc.colours.size()) + " entries";
    return it;
  }
  if (nc.u < 0 || nc.u >= n || nc.v < 0 || nc.v >= n) {
    it.detail = "u or v out of range";
    return it;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const int col = nc.colours[static_cast<std::size_t>(e)];
    if (col < 1 || col > 3) {
      it.detail = "edge " + std::to_string(e) + " has colour " + std::to_string(col);
      return it;
    }
  }
  std::vector<int> want{std::min(nc.u, nc.v), std::max(nc.u, nc.v)};
  const auto support = residual_support(g.multipole(), nc.colours);
  if (support != want) {
    std::ostringstream os;
    os << "Kirchhoff's law fails at";
    for (int x : support) os << ' ' << x;
    it.detail = os.str();
    return it;
  }
  const auto [wu, wv] = nc.resistance_witness;
  auto touches = [&](int e, int x) {
    return e >= 0 && e < g.num_edges() && (g.edge(e).ends[0] == x || g.edge(e).ends[1] == x);
  };
  if (!touches(wu, nc.u) || !touches(wv, nc.v) || wu == wv) {
    it.detail = "resistance witness is not one edge at u and one at v";
    return it;
  }
  for (int x = 0; x < n; ++x) {
    int seen = 0;
    for (const auto& inc : g.incident(x)) {
      if (inc.edge == wu || inc.edge == wv) continue;
      const int bit = 1 << nc.colours[static_cast<std::size_t>(inc.edge)];
      if (seen & bit) {
        it.detail = "colour clash at vertex " + std::to_string(x) + " after deleting the witness edges";
        return it;
      }
      seen |= bit;
    }
  }
  it.ok = true;
  it.detail = "residual support {" + std::to_string(want[0]) + "," + std::to_string(want[1]) + "}";
  return it;
}

}  // namespace

std::vector<VerifyItem> verify_bundle(const Graph& g, const Bundle& b, Exec exec) {
  if (checksum_hex(g) != b.checksum) throw CertificateError("graph checksum " + checksum_hex(g) + " does not match bundle " + b.checksum);
  std::vector<VerifyItem> out;

  VerifyItem gi{"girth", false, ""};
  const auto gg = multipole_girth(g.multipole());
  bool cycle_ok = static_cast<int>(b.girth_cycle.size()) == b.girth && b.girth > 0;
  if (cycle_ok) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    std::set<int> distinct(b.girth_cycle.begin(), b.girth_cycle.end());
    cycle_ok = static_cast<int>(distinct.size()) == b.girth;
    for (int e : b.girth_cycle) {
      if (e < 0 || e >= g.num_edges()) {
        cycle_ok = false;
        break;
      }
      for (int x : g.edge(e).ends) ++deg[static_cast<std::size_t>(x)];
    }
    if (cycle_ok) {
      for (int d : deg) cycle_ok = cycle_ok && (d == 0 || d == 2);
      std::vector<char> removed(static_cast<std::size_t>(g.num_edges()), 1);
      for (int e : b.girth_cycle) removed[static_cast<std::size_t>(e)] = 0;
      std::vector<char> dead(static_cast<std::size_t>(g.num_vertices()), 0);
      for (int x = 0; x < g.num_vertices(); ++x) dead[static_cast<std::size_t>(x)] = deg[static_cast<std::size_t>(x)] == 0;
      const auto ids = component_ids(g.multipole(), removed, dead);
      cycle_ok = cycle_ok && *std::max_element(ids.begin(), ids.end()) == 0;
    }
  }
  gi.ok = gg && *gg == b.girth && cycle_ok;
  gi.detail = "computed " + (gg ? std::to_string(*gg) : std::string("none")) + ", claimed " + std::to_string(b.girth) +
              (cycle_ok ? "" : ", witness cycle invalid");
  out.push_back(gi);

  VerifyItem si{"snark", false, ""};
  try {
    const auto chk = check_snark_certificate(g, b.snark, exec);
    si.ok = chk.ok();
    si.detail = si.ok ? std::to_string(b.snark.superedges.size()) + " proper superedges over an uncolourable base"
                      : chk.failures.front();
  } catch (const CertificateError& e) {
    si.detail = e.what();
  }
  out.push_back(si);

  VerifyItem ci{"cyclic-connectivity", false, ""};
  try {
    const auto r = cyclic_connectivity_at_least(g, b.connectivity_at_least, exec);
    ci.ok = r.holds;
    ci.detail = r.holds ? "no cycle-separating cut below " + std::to_string(b.connectivity_at_least)
                        : "cycle-separating cut of size " + std::to_string(r.witness->edges.size());
  } catch (const ConnectivityError& e) {
    ci.detail = e.what();
  }
  out.push_back(ci);

  bool near_ok = false;
  if (b.near_colouring) {
    out.push_back(check_near(g, *b.near_colouring));
    near_ok = out.back().ok;
  }

  VerifyItem claims{"claims", true, ""};
  std::vector<std::string> bad;
  if (b.defect_at_least > (b.girth + 1) / 2 || (b.defect_at_least > 0 && !si.ok)) bad.push_back("defect lower bound");
  if (b.resistance && (*b.resistance != 2 || !near_ok || !si.ok)) bad.push_back("resistance");
  if (b.oddness && (*b.oddness != 2 || !near_ok || !si.ok)) bad.push_back("oddness");
  if (!bad.empty()) {
    claims.ok = false;
    claims.detail = "unsupported claim:";
    for (const auto& s : bad) claims.detail += " " + s;
  } else {
    claims.detail = "defect >= " + std::to_string(b.defect_at_least);
    if (b.oddness) claims.detail += ", resistance = 2, oddness = 2";
  }
  out.push_back(claims);
  return out;
}

std::string bundle_to_json(const Bundle& b) {
  json j;
  j["format"] = "snark-bundle/1";
  j["graph"] = {{"checksum", b.checksum}, {"vertices", b.vertices}};
  j["girth"] = {{"value", b.girth}, {"cycle", b.girth_cycle}};
  json ses = json::array();
  for (const auto& s : b.snark.superedges) {
    ses.push_back({{"base_edge", s.base_edge}, {"class", s.cls}, {"spectrum", s.spectrum}});
  }
  j["snark"] = {{"base", to_graph6(b.snark.base)}, {"classes", b.snark.classes}, {"superedges", ses}};
  j["cyclic_connectivity"] = {{"at_least", b.connectivity_at_least}};
  if (b.near_colouring) {
    const auto& nc = *b.near_colouring;
    j["near_colouring"] = {{"u", nc.u}, {"v", nc.v}, {"colours", nc.colours}, {"resistance_witness", nc.resistance_witness}};
  }
  json claims = {{"defect_at_least", b.defect_at_least}};
  if (b.oddness) claims["oddness"] = *b.oddness;
  if (b.resistance) claims["resistance"] = *b.resistance;
  j["claims"] = claims;
  return j.dump(1) + "\n";
}

Bundle parse_bundle(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "snark-bundle/1") throw CertificateError("unknown bundle format");
    Bundle b;
    b.checksum = j.at("graph").at("checksum").get<std::string>();
    b.vertices = j.at("graph").at("vertices").get<int>();
    b.girth = j.at("girth").at("value").get<int>();
    b.girth_cycle = j.at("girth").at("cycle").get<std::vector<int>>();
    const auto& s = j.at("snark");
    b.snark.base = parse_graph6(s.at("base").get<std::string>());
    b.snark.classes = s.at("classes").get<std::vector<int>>();
    for (const auto& se : s.at("superedges")) {
      SuperedgeWitness w;
      w.base_edge = se.at("base_edge").get<std::array<int, 2>>();
      w.cls = se.at("class").get<int>();
      w.spectrum = se.at("spectrum").get<std::vector<BoundaryVector>>();
      b.snark.superedges.push_back(std::move(w));
    }
    b.connectivity_at_least = j.at("cyclic_connectivity").at("at_least").get<int>();
    if (j.contains("near_colouring")) {
      const auto& nj = j.at("near_colouring");
      NearColouring nc;
      nc.u = nj.at("u").get<int>();
      nc.v = nj.at("v").get<int>();
      nc.colours = nj.at("colours").get<EdgeColouring>();
      nc.resistance_witness = nj.at("resistance_witness").get<std::array<int, 2>>();
      b.near_colouring = std::move(nc);
    }
    const auto& c = j.at("claims");
    b.defect_at_least = c.at("defect_at_least").get<int>();
    if (c.contains("oddness")) b.oddness = c.at("oddness").get<int>();
    if (c.contains("resistance")) b.resistance = c.at("resistance").get<int>();
    return b;
  } catch (const json::exception& e) {
    throw CertificateError(std::string("malformed bundle: ") + e.what());
  } catch (const ParseError& e) {
    throw CertificateError(std::string("malformed bundle: ") + e.what());
  }
}

std::string colouring_to_text(const Graph& g, const EdgeColouring& c) {
  std::ostringstream os;
  os << "COLOURING " << g.num_edges() << "\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    os << g.edge(e).ends[0] << ' ' << g.edge(e).ends[1] << ' ' << c[static_cast<std::size_t>(e)] << "\n";
  }
  return os.str();
}

EdgeColouring parse_colouring(std::string_view text, const Graph& g) {
  std::istringstream is{std::string(text)};
  std::string head;
  int m = 0;
  if (!(is >> head >> m) || head != "COLOURING" || m != g.num_edges()) throw CertificateError("colouring header does not match graph");
  EdgeColouring c(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    int a = 0, b = 0, col = 0;
    if (!(is >> a >> b >> col)) throw CertificateError("colouring truncated at edge " + std::to_string(e));
    if (a != g.edge(e).ends[0] || b != g.edge(e).ends[1]) throw CertificateError("colouring edge " + std::to_string(e) + " does not match graph");
    c[static_cast<std::size_t>(e)] = col;
  }
  return c;
}

}  // namespace snark
