#include "snark/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "snark/graph_io.hpp"

namespace snark {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s.empty() ? "-" : s;
}

std::string yes_no(std::optional<bool> b) {
  if (!b) return "undecided";
  return *b ? "yes" : "no";
}

std::string slack_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Field {
  const char* name;
  const Bounded* value;
};

std::vector<Field> fields(const MeasureReport& r) {
  return {{"defect", &r.defect},   {"oddness", &r.oddness}, {"resistance", &r.resistance},
          {"density", &r.density}, {"girth", &r.girth},     {"cyclic_connectivity", &r.cyclic_connectivity}};
}

}  // namespace

std::string report_text(const std::string& source, const Graph& g, const MeasureReport& r,
                        const std::vector<AuditLine>& audit) {
  std::ostringstream os;
  os << "graph: " << source << "\n";
  os << "checksum: " << checksum_hex(g) << "\n";
  os << "vertices: " << r.vertices << "\n";
  os << "edges: " << r.edges << "\n";
  os << "cubic: " << (r.cubic ? "yes" : "no") << "\n";
  os << "bridgeless: " << (r.bridgeless ? "yes" : "no") << "\n";
  os << "colourable: " << yes_no(r.colourable) << "\n";
  os << "perfect_matchings: " << (r.perfect_matchings ? std::to_string(*r.perfect_matchings) : "?") << "\n";
  for (const auto& f : fields(r)) {
    if (!f.value->known) continue;
    os << f.name << ": " << f.value->str() << "\n";
    os << f.name << ".exact: " << (f.value->exact() ? "true" : "false") << "\n";
  }
  if (r.defect_witness) {
    for (int i = 0; i < 3; ++i) os << "defect.M" << i + 1 << ": " << join((*r.defect_witness)[static_cast<std::size_t>(i)]) << "\n";
  }
  if (r.core) {
    os << "core.edges: " << join(r.core->edges) << "\n";
    os << "core.cyclic: " << (r.core->cyclic ? "yes" : "no") << "\n";
    for (const auto& c : r.core->components) {
      os << "core.component: " << to_string(c.kind) << " " << c.edges.size() << " edges: " << join(c.edges) << "\n";
    }
    os << "core.audit: " << (r.core->audit_ok ? "ok" : "failed") << "\n";
  }
  if (r.oddness_witness) os << "oddness.matching: " << join(*r.oddness_witness) << "\n";
  if (r.resistance_witness) os << "resistance.edges: " << join(*r.resistance_witness) << "\n";
  if (r.density_witness) {
    os << "density.M1: " << join((*r.density_witness)[0]) << "\n";
    os << "density.M2: " << join((*r.density_witness)[1]) << "\n";
  }
  if (r.girth_witness) os << "girth.cycle: " << join(*r.girth_witness) << "\n";
  if (r.connectivity_witness) os << "cyclic_connectivity.cut: " << join(r.connectivity_witness->edges) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  for (const auto& a : audit) {
    os << "audit: " << a.name << ": " << to_string(a.status);
    if (a.slack) os << " (slack " << slack_str(*a.slack) << ")";
    os << "\n";
  }
  os << "audit.result: " << (audit_passed(audit) ? "pass" : "fail") << "\n";
  return os.str();
}

std::string report_json(const std::string& source, const Graph& g, const MeasureReport& r,
                        const std::vector<AuditLine>& audit) {
  json j;
  j["graph"] = source;
  j["checksum"] = checksum_hex(g);
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["cubic"] = r.cubic;
  j["bridgeless"] = r.bridgeless;
  j["colourable"] = r.colourable ? json(*r.colourable) : json(nullptr);
  j["perfect_matchings"] = r.perfect_matchings ? json(*r.perfect_matchings) : json(nullptr);
  for (const auto& f : fields(r)) {
    if (!f.value->known) continue;
    json v = {{"lower", f.value->lo}, {"exact", f.value->exact()}};
    if (f.value->hi != INT_MAX) v["upper"] = f.value->hi;
    j["values"][f.name] = v;
  }
  if (r.defect_witness) j["witness"]["defect"] = *r.defect_witness;
  if (r.core) {
    json comps = json::array();
    for (const auto& c : r.core->components) comps.push_back({{"kind", to_string(c.kind)}, {"edges", c.edges}, {"vertices", c.vertices}});
    j["witness"]["core"] = {{"edges", r.core->edges}, {"cyclic", r.core->cyclic}, {"components", comps}, {"audit_ok", r.core->audit_ok}};
  }
  if (r.oddness_witness) j["witness"]["oddness"] = *r.oddness_witness;
  if (r.resistance_witness) j["witness"]["resistance"] = *r.resistance_witness;
  if (r.density_witness) j["witness"]["density"] = *r.density_witness;
  if (r.girth_witness) j["witness"]["girth"] = *r.girth_witness;
  if (r.connectivity_witness) j["witness"]["cyclic_connectivity"] = r.connectivity_witness->edges;
  j["notes"] = r.notes;
  json au = json::array();
  for (const auto& a : audit) {
    json l = {{"name", a.name}, {"status", to_string(a.status)}};
    if (a.slack) l["slack"] = *a.slack;
    au.push_back(l);
  }
  j["audit"] = au;
  j["audit_passed"] = audit_passed(audit);
  return j.dump(1) + "\n";
}

std::string array_to_text(const Graph& g, const ThreeArray& a) {
  std::ostringstream os;
  os << "ARRAY\n";
  os << "checksum " << checksum_hex(g) << "\n";
  for (int i = 0; i < 3; ++i) os << "M" << i + 1 << " " << join(a.matching(i).members()) << "\n";
  os << "E0 " << a.E(0).count() << " E2 " << a.E(2).count() << " E3 " << a.E(3).count() << "\n";
  return os.str();
}

ThreeArray parse_array(std::string_view text, const Graph& g) {
  std::istringstream is{std::string(text)};
  std::string line;
  auto next = [&](const char* what) {
    while (std::getline(is, line)) {
      if (!line.empty() && line[0] != '#') return;
    }
    throw ReportError(std::string("array file: missing ") + what);
  };
  next("header");
  if (line != "ARRAY") throw ReportError("array file: bad header");
  next("checksum");
  {
    std::istringstream ls(line);
    std::string key, value;
    ls >> key >> value;
    if (key != "checksum") throw ReportError("array file: missing checksum");
    if (value != checksum_hex(g)) throw ReportError("array file: checksum " + value + " does not match graph");
  }
  std::array<PerfectMatching, 3> ms;
  for (int i = 0; i < 3; ++i) {
    next("matching");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key != "M" + std::to_string(i + 1)) throw ReportError("array file: expected M" + std::to_string(i + 1));
    EdgeSet s(g.num_edges());
    std::string tok;
    while (ls >> tok) {
      if (tok == "-") continue;
      int e = 0;
      try {
        e = std::stoi(tok);
      } catch (const std::exception&) {
        throw ReportError("array file: bad edge '" + tok + "'");
      }
      if (e < 0 || e >= g.num_edges()) throw ReportError("array file: edge " + tok + " out of range");
      s.set(e);
    }
    if (!is_perfect_matching(g.multipole(), s)) throw ReportError("array file: M" + std::to_string(i + 1) + " is not a perfect matching");
    ms[static_cast<std::size_t>(i)] = s;
  }
  next("bookkeeping");
  std::istringstream ls(line);
  std::string k0, k2, k3;
  int e0 = -1, e2 = -1, e3 = -1;
  if (!(ls >> k0 >> e0 >> k2 >> e2 >> k3 >> e3) || k0 != "E0" || k2 != "E2" || k3 != "E3") {
    throw ReportError("array file: malformed bookkeeping line");
  }
  if (e0 != e2 + 2 * e3) throw ReportError("array file: bookkeeping violates |E0| = |E2| + 2|E3|");
  ThreeArray a(g, ms);
  if (a.E(0).count() != e0 || a.E(2).count() != e2 || a.E(3).count() != e3) {
    throw ReportError("array file: bookkeeping does not match the matchings");
  }
  return a;
}

bool CorpusRow::failed() const {
  return std::any_of(audit.begin(), audit.end(), [](const AuditLine& l) { return l.status == AuditStatus::fail; });
}

bool CorpusRow::undecided() const {
  if (report && report->undecided()) return true;
  return std::any_of(audit.begin(), audit.end(), [](const AuditLine& l) { return l.status == AuditStatus::undetermined; });
}

std::string corpus_table(const std::vector<CorpusRow>& rows) {
  std::ostringstream os;
  os << "file\tn\tcolourable\tdefect\toddness\tresistance\tdensity\tgirth\tcyclic_conn\taudit\n";
  int pass = 0, fail = 0, undecided = 0, errors = 0, snarks = 0;
  for (const auto& r : rows) {
    os << r.file;
    if (!r.report) {
      os << "\terror: " << r.error << "\n";
      ++errors;
      continue;
    }
    const auto& m = *r.report;
    if (m.colourable && !*m.colourable) ++snarks;
    os << "\t" << m.vertices << "\t" << yes_no(m.colourable);
    for (const auto& f : fields(m)) os << "\t" << f.value->str();
    const char* status = r.failed() ? "FAIL" : (r.undecided() ? "undecided" : "pass");
    os << "\t" << status << "\n";
    if (r.failed()) ++fail;
    else if (r.undecided()) ++undecided;
    else ++pass;
  }
  os << "summary: " << rows.size() << " files, " << snarks << " snarks, " << pass << " pass, " << fail << " fail, "
     << undecided << " undecided, " << errors << " errors\n";
  return os.str();
}

std::string corpus_json(const std::vector<CorpusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = {{"file", r.file}};
    if (!r.report) {
      row["error"] = r.error;
    } else {
      row["colourable"] = r.report->colourable ? json(*r.report->colourable) : json(nullptr);
      for (const auto& f : fields(*r.report)) row[f.name] = f.value->str();
      row["status"] = r.failed() ? "fail" : (r.undecided() ? "undecided" : "pass");
    }
    out.push_back(row);
  }
  return out.dump(1) + "\n";
}

}  // namespace snark
