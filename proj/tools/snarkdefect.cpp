#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snark/cages.hpp"
#include "snark/certificate.hpp"
#include "snark/graph_io.hpp"
#include "snark/matchings.hpp"
#include "snark/measures.hpp"
#include "snark/report.hpp"
#include "snark/superposition.hpp"

namespace fs = std::filesystem;
using namespace snark;

namespace {

enum Exit { kOk = 0, kInput = 1, kUndecided = 2, kCertificate = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  std::cout << text;
  if (!out.empty()) write_text_file(out, text);
}

// Exhaustive minimum over all multisets of three perfect matchings.
int defect_exhaustive(const std::vector<PerfectMatching>& pms) {
  int best = INT_MAX;
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i; j < pms.size(); ++j) {
      const EdgeSet u = pms[i] | pms[j];
      for (std::size_t k = j; k < pms.size(); ++k) best = std::min(best, pms[i].size() - u.count_or(pms[k]));
    }
  }
  return best;
}

struct MeasureArgs {
  std::string path;
  bool all = false;
  bool defect = false;
  bool oddness = false;
  bool resistance = false;
  bool density = false;
  bool girth = false;
  bool connectivity = false;
  bool oracle = false;
  bool json = false;
  bool serial = false;
  std::uint64_t budget = 50'000'000;
  int cap = 5;
  std::size_t matching_limit = 200000;
  std::string out;
  std::string array_out;
};

int cmd_measure(const MeasureArgs& a, bool defect_only) {
  const Graph g = load(a.path);
  MeasureOptions opt;
  const bool any = a.defect || a.oddness || a.resistance || a.density || a.girth || a.connectivity;
  if (defect_only) {
    opt = {true, false, false, false, false, false};
  } else if (!a.all && any) {
    opt.defect = a.defect;
    opt.oddness = a.oddness;
    opt.resistance = a.resistance;
    opt.density = a.density;
    opt.girth = a.girth;
    opt.connectivity = a.connectivity;
  }
  opt.colouring_budget = Budget{a.budget};
  opt.connectivity_cap = a.cap;
  opt.matching_limit = a.matching_limit;
  opt.exec = a.serial ? Exec::serial : Exec::parallel;
  MeasureReport r = measure(g, opt);
  bool oracle_ok = true;
  if (a.oracle && opt.defect && r.defect.exact() && r.perfect_matchings) {
    const int ex = defect_exhaustive(enumerate_perfect_matchings(g));
    oracle_ok = ex == r.defect.lo;
    r.notes.push_back("defect oracle: exhaustive " + std::to_string(ex) + (oracle_ok ? " agrees" : " DISAGREES"));
  }
  const auto audit = audit_inequalities(r);
  const std::string source = fs::path(a.path).filename().string();
  emit(a.json ? report_json(source, g, r, audit) : report_text(source, g, r, audit), a.out);
  if (!a.array_out.empty() && r.defect_witness) {
    std::array<PerfectMatching, 3> ms;
    for (std::size_t i = 0; i < 3; ++i) ms[i] = EdgeSet::of(g.num_edges(), (*r.defect_witness)[i]);
    write_text_file(a.array_out, array_to_text(g, ThreeArray(g, ms)));
  }
  if (!oracle_ok || !audit_passed(audit)) return kCertificate;
  return r.undecided() ? kUndecided : kOk;
}

struct BuildArgs {
  int girth = 0;
  std::string cage;
  std::string out = "snark";
  std::string plan;
  bool serial = false;
  bool no_verify = false;
  bool json = false;
};

int cmd_build(const BuildArgs& a) {
  ConstructionPlan plan;
  if (!a.plan.empty()) plan = parse_plan(read_text_file(a.plan));
  if (a.girth != 0) plan.girth = a.girth;
  if (!a.cage.empty()) {
    const auto names = cage_names();
    if (std::find(names.begin(), names.end(), a.cage) != names.end()) {
      plan.cage = a.cage;
      plan.cage_path.clear();
    } else if (fs::exists(a.cage)) {
      plan.cage_path = a.cage;
      plan.cage.clear();
    } else {
      throw InputError("cage '" + a.cage + "' is neither a registry name nor a file");
    }
  }
  const Exec exec = a.serial ? Exec::serial : Exec::parallel;
  const Construction c = build_snark(plan, exec);
  write_text_file(a.out + ".s6", to_sparse6(c.graph) + "\n");
  write_text_file(a.out + ".bundle.json", bundle_to_json(c.bundle));
  write_text_file(a.out + ".plan.json", plan_to_json(c.plan));
  if (c.bundle.near_colouring) write_text_file(a.out + ".colouring", colouring_to_text(c.graph, c.bundle.near_colouring->colours));

  const Bundle& b = c.bundle;
  nlohmann::json j;
  std::ostringstream os;
  auto line = [&](const std::string& k, const nlohmann::json& v) {
    j[k] = v;
    os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  };
  line("girth_requested", c.plan.girth);
  line("cage", c.plan.cage.empty() ? c.plan.cage_path : c.plan.cage);
  line("vertices", c.graph.num_vertices());
  line("edges", c.graph.num_edges());
  line("checksum", b.checksum);
  line("pole_vertices", c.pole.pole.num_vertices());
  line("superedge_vertices", c.superedge.dipole.num_vertices());
  line("girth", b.girth);
  line("defect_at_least", b.defect_at_least);
  if (b.oddness) line("oddness", *b.oddness);
  if (b.resistance) line("resistance", *b.resistance);
  if (b.near_colouring) line("near_colouring_support", std::vector<int>{b.near_colouring->u, b.near_colouring->v});
  line("superedge_spectrum_size", b.snark.superedges.front().spectrum.size());
  bool ok = true;
  if (!a.no_verify) {
    for (const auto& it : verify_bundle(c.graph, b, exec)) {
      line("verify." + it.name, std::string(it.ok ? "ok" : "FAILED") + " (" + it.detail + ")");
      ok = ok && it.ok;
    }
  }
  std::cout << (a.json ? j.dump(1) + "\n" : os.str());
  return ok ? kOk : kCertificate;
}

struct VerifyArgs {
  std::string graph;
  std::string bundle;
  std::string array;
  std::string colouring;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Graph g = load(a.graph);
  if (a.bundle.empty() && a.array.empty() && a.colouring.empty()) throw InputError("nothing to verify: give --bundle, --array or --colouring");
  bool ok = true;
  std::optional<Bundle> bundle;
  if (!a.bundle.empty()) {
    try {
      bundle = parse_bundle(read_text_file(a.bundle));
    } catch (const CertificateError& e) {
      throw InputError(a.bundle + ": " + e.what());
    }
    std::vector<VerifyItem> items;
    try {
      items = verify_bundle(g, *bundle, a.serial ? Exec::serial : Exec::parallel);
    } catch (const CertificateError& e) {
      throw InputError(e.what());
    }
    for (const auto& it : items) {
      std::cout << it.name << ": " << (it.ok ? "ok" : "FAILED") << " (" << it.detail << ")\n";
      ok = ok && it.ok;
    }
  }
  if (!a.array.empty()) {
    try {
      const ThreeArray arr = parse_array(read_text_file(a.array), g);
      const auto e0 = arr.E(0).members();
      const bool col = find_colouring(e0.empty() ? g.multipole() : cut_edges(g.multipole(), e0)).found();
      std::cout << "array: ok (uncovered " << arr.uncovered() << ", bookkeeping holds"
                << (col ? ", g - E0 colourable" : ", g - E0 NOT colourable") << ")\n";
      ok = ok && col;
    } catch (const ReportError& e) {
      throw InputError(std::string(e.what()));
    }
  }
  if (!a.colouring.empty()) {
    EdgeColouring c;
    try {
      c = parse_colouring(read_text_file(a.colouring), g);
    } catch (const CertificateError& e) {
      throw InputError(a.colouring + ": " + e.what());
    }
    if (bundle && bundle->near_colouring) {
      const bool same = c == bundle->near_colouring->colours;
      std::size_t first = 0;
      while (same == false && first < c.size() && c[first] == bundle->near_colouring->colours[first]) ++first;
      std::cout << "colouring: " << (same ? "ok (matches the bundle near-colouring)" : "FAILED (differs from the bundle at edge " + std::to_string(first) + ")") << "\n";
      ok = ok && same;
    } else {
      const bool proper = is_proper_colouring(g.multipole(), c);
      std::cout << "colouring: " << (proper ? "ok (proper)" : "FAILED (not proper)") << "\n";
      ok = ok && proper;
    }
  }
  return ok ? kOk : kCertificate;
}

struct CorpusArgs {
  std::string dir;
  std::uint64_t budget = 50'000'000;
  int cap = 5;
  std::size_t matching_limit = 200000;
  bool json = false;
  bool serial = false;
  std::string out;
};

int cmd_audit_corpus(const CorpusArgs& a) {
  if (!fs::is_directory(a.dir)) throw InputError(a.dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });
  std::vector<CorpusRow> rows(files.size());
  MeasureOptions opt;
  opt.colouring_budget = Budget{a.budget};
  opt.connectivity_cap = a.cap;
  opt.matching_limit = a.matching_limit;
  opt.exec = Exec::serial;
  const auto nf = static_cast<std::int64_t>(files.size());
  auto run = [&](std::int64_t i) {
    CorpusRow& row = rows[static_cast<std::size_t>(i)];
    row.file = files[static_cast<std::size_t>(i)].filename().string();
    try {
      const Graph g = read_graph_file(files[static_cast<std::size_t>(i)]);
      row.report = measure(g, opt);
      row.audit = audit_inequalities(*row.report);
    } catch (const std::exception& e) {
      row.report.reset();
      row.error = e.what();
    }
  };
  if (a.serial) {
    for (std::int64_t i = 0; i < nf; ++i) run(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < nf; ++i) run(i);
  }
  emit(a.json ? corpus_json(rows) : corpus_table(rows), a.out);
  bool fail = false, undecided = false, errors = false;
  for (const auto& r : rows) {
    fail = fail || r.failed();
    undecided = undecided || r.undecided();
    errors = errors || !r.report;
  }
  if (fail) return kCertificate;
  if (undecided) return kUndecided;
  return errors ? kInput : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measures of uncolourability for cubic graphs, and snark constructions with certificates."};
  app.require_subcommand(1);

  MeasureArgs ma;
  bool defect_only = false;
  auto add_measure_flags = [&](CLI::App* c, bool full) {
    c->add_option("graph", ma.path, "graph6, sparse6 or multipole text file")->required()->check(CLI::ExistingFile);
    if (full) {
      c->add_flag("--all", ma.all, "every invariant (the default)");
      c->add_flag("--defect", ma.defect, "colouring defect and core");
      c->add_flag("--oddness", ma.oddness, "oddness");
      c->add_flag("--resistance", ma.resistance, "resistance");
      c->add_flag("--density", ma.density, "density");
      c->add_flag("--girth", ma.girth, "girth");
      c->add_flag("--connectivity", ma.connectivity, "cyclic edge-connectivity");
      c->add_option("--connectivity-cap", ma.cap, "search cuts below this size")->check(CLI::Range(1, 64));
    }
    c->add_flag("--oracle", ma.oracle, "also run the exhaustive defect oracle");
    c->add_option("--budget", ma.budget, "search-node budget per colouring search (0 = unlimited)");
    c->add_option("--matching-limit", ma.matching_limit, "perfect matchings enumerated before falling back to bounds");
    c->add_option("--array-out", ma.array_out, "write the optimal 3-array");
    c->add_option("--out", ma.out, "also write the report here");
    c->add_flag("--json", ma.json, "JSON report");
    c->add_flag("--serial", ma.serial, "use the serial reference kernels");
  };
  auto* measure_cmd = app.add_subcommand("measure", "compute invariants and audit their inequalities");
  add_measure_flags(measure_cmd, true);
  auto* defect_cmd = app.add_subcommand("defect", "colouring defect with an optimal 3-array and its core");
  add_measure_flags(defect_cmd, false);

  BuildArgs ba;
  auto* build_cmd = app.add_subcommand("build-snark", "build a snark of given girth with certificates");
  build_cmd->add_option("--girth", ba.girth, "target girth");
  build_cmd->add_option("--cage", ba.cage, "registry name (heawood, mcgee, tutte-coxeter) or graph file");
  build_cmd->add_option("--out", ba.out, "output prefix");
  build_cmd->add_option("--plan", ba.plan, "construction plan file")->check(CLI::ExistingFile);
  build_cmd->add_flag("--no-verify", ba.no_verify, "skip verification of the written bundle");
  build_cmd->add_flag("--serial", ba.serial, "use the serial reference kernels");
  build_cmd->add_flag("--json", ba.json, "JSON summary");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check certificates against a graph");
  verify_cmd->add_option("graph", va.graph, "graph file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--bundle", va.bundle, "certificate bundle")->check(CLI::ExistingFile);
  verify_cmd->add_option("--array", va.array, "3-array file")->check(CLI::ExistingFile);
  verify_cmd->add_option("--colouring", va.colouring, "colouring file")->check(CLI::ExistingFile);
  verify_cmd->add_flag("--serial", va.serial, "use the serial reference kernels");

  CorpusArgs ca;
  auto* corpus_cmd = app.add_subcommand("audit-corpus", "measure every graph in a directory and audit the inequalities");
  corpus_cmd->add_option("dir", ca.dir, "directory of graph files")->required();
  corpus_cmd->add_option("--budget", ca.budget, "search-node budget per colouring search (0 = unlimited)");
  corpus_cmd->add_option("--connectivity-cap", ca.cap, "search cuts below this size")->check(CLI::Range(1, 64));
  corpus_cmd->add_option("--matching-limit", ca.matching_limit, "perfect matchings enumerated before falling back to bounds");
  corpus_cmd->add_option("--out", ca.out, "also write the table here");
  corpus_cmd->add_flag("--json", ca.json, "JSON rows");
  corpus_cmd->add_flag("--serial", ca.serial, "one file at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  defect_only = defect_cmd->parsed();

  try {
    if (measure_cmd->parsed() || defect_cmd->parsed()) return cmd_measure(ma, defect_only);
    if (build_cmd->parsed()) {
      if (ba.girth == 0 && ba.plan.empty()) throw InputError("build-snark needs --girth or --plan");
      return cmd_build(ba);
    }
    if (verify_cmd->parsed()) return cmd_verify(va);
    if (corpus_cmd->parsed()) return cmd_audit_corpus(ca);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
