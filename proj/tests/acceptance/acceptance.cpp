// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "snark/colouring.hpp"
#include "snark/connectivity.hpp"
#include "snark/graph_algo.hpp"
#include "snark/matchings.hpp"
#include "snark/measures.hpp"
#include "snark/superposition.hpp"

using namespace snark;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime budgets in seconds.
constexpr double kBudget1 = 1;
constexpr double kBudget2 = 30;
constexpr double kBudget3 = 300;
constexpr double kBudget4 = 600;
constexpr double kBudget5 = 900;  // per build
constexpr double kBudget6 = 120;
constexpr double kBudget7 = 600;

constexpr int kSampledArrays = 1000;
constexpr unsigned kSampleSeed = 20240601;
constexpr int kOracleMaxVertices = 14;
constexpr int kMinSnarks = 10;
constexpr std::size_t kSpectrumF6 = 147;

int failures = 0;

struct Criterion {
  int id;
  std::string title;
  std::ostringstream detail;
  bool ok = true;
  Clock::time_point start = Clock::now();

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  void finish(double budget) {
    const double s = seconds();
    require(s < budget, "over the " + std::to_string(static_cast<int>(budget)) + " s budget");
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << s << " s)" << detail.str() << std::endl;
    if (!ok) ++failures;
  }
};

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(std::string(SNARK_DATA_DIR) + "/corpus")) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

bool audit_clean(const Graph& g) {
  return g.is_cubic() && is_bridgeless(g.multipole()) && g.num_vertices() % 2 == 0;
}

void criterion1() {
  Criterion c{1, "Petersen golden values"};
  const Graph g = oracle::corpus("petersen.g6");
  const MeasureReport r = measure(g);
  c.require(r.defect.exact() && r.defect.lo == 3, "defect " + r.defect.str());
  c.require(r.oddness.exact() && r.oddness.lo == 2, "oddness " + r.oddness.str());
  c.require(r.resistance.exact() && r.resistance.lo == 2, "resistance " + r.resistance.str());
  c.require(r.density.exact() && r.density.lo == 1, "density " + r.density.str());
  c.require(r.girth.exact() && r.girth.lo == 5, "girth " + r.girth.str());
  c.require(r.perfect_matchings == std::size_t{6}, "perfect matchings");
  const bool six_cycle = r.core && r.core->components.size() == 1 && r.core->components[0].kind == CoreKind::even_circuit &&
                         r.core->components[0].edges.size() == 6 && r.core->edges.size() == 6;
  c.require(six_cycle, "core is not a 6-cycle");
  c.detail << " d=" << r.defect.str() << " w=" << r.oddness.str() << " r=" << r.resistance.str() << " dn=" << r.density.str()
           << " g=" << r.girth.str() << " pm=" << (r.perfect_matchings ? *r.perfect_matchings : 0) << " core=6-cycle:" << six_cycle;
  c.finish(kBudget1);
}

void criterion2() {
  Criterion c{2, "array bookkeeping on sampled 3-arrays"};
  std::vector<std::pair<Graph, std::vector<PerfectMatching>>> pool;
  for (const auto& f : corpus_files()) {
    const Graph g = read_graph_file(f);
    if (!audit_clean(g)) continue;
    pool.emplace_back(g, enumerate_perfect_matchings(g));
  }
  std::mt19937 rng(kSampleSeed);
  int bad_bookkeeping = 0, bad_colouring = 0;
  for (int s = 0; s < kSampledArrays; ++s) {
    const auto& [g, pms] = pool[static_cast<std::size_t>(s) % pool.size()];
    std::uniform_int_distribution<std::size_t> pick(0, pms.size() - 1);
    const ThreeArray a(g, {pms[pick(rng)], pms[pick(rng)], pms[pick(rng)]});
    bad_bookkeeping += !a.bookkeeping_holds();
    const auto e0 = a.E(0).members();
    const Multipole rest = e0.empty() ? g.multipole() : cut_edges(g.multipole(), e0);
    bad_colouring += !find_colouring(rest).found();
  }
  c.require(bad_bookkeeping == 0, std::to_string(bad_bookkeeping) + " bookkeeping violations");
  c.require(bad_colouring == 0, std::to_string(bad_colouring) + " uncolourable g - E0");
  c.detail << " " << kSampledArrays << " arrays over " << pool.size() << " graphs";
  c.finish(kBudget2);
}

void criterion3() {
  Criterion c{3, "oracle equivalence on small bridgeless cubic graphs"};
  int graphs = 0;
  for (const auto& f : corpus_files()) {
    const Graph g = read_graph_file(f);
    if (!audit_clean(g) || g.num_vertices() > kOracleMaxVertices) continue;
    ++graphs;
    const std::string name = f.filename().string();
    const int d = defect(g).defect, w = oddness(g).oddness, dn = density(g).density;
    c.require(d == oracle::defect(g), name + " defect");
    c.require(w == oracle::oddness(g), name + " oddness");
    c.require(dn == oracle::density(g), name + " density");
  }
  c.require(graphs > 0, "no graphs");
  c.detail << " " << graphs << " graphs";
  c.finish(kBudget3);
}

void criterion4() {
  Criterion c{4, "inequality audit over corpus snarks"};
  int snarks = 0, violations = 0;
  std::vector<std::string> required{"petersen.g6", "blanusa-1.g6", "blanusa-2.g6", "flower-j5.g6"};
  for (const auto& f : corpus_files()) {
    const Graph g = read_graph_file(f);
    if (!audit_clean(g)) continue;
    const MeasureReport r = measure(g);
    if (!r.colourable || *r.colourable) continue;
    ++snarks;
    const std::string name = f.filename().string();
    std::erase(required, name);
    const bool exact = r.defect.exact() && r.oddness.exact() && r.resistance.exact() && r.density.exact() && r.girth.exact();
    c.require(exact, name + " has inexact values");
    if (!exact) continue;
    const int d = r.defect.lo, w = r.oddness.lo, rho = r.resistance.lo, dn = r.density.lo, gi = r.girth.lo;
    const bool ok = w <= 2 * dn && 2 * dn <= d - 1 && 2 * d >= 3 * w && d >= (gi + 1) / 2 && rho <= w;
    if (!ok) {
      ++violations;
      c.require(false, name + " violates an inequality");
    }
    c.require(audit_passed(audit_inequalities(r)), name + " audit");
  }
  c.require(snarks >= kMinSnarks, "only " + std::to_string(snarks) + " snarks");
  c.require(required.empty(), "missing required snarks");
  c.detail << " " << snarks << " snarks, " << violations << " violations";
  c.finish(kBudget4);
}

void construction(int girth, const std::string& cage) {
  Criterion c{5, "construction g=" + std::to_string(girth) + " (" + cage + ")"};
  ConstructionPlan plan;
  plan.girth = girth;
  plan.cage = cage;
  try {
    const Construction k = build_snark(plan);
    const Graph& g = k.graph;
    const int gi = snark::girth(g);
    c.require(gi == girth, "girth " + std::to_string(gi));
    c.require(certify_snark(g, k.bundle.snark), "snark certificate");
    const bool near = k.bundle.near_colouring.has_value();
    c.require(near, "no near-colouring");
    if (near) {
      const auto sup = residual_support(g.multipole(), k.bundle.near_colouring->colours);
      c.require(sup == std::vector<int>{std::min(k.u, k.v), std::max(k.u, k.v)}, "residual support");
    }
    c.require(cyclic_connectivity_at_least(g, 5).holds, "cyclic connectivity 5");
    c.require(k.bundle.oddness == 2, "oddness claim");
    c.require(k.bundle.defect_at_least >= girth / 2, "defect bound");
    for (const auto& item : verify_bundle(g, k.bundle)) c.require(item.ok, "verify " + item.name);
    c.detail << " n=" << g.num_vertices() << " girth=" << gi << " defect>=" << k.bundle.defect_at_least << " oddness=2";
  } catch (const std::exception& e) {
    c.require(false, e.what());
  }
  c.finish(kBudget5);
}

void criterion6() {
  Criterion c{6, "K has no nowhere-zero Klein flow"};
  const KStructure k = build_K();
  const auto r = find_nowhere_zero_flow(k.k);
  c.require(k.k.num_vertices() == 26, "K has " + std::to_string(k.k.num_vertices()) + " vertices");
  c.require(r.status == Search::none, std::string("search ") + to_string(r.status));
  c.require(is_decycling(k.k, k.decycling), "U is not decycling");
  c.detail << " " << r.nodes << " nodes";
  c.finish(kBudget6);
}

void criterion7() {
  Criterion c{7, "F_6 is a proper dipole"};
  ConstructionPlan plan;
  plan.girth = 6;
  const Superedge f = build_Fg(make_Mg(load_cage("heawood")), plan);
  const Spectrum s = boundary_spectrum(f.dipole);
  c.require(s.exact, "spectrum inexact");
  c.require(!s.vectors.empty(), "empty spectrum");
  c.require(s.vectors.size() == kSpectrumF6, "spectrum size " + std::to_string(s.vectors.size()));
  int zero = 0, open = 0;
  const std::set<BoundaryVector> all(s.vectors.begin(), s.vectors.end());
  std::array<int, 4> perm{0, 1, 2, 3};
  for (const auto& v : s.vectors) zero += total_flow(f.dipole, v) == 0;
  do {
    for (const auto& v : s.vectors) {
      BoundaryVector w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = perm[static_cast<std::size_t>(v[i])];
      open += !all.count(w);
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  c.require(zero == 0, std::to_string(zero) + " vectors with zero total flow");
  c.require(open == 0, "not closed under colour permutations");
  c.detail << " " << s.vectors.size() << " vectors";
  c.finish(kBudget7);
}

std::string run(const std::string& args) {
  const std::string cmd = std::string(SNARKDEFECT_EXE) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  out += "\nexit " + std::to_string(WIFEXITED(st) ? WEXITSTATUS(st) : -1);
  return out;
}

void criterion8() {
  Criterion c{8, "determinism"};
  const fs::path dir = fs::temp_directory_path() / "snarkdefect-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  const std::string corpus = std::string(SNARK_DATA_DIR) + "/corpus";
  const std::string pet = corpus + "/petersen.g6";
  const std::vector<std::string> commands{
      "measure " + pet + " --all",
      "measure " + pet + " --all --json --serial",
      "defect " + corpus + "/blanusa-2.g6 --oracle",
      "audit-corpus " + corpus,
      "audit-corpus " + corpus + " --json",
  };
  int differing = 0;
  for (const auto& cmd : commands) {
    const std::string x = run(cmd), y = run(cmd);
    if (x != y) {
      ++differing;
      c.require(false, cmd);
    }
  }
  const std::string ba = run("build-snark --girth 6 --cage heawood --out " + (dir / "a" / "s").string());
  const std::string bb = run("build-snark --girth 6 --cage heawood --out " + (dir / "b" / "s").string());
  if (ba != bb) ++differing;
  c.require(ba == bb, "build-snark output");
  for (const char* ext : {".s6", ".bundle.json", ".colouring", ".plan.json"}) {
    const bool same = read_text_file(dir / "a" / (std::string("s") + ext)) == read_text_file(dir / "b" / (std::string("s") + ext));
    if (!same) ++differing;
    c.require(same, std::string("build-snark ") + ext);
  }
  const std::string v1 = run("verify " + (dir / "a/s.s6").string() + " --bundle " + (dir / "a/s.bundle.json").string());
  const std::string v2 = run("verify " + (dir / "a/s.s6").string() + " --bundle " + (dir / "a/s.bundle.json").string());
  c.require(v1 == v2, "verify");
  c.require(v1.ends_with("exit 0"), "verify exit status");
  c.detail << " " << commands.size() + 6 << " commands compared, " << differing << " differ";
  c.finish(1e9);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  construction(6, "heawood");
  construction(8, "tutte-coxeter");
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
