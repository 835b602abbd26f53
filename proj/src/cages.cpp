#include "snark/cages.hpp"

#include <array>

#include "snark/graph_algo.hpp"
#include "snark/graph_io.hpp"

namespace snark {

namespace {

struct Lcf {
  const char* name;
  int vertices;
  int girth;
  bool bipartite;
  std::vector<int> shifts;
};

const std::vector<Lcf>& registry() {
  static const std::vector<Lcf> r = {
      {"heawood", 14, 6, true, {5, -5}},
      {"mcgee", 24, 7, false, {12, 7, -7}},
      {"tutte-coxeter", 30, 8, true, {-13, -9, 7, -7, 9, 13}},
  };
  return r;
}

}  // namespace

std::vector<std::string> cage_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.emplace_back(e.name);
  return out;
}

void validate_cage(const CageEntry& c) {
  const Multipole& m = c.graph.multipole();
  if (!c.graph.is_cubic()) throw CageError(c.name + ": not cubic");
  if (!is_connected(m)) throw CageError(c.name + ": not connected");
  const auto g = multipole_girth(m);
  if (!g || *g != c.girth) {
    throw CageError(c.name + ": girth is " + (g ? std::to_string(*g) : std::string("infinite")) + ", declared " +
                    std::to_string(c.girth));
  }
  if (is_bipartite(m) != c.bipartite) throw CageError(c.name + ": bipartite flag does not match");
}

CageEntry load_cage(const std::string& name) {
  for (const auto& e : registry()) {
    if (name == e.name) {
      CageEntry c{e.name, e.girth, e.bipartite, make_lcf_graph(e.vertices, e.shifts)};
      validate_cage(c);
      return c;
    }
  }
  std::string known;
  for (const auto& n : cage_names()) known += (known.empty() ? "" : ", ") + n;
  throw CageError("unknown cage '" + name + "' (registry: " + known + ")");
}

CageEntry load_cage_file(const std::filesystem::path& path, int expected_girth) {
  CageEntry c;
  c.name = path.filename().string();
  c.graph = read_graph_file(path);
  if (!c.graph.is_cubic()) throw CageError(c.name + ": not cubic");
  const auto g = multipole_girth(c.graph.multipole());
  if (!g) throw CageError(c.name + ": acyclic");
  c.girth = *g;
  c.bipartite = is_bipartite(c.graph.multipole());
  if (expected_girth > 0 && c.girth != expected_girth) {
    throw CageError(c.name + ": girth " + std::to_string(c.girth) + ", expected " + std::to_string(expected_girth));
  }
  validate_cage(c);
  return c;
}

CageEntry cage_for_girth(int g) {
  for (const auto& e : registry()) {
    if (e.girth == g) return load_cage(e.name);
  }
  throw CageError("no registry cage of girth " + std::to_string(g) + "; supply one with --cage <path>");
}

}  // namespace snark
