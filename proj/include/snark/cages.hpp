#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

class CageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CageEntry {
  std::string name;
  int girth = 0;
  bool bipartite = false;
  Graph graph;
};

/// Registry names: "heawood" (girth 6), "mcgee" (girth 7), "tutte-coxeter"
/// (girth 8).
std::vector<std::string> cage_names();

/// Builds a registry entry and revalidates it. Throws CageError for an
/// unknown name.
CageEntry load_cage(const std::string& name);

/// Reads a user-supplied cubic graph. The girth and bipartite flag are
/// computed; `expected_girth` (if > 0) must match.
CageEntry load_cage_file(const std::filesystem::path& path, int expected_girth = 0);

/// Default registry entry for girth g, or throws CageError.
CageEntry cage_for_girth(int g);

/// Cubic, connected, declared girth and bipartiteness recomputed.
void validate_cage(const CageEntry& c);

}  // namespace snark
