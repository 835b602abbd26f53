#include "snark/colouring.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace snark {

int klein_sum(std::span<const int> colours) {
  int s = 0;
  for (int c : colours) s ^= c;
  return s;
}

bool parity_check(std::span<const int> colours) { return klein_sum(colours) == 0; }

std::vector<int> flow_residual(const Multipole& m, std::span<const int> values) {
  if (values.size() != static_cast<std::size_t>(m.num_edges())) throw ColouringError("value list has wrong length");
  std::vector<int> r(static_cast<std::size_t>(m.num_vertices()), 0);
  for (int e = 0; e < m.num_edges(); ++e) {
    const Edge& ed = m.edge(e);
    if (ed.is_loop()) continue;
    for (int x : ed.ends) {
      if (x != kFree) r[static_cast<std::size_t>(x)] ^= values[static_cast<std::size_t>(e)];
    }
  }
  return r;
}

std::vector<int> residual_support(const Multipole& m, std::span<const int> values) {
  const auto r = flow_residual(m, values);
  std::vector<int> out;
  for (std::size_t v = 0; v < r.size(); ++v) {
    if (r[v] != 0) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool is_nowhere_zero_flow(const Multipole& m, std::span<const int> values) {
  if (values.size() != static_cast<std::size_t>(m.num_edges())) return false;
  for (int c : values) {
    if (c < 1 || c > 3) return false;
  }
  return residual_support(m, values).empty();
}

bool is_proper_colouring(const Multipole& m, std::span<const int> colours) {
  if (colours.size() != static_cast<std::size_t>(m.num_edges())) return false;
  for (int v = 0; v < m.num_vertices(); ++v) {
    int seen = 0;
    for (const Incidence& inc : m.incident(v)) {
      const int c = colours[static_cast<std::size_t>(inc.edge)];
      if (c < 1 || c > 3 || (seen & (1 << c))) return false;
      seen |= 1 << c;
    }
  }
  for (int c : colours) {
    if (c < 1 || c > 3) return false;
  }
  return true;
}

std::vector<int> colouring_to_flow(const Multipole& m, std::span<const int> colours) {
  if (!m.is_cubic() || !is_proper_colouring(m, colours)) throw ColouringError("not a proper 3-edge-colouring of a cubic multipole");
  return {colours.begin(), colours.end()};
}

std::optional<EdgeColouring> flow_to_colouring(const Multipole& m, std::span<const int> flow) {
  if (!is_nowhere_zero_flow(m, flow)) return std::nullopt;
  EdgeColouring c(flow.begin(), flow.end());
  if (!is_proper_colouring(m, c)) return std::nullopt;
  return c;
}

namespace {

bool has_loop(const Multipole& m) {
  return std::any_of(m.edges().begin(), m.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

void check_partial(const Multipole& m, const EdgeColouring& partial) {
  if (partial.size() != static_cast<std::size_t>(m.num_edges())) throw ColouringError("partial colouring has wrong length");
  for (int c : partial) {
    if (c < 0 || c > 3) throw ColouringError("partial colouring uses a value outside 0..3");
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    int seen = 0;
    for (const Incidence& inc : m.incident(v)) {
      const int c = partial[static_cast<std::size_t>(inc.edge)];
      if (c == 0) continue;
      if (seen & (1 << c)) throw ColouringError("partial colouring is improper at vertex " + std::to_string(v));
      seen |= 1 << c;
    }
  }
}

// Fixes the boundary; false when it cannot be realised locally.
bool fix_boundary(FlowSearch& fs, const std::vector<EndRef>& ends, std::span<const int> b) {
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (!fs.fix(ends[i].edge, b[i])) return false;
  }
  return true;
}

}  // namespace

ColouringResult find_colouring(const Multipole& m, const std::optional<BoundaryVector>& boundary,
                               const EdgeColouring* partial, Budget budget) {
  const auto ends = m.boundary_ends();
  if (boundary) {
    if (boundary->size() != ends.size()) throw ColouringError("boundary vector has wrong length");
    for (int c : *boundary) {
      if (c < 1 || c > 3) throw ColouringError("boundary colour outside 1..3");
    }
  }
  if (partial) check_partial(m, *partial);
  ColouringResult r;
  if (!m.is_cubic() || has_loop(m)) return r;
  FlowSearch fs(m);
  if (boundary && !fix_boundary(fs, ends, *boundary)) return r;
  if (partial) {
    for (int e = 0; e < m.num_edges(); ++e) {
      const int c = (*partial)[static_cast<std::size_t>(e)];
      if (c != 0 && !fs.fix(e, c)) return r;
    }
  }
  r.status = fs.solve(budget);
  r.nodes = fs.nodes();
  if (r.found()) r.colours = fs.values();
  return r;
}

ColouringResult find_nowhere_zero_flow(const Multipole& m, Budget budget) {
  FlowSearch fs(m);
  ColouringResult r;
  r.status = fs.solve(budget);
  r.nodes = fs.nodes();
  if (r.found()) r.colours = fs.values();
  return r;
}

bool is_colourable(const Multipole& m, Budget budget) {
  const auto r = find_colouring(m, std::nullopt, nullptr, budget);
  if (r.status == Search::undecided) throw std::runtime_error("colourability undecided within budget");
  return r.found();
}

namespace {

BoundaryVector decode_candidate(std::uint64_t idx, std::size_t n) {
  BoundaryVector b(n);
  for (std::size_t i = n; i-- > 0;) {
    b[i] = static_cast<int>(idx % 3) + 1;
    idx /= 3;
  }
  return b;
}

}  // namespace

Spectrum boundary_spectrum(const Multipole& m, Exec exec, Budget per_candidate) {
  const auto ends = m.boundary_ends();
  if (ends.empty()) throw ColouringError("boundary spectrum needs at least one free end");
  if (ends.size() > 20) throw ColouringError("too many free ends for boundary enumeration");
  Spectrum sp;
  if (!m.is_cubic() || has_loop(m)) return sp;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ends.size(); ++i) total *= 3;
  std::vector<std::uint64_t> cands;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (parity_check(decode_candidate(idx, ends.size()))) cands.push_back(idx);
  }
  sp.candidates = cands.size();
  std::vector<char> status(cands.size(), 0);  // 0 none, 1 found, 2 undecided
  std::vector<std::uint64_t> nodes(cands.size(), 0);
  auto run = [&](FlowSearch& fs, std::size_t i) {
    fs.reset();
    const BoundaryVector b = decode_candidate(cands[i], ends.size());
    if (!fix_boundary(fs, ends, b)) return;
    const Search s = fs.solve(per_candidate);
    nodes[i] = fs.nodes();
    status[i] = s == Search::found ? 1 : (s == Search::undecided ? 2 : 0);
  };
  const auto count = static_cast<std::int64_t>(cands.size());
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      FlowSearch fs(m);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) run(fs, static_cast<std::size_t>(i));
    }
  } else {
    FlowSearch fs(m);
    for (std::int64_t i = 0; i < count; ++i) run(fs, static_cast<std::size_t>(i));
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    sp.nodes += nodes[i];
    if (status[i] == 1) sp.vectors.push_back(decode_candidate(cands[i], ends.size()));
    if (status[i] == 2) sp.exact = false;
  }
  return sp;
}

std::vector<std::vector<int>> connector_positions(const Multipole& m) {
  std::vector<std::vector<int>> out;
  int pos = 0;
  for (const Connector& c : m.connectors()) {
    std::vector<int> p;
    for (std::size_t i = 0; i < c.size(); ++i) p.push_back(pos++);
    out.push_back(std::move(p));
  }
  return out;
}

int total_flow(const Multipole& dipole, const BoundaryVector& b) {
  if (dipole.connectors().empty()) throw ColouringError("dipole has no connectors");
  const auto positions = connector_positions(dipole);
  int s = 0;
  for (int p : positions.front()) s ^= b.at(static_cast<std::size_t>(p));
  return s;
}

DipoleCheck is_proper_dipole(const Multipole& f, Exec exec) {
  if (f.connectors().size() != 2) throw ColouringError("a dipole needs exactly two connectors");
  if (static_cast<int>(f.connectors()[0].size() + f.connectors()[1].size()) != f.num_free_ends()) {
    throw ColouringError("dipole connectors must cover every free end");
  }
  DipoleCheck r;
  r.spectrum = boundary_spectrum(f, exec);
  r.exact = r.spectrum.exact;
  r.proper = r.exact;
  for (const auto& b : r.spectrum.vectors) {
    if (total_flow(f, b) == 0) {
      r.proper = false;
      r.offending = b;
      break;
    }
  }
  return r;
}

Multipole remove_vertices(const Multipole& m, std::span<const int> h) {
  std::vector<char> gone(static_cast<std::size_t>(m.num_vertices()), 0);
  for (int v : h) gone.at(static_cast<std::size_t>(v)) = 1;
  std::vector<int> newid(static_cast<std::size_t>(m.num_vertices()), kFree);
  int next = 0;
  std::vector<int> tags;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) {
      newid[static_cast<std::size_t>(v)] = next++;
      tags.push_back(m.tag(v));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    Edge ne{{kFree, kFree}, e.label};
    for (std::size_t s = 0; s < 2; ++s) {
      if (e.ends[s] != kFree) ne.ends[s] = newid[static_cast<std::size_t>(e.ends[s])];
    }
    if (ne.ends[0] == kFree && ne.ends[1] == kFree) continue;
    edges.push_back(ne);
  }
  return Multipole(next, std::move(edges), {}, std::move(tags));
}

bool is_removable(const Graph& g, std::span<const int> h, Strictness mode, Budget budget) {
  if (mode == Strictness::strict && is_colourable(g.multipole(), budget)) {
    throw ColouringError("removability is defined for snarks only");
  }
  return !is_colourable(remove_vertices(g.multipole(), h), budget);
}

}  // namespace snark
