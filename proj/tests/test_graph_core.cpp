#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "snark/graph_algo.hpp"
#include "snark/graph_io.hpp"
#include "snark/multipole.hpp"

using namespace snark;

namespace {

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(std::string(SNARK_DATA_DIR) + "/corpus")) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Multipole star() {
  return Multipole(1, {{{0, kFree}}, {{0, kFree}}, {{0, kFree}}}, {{{0, 1}, {1, 1}, {2, 1}}});
}

// Component-wise edges == vertices - 1 after removing `dead`.
bool acyclic_after(const Graph& g, const std::vector<int>& dead) {
  std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : dead) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> p(gone.size());
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); };
  for (const auto& e : g.edges()) {
    if (gone[static_cast<std::size_t>(e.ends[0])] || gone[static_cast<std::size_t>(e.ends[1])]) continue;
    const int a = find(e.ends[0]), b = find(e.ends[1]);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("graph6 and sparse6 round trips over the corpus") {
    for (const auto& f : corpus_files()) {
      CAPTURE(f.filename().string());
      const Graph g = read_graph_file(f);
      CHECK(parse_sparse6(to_sparse6(g)) == g);
      CHECK(checksum(parse_sparse6(to_sparse6(g))) == checksum(g));
      if (g.is_simple()) CHECK(parse_graph6(to_graph6(g)) == g);
    }
  }

  TEST_CASE("graph6 details") {
    const Graph k4 = parse_graph6("C~");
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(parse_graph(">>graph6<<C~\n") == k4);
    CHECK(to_graph6(k4) == "C~");
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("I"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);
    CHECK_THROWS_AS(to_graph6(oracle::corpus("theta.s6")), MultipoleError);
  }

  TEST_CASE("sparse6 keeps parallel edges") {
    const Graph t = oracle::corpus("theta.s6");
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 3);
    CHECK_FALSE(t.is_simple());
    CHECK(t.is_cubic());
    CHECK(girth(t) == 2);
  }

  TEST_CASE("multipole text round trip and errors") {
    const Multipole m = delete_vertex(oracle::corpus("petersen.g6").multipole(), 0);
    const std::string text = to_multipole_text(m);
    CHECK(parse_multipole(text) == m);
    CHECK(parse_any(text) == m);
    CHECK_THROWS_AS(parse_multipole("VERTICES 2\nEDGES 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_multipole("VERTICES 2\nEDGES 2\n0 1\n"), ParseError);
  }

  TEST_CASE("canonical edge order") {
    const Multipole m(3, {{{2, 1}}, {{kFree, 0}}, {{1, 0}}, {{2, kFree}}});
    REQUIRE(m.num_edges() == 4);
    CHECK(m.edge(0).ends == std::array<int, 2>{0, 1});
    CHECK(m.edge(1).ends == std::array<int, 2>{0, kFree});
    CHECK(m.edge(2).ends == std::array<int, 2>{1, 2});
    CHECK(m.edge(3).ends == std::array<int, 2>{2, kFree});
  }

  TEST_CASE("delete a vertex and plug it back") {
    const Graph p = oracle::corpus("petersen.g6");
    const Multipole d = delete_vertex(p.multipole(), 0);
    CHECK(d.num_vertices() == 9);
    CHECK(d.num_free_ends() == 3);
    REQUIRE(d.connectors().size() == 1);
    const Graph back(junction(d, 0, star(), 0));
    CHECK(back.num_vertices() == 10);
    CHECK(back.num_edges() == 15);
    CHECK(back.is_cubic());
    CHECK(girth(back) == 5);
    CHECK(validate(back.multipole()).ok());
  }

  TEST_CASE("isolated edges dissolve and labels must agree") {
    const Multipole m(2, {{{0, kFree}, 2}, {{kFree, kFree}, 0}, {{1, kFree}, 2}});
    REQUIRE(m.edge(2).is_isolated());
    const std::vector<std::pair<EndRef, EndRef>> pairs{{{0, 1}, {2, 0}}, {{2, 1}, {1, 1}}};
    const Multipole j = identify_ends(m, pairs);
    REQUIRE(j.num_edges() == 1);
    CHECK(j.edge(0).ends == std::array<int, 2>{0, 1});
    CHECK(j.edge(0).label == 2);
    CHECK_FALSE(j.has_free_ends());

    const Multipole bad(2, {{{0, kFree}, 2}, {{kFree, kFree}, 0}, {{1, kFree}, 3}});
    CHECK_THROWS_AS(identify_ends(bad, pairs), MultipoleError);
  }

  TEST_CASE("substitute a triangle for a vertex") {
    const Graph p = oracle::corpus("petersen.g6");
    const Multipole tri(3, {{{0, 1}}, {{1, 2}}, {{0, 2}}, {{0, kFree}}, {{1, kFree}}, {{2, kFree}}});
    const std::vector<EndRef> assign = tri.boundary_ends();
    const Graph s(substitute_vertex(p.multipole(), 0, tri, assign));
    CHECK(s.num_vertices() == 12);
    CHECK(s.num_edges() == 18);
    CHECK(s.is_cubic());
    CHECK(girth(s) == oracle::girth(s));
    CHECK(girth(s) == 3);
  }

  TEST_CASE("substitute an edge") {
    const Graph p = oracle::corpus("petersen.g6");
    // Ends a0 a1 | b0 b1.
    const Multipole path(2, {{{0, 1}}, {{0, kFree}}, {{0, kFree}}, {{1, kFree}}, {{1, kFree}}},
                         {{{1, 1}, {2, 1}}, {{3, 1}, {4, 1}}});
    const Multipole s = substitute_edge(p.multipole(), 0, path, 0, 1);
    CHECK(s.num_vertices() == 12);
    CHECK(s.num_edges() == 19);
    CHECK_FALSE(s.is_cubic());
  }

  TEST_CASE("cut and extract") {
    const Graph p = oracle::corpus("petersen.g6");
    const std::vector<int> cut{0};
    const Multipole c = cut_edges(p.multipole(), cut);
    CHECK(c.num_edges() == 16);
    REQUIRE(c.connectors().size() == 2);
    CHECK(c.connectors()[0].size() == 1);
    CHECK(c.connectors()[1].size() == 1);

    std::vector<char> inside(10, 0);
    std::vector<int> verts;
    for (int v = 0; v < 5; ++v) verts.push_back(v);
    for (int v : verts) inside[static_cast<std::size_t>(v)] = 1;
    const auto leaving = boundary_edges(p.multipole(), inside);
    CHECK(leaving.size() == 5);
    const std::vector<std::vector<int>> conns{leaving};
    const Multipole x = extract(p.multipole(), verts, conns);
    CHECK(x.num_vertices() == 5);
    CHECK(x.num_free_ends() == 5);
    CHECK(x.is_cubic());
  }

  TEST_CASE("girth and shortest cycle against the oracle") {
    for (const auto& f : corpus_files()) {
      const Graph g = read_graph_file(f);
      if (g.num_vertices() > 14) continue;
      CAPTURE(f.filename().string());
      CHECK(girth(g) == oracle::girth(g));
      const auto cyc = shortest_cycle(g.multipole());
      CHECK(static_cast<int>(cyc.size()) == girth(g));
    }
  }

  TEST_CASE("bridges and bipartiteness") {
    const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                                             {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9}, {4, 9}};
    const Graph b = make_graph(10, e);
    CHECK(b.is_cubic());
    CHECK(bridges(b.multipole()).size() == 1);
    CHECK_FALSE(is_bridgeless(b.multipole()));
    for (const auto& f : corpus_files()) CHECK(is_bridgeless(read_graph_file(f).multipole()));
    CHECK(is_bipartite(oracle::corpus("heawood.g6").multipole()));
    CHECK_FALSE(is_bipartite(oracle::corpus("petersen.g6").multipole()));
  }

  TEST_CASE("decycling sets against the oracle") {
    const Graph p = oracle::corpus("petersen.g6");
    int decycling = 0;
    oracle::for_each_subset(10, 3, [&](const std::vector<int>& s) {
      CHECK(is_decycling(p.multipole(), s) == acyclic_after(p, s));
      decycling += acyclic_after(p, s);
    });
    CHECK(decycling > 0);
  }

  TEST_CASE("LCF cages") {
    const std::array<int, 2> shifts{5, -5};
    const Graph h = make_lcf_graph(14, shifts);
    CHECK(h.is_cubic());
    CHECK(girth(h) == 6);
    CHECK(is_bipartite(h.multipole()));
  }

  TEST_CASE("validation reports malformed multipoles") {
    const Multipole m(2, {{{0, 1}}, {{0, 1}}});
    CHECK_FALSE(validate(m).ok());
    CHECK(validate(star()).ok());
  }
}
