#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "snark/colouring.hpp"
#include "snark/matchings.hpp"

using namespace snark;

namespace {

std::vector<std::vector<int>> members(const std::vector<PerfectMatching>& pms) {
  std::vector<std::vector<int>> out;
  for (const auto& m : pms) out.push_back(m.members());
  return out;
}

const std::vector<std::string> kSmall{"k4.g6",    "k33.g6",    "prism.g6",   "cube.g6",      "mobius-8.g6",
                                      "theta.s6", "petersen.g6", "prism-5.g6", "franklin.g6", "frucht.g6",
                                      "tietze.g6", "heawood.g6", "petersen-2tri.g6", "petersen-k33.g6"};

}  // namespace

TEST_SUITE("matchings") {
  TEST_CASE("edge sets") {
    EdgeSet a(70), b(70);
    a.set(1);
    a.set(65);
    b.set(65);
    b.set(3);
    CHECK(a.count() == 2);
    CHECK(a.count_and(b) == 1);
    CHECK(a.count_or(b) == 3);
    CHECK(a.count_minus(b) == 1);
    CHECK((a | b).members() == std::vector<int>{1, 3, 65});
    CHECK((a & b).members() == std::vector<int>{65});
    CHECK(EdgeSet::of(70, std::vector<int>{1, 65}) == a);
  }

  TEST_CASE("perfect matchings agree with subset enumeration") {
    for (const auto& name : kSmall) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto pms = enumerate_perfect_matchings(g);
      auto expect = oracle::perfect_matchings(g);
      std::sort(expect.begin(), expect.end());
      CHECK(members(pms) == expect);
      for (const auto& m : pms) CHECK(is_perfect_matching(g.multipole(), m));
    }
    CHECK(enumerate_perfect_matchings(oracle::corpus("petersen.g6")).size() == 6);
    CHECK(enumerate_perfect_matchings(oracle::corpus("heawood.g6")).size() == 24);
    CHECK_THROWS_AS(enumerate_perfect_matchings(oracle::corpus("heawood.g6"), 10), MatchingError);
  }

  TEST_CASE("matching through an edge") {
    const Graph g = oracle::corpus("petersen.g6");
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto m = matching_through_edge(g, e);
      CHECK(m.test(e));
      CHECK(is_perfect_matching(g.multipole(), m));
    }
  }

  TEST_CASE("array bookkeeping on random triples") {
    std::mt19937 rng(7);
    for (const auto& name : kSmall) {
      const Graph g = oracle::corpus(name);
      const auto pms = enumerate_perfect_matchings(g);
      std::uniform_int_distribution<std::size_t> pick(0, pms.size() - 1);
      for (int t = 0; t < 20; ++t) {
        const ThreeArray a(g, {pms[pick(rng)], pms[pick(rng)], pms[pick(rng)]});
        CHECK(a.bookkeeping_holds());
        int total = 0;
        for (int i = 0; i < 4; ++i) total += a.E(i).count();
        CHECK(total == g.num_edges());
        const auto e0 = a.E(0).members();
        const Multipole rest = e0.empty() ? g.multipole() : cut_edges(g.multipole(), e0);
        CHECK(find_colouring(rest).found());
      }
    }
  }

  TEST_CASE("defect agrees with the oracle") {
    for (const auto& name : kSmall) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto ser = defect(g, Exec::serial);
      const auto par = defect(g, Exec::parallel);
      CHECK(ser.defect == oracle::defect(g));
      CHECK(par.defect == ser.defect);
      CHECK(par.witness == ser.witness);
      CHECK(ser.array(g).uncovered() == ser.defect);
    }
  }

  TEST_CASE("Petersen core is a six-cycle") {
    const Graph g = oracle::corpus("petersen.g6");
    const auto d = defect(g);
    REQUIRE(d.defect == 3);
    const auto a = d.array(g);
    const Core c = core_of(a, g);
    CHECK(c.cyclic);
    CHECK(c.audit_ok);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].kind == CoreKind::even_circuit);
    CHECK(c.components[0].edges.size() == 6);
    const auto phi = phi_of(a, g);
    CHECK_FALSE(phi.proper_colouring);
    int empty = 0;
    for (int x : phi.mask) empty += x == 0;
    CHECK(empty == 3);
    CHECK(phi_label_string(7) == "123");
  }

  TEST_CASE("colourable graphs have an empty optimal core") {
    const Graph g = oracle::corpus("cube.g6");
    const auto d = defect(g);
    CHECK(d.defect == 0);
    const auto a = d.array(g);
    CHECK(core_of(a, g).edges.empty());
    CHECK(phi_of(a, g).proper_colouring);
  }

  TEST_CASE("triply covered edges make a non-cyclic core") {
    const Graph g = oracle::corpus("petersen.g6");
    const auto pms = enumerate_perfect_matchings(g);
    const ThreeArray a(g, {pms[0], pms[0], pms[1]});
    const Core c = core_of(a, g);
    CHECK_FALSE(c.cyclic);
    CHECK(a.E(3).count() > 0);
    for (const auto& comp : c.components) CHECK(comp.kind != CoreKind::odd_circuit);
  }

  TEST_CASE("no perfect matching") {
    const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}};
    CHECK_THROWS_AS(defect(make_graph(4, e)), MatchingError);
  }

  TEST_CASE("Fan-Raspaud arrays") {
    for (const auto& name : kSmall) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto r = fan_raspaud_array(g);
      REQUIRE(r.status == Search::found);
      const auto& w = *r.witness;
      const auto all = r.matchings[static_cast<std::size_t>(w[0])] & r.matchings[static_cast<std::size_t>(w[1])] &
                       r.matchings[static_cast<std::size_t>(w[2])];
      CHECK(all.count() == 0);
    }
  }
}
