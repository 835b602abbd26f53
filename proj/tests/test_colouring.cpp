#include <doctest.h>

#include "oracles.hpp"
#include "snark/colouring.hpp"
#include "snark/superposition.hpp"

using namespace snark;

namespace {

std::vector<int> lex_least_colouring(const Multipole& m) {
  std::vector<int> best;
  oracle::for_each_colouring(m, {}, [&](const std::vector<int>& c) {
    if (best.empty() || c < best) best = c;
    return false;
  });
  return best;
}

std::set<std::vector<int>> as_set(const Spectrum& s) { return {s.vectors.begin(), s.vectors.end()}; }

Multipole petersen_dipole() {
  // Remove the adjacent vertices 1 and 0 of the standard labelling.
  const Multipole a = delete_vertex(petersen_graph().multipole(), 1);
  return delete_vertex(a, 0);
}

}  // namespace

TEST_SUITE("colouring") {
  TEST_CASE("Klein arithmetic and the parity check") {
    const std::vector<int> a{1, 2, 3};
    const std::vector<int> b{1, 1, 2};
    CHECK(klein_sum(a) == 0);
    CHECK(parity_check(a));
    CHECK(klein_sum(b) == 2);
    CHECK_FALSE(parity_check(b));
  }

  TEST_CASE("colourability agrees with exhaustive search") {
    for (const char* name : {"k4.g6", "k33.g6", "prism.g6", "cube.g6", "mobius-8.g6", "theta.s6", "petersen.g6", "prism-5.g6"}) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto r = find_colouring(g.multipole());
      CHECK(r.found() == oracle::colourable(g.multipole()));
      if (r.found()) {
        CHECK(is_proper_colouring(g.multipole(), r.colours));
        if (g.num_edges() <= 12) CHECK(r.colours == lex_least_colouring(g.multipole()));
      }
    }
  }

  TEST_CASE("flows and colourings correspond on cubic graphs") {
    const Graph g = oracle::corpus("cube.g6");
    const auto c = find_colouring(g.multipole());
    REQUIRE(c.found());
    const auto f = colouring_to_flow(g.multipole(), c.colours);
    CHECK(is_nowhere_zero_flow(g.multipole(), f));
    CHECK(residual_support(g.multipole(), f).empty());
    CHECK(flow_to_colouring(g.multipole(), f) == c.colours);
    auto broken = f;
    broken[0] = 0;
    CHECK_FALSE(flow_to_colouring(g.multipole(), broken).has_value());
    broken = c.colours;
    broken[0] = broken[1];
    CHECK_THROWS_AS(colouring_to_flow(g.multipole(), broken), ColouringError);
    CHECK(find_nowhere_zero_flow(oracle::corpus("petersen.g6").multipole()).status == Search::none);
  }

  TEST_CASE("boundary constraints") {
    const Multipole m = delete_vertex(oracle::corpus("petersen.g6").multipole(), 0);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
          const BoundaryVector bv{a, b, c};
          CHECK_FALSE(find_colouring(m, bv).found());
        }
      }
    }
    CHECK_THROWS_AS(find_colouring(m, BoundaryVector{1, 2}), ColouringError);
    CHECK_THROWS_AS(find_colouring(m, BoundaryVector{1, 2, 4}), ColouringError);
    const Graph k4 = oracle::corpus("k4.g6");
    EdgeColouring partial(6, 0);
    partial[static_cast<std::size_t>(k4.incident(0)[0].edge)] = 1;
    partial[static_cast<std::size_t>(k4.incident(0)[1].edge)] = 1;
    CHECK_THROWS_AS(find_colouring(k4.multipole(), std::nullopt, &partial), ColouringError);
  }

  TEST_CASE("budget exhaustion is reported as undecided") {
    const auto r = find_colouring(oracle::corpus("flower-j7.g6").multipole(), std::nullopt, nullptr, Budget{3});
    CHECK(r.status == Search::undecided);
  }

  TEST_CASE("spectra agree with exhaustive search") {
    const Graph p = petersen_graph();
    const std::vector<Multipole> poles{
        delete_vertex(p.multipole(), 0),
        petersen_dipole(),
        delete_vertex(oracle::corpus("cube.g6").multipole(), 3),
        cut_edges(oracle::corpus("k33.g6").multipole(), std::vector<int>{0, 4}),
    };
    for (const auto& m : poles) {
      const auto ser = boundary_spectrum(m, Exec::serial);
      const auto par = boundary_spectrum(m, Exec::parallel);
      CHECK(ser.vectors == par.vectors);
      CHECK(ser.exact);
      CHECK(as_set(ser) == oracle::spectrum(m));
      for (const auto& v : ser.vectors) CHECK(parity_check(v));
    }
  }

  TEST_CASE("dipole properness agrees with the spectrum definition") {
    const Multipole f = petersen_dipole();
    const auto pos = connector_positions(f);
    REQUIRE(pos.size() == 2);
    bool proper = true;
    for (const auto& v : oracle::spectrum(f)) {
      int s = 0;
      for (int i : pos[0]) s ^= v[static_cast<std::size_t>(i)];
      proper = proper && s != 0;
    }
    const auto chk = is_proper_dipole(f);
    CHECK(chk.proper == proper);
    CHECK(chk.proper);
    CHECK_FALSE(chk.offending.has_value());

    CHECK_THROWS_AS(is_proper_dipole(delete_vertex(petersen_graph().multipole(), 0)), ColouringError);
  }

  TEST_CASE("dipoles from two cut edges") {
    const Graph cube = oracle::corpus("cube.g6");
    int improper = 0;
    for (int e = 1; e < cube.num_edges(); ++e) {
      const Multipole f = cut_edges(cube.multipole(), std::vector<int>{0, e});
      bool proper = true;
      for (const auto& v : oracle::spectrum(f)) proper = proper && (v[0] ^ v[1]) != 0;
      const auto chk = is_proper_dipole(f);
      CHECK(chk.proper == proper);
      CHECK(chk.offending.has_value() == !proper);
      improper += !proper;
    }
    CHECK(improper > 0);
  }

  TEST_CASE("removability agrees with exhaustive search") {
    const Graph p = oracle::corpus("petersen.g6");
    for (const std::vector<int>& h : {std::vector<int>{0}, std::vector<int>{3}, std::vector<int>{0, 1}, std::vector<int>{0, 2}}) {
      CHECK(is_removable(p, h) == !oracle::colourable(remove_vertices(p.multipole(), h)));
    }
    const Graph k4 = oracle::corpus("k4.g6");
    CHECK_THROWS_AS(is_removable(k4, std::vector<int>{0}), ColouringError);
    CHECK_FALSE(is_removable(k4, std::vector<int>{0}, Strictness::lenient));
  }
}
