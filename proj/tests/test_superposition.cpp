#include <doctest.h>

#include "oracles.hpp"
#include "snark/graph_algo.hpp"
#include "snark/graph_io.hpp"
#include "snark/superposition.hpp"

using namespace snark;

namespace {

const Construction& built6() {
  static const Construction c = [] {
    ConstructionPlan p;
    p.girth = 6;
    p.cage = "heawood";
    return build_snark(p);
  }();
  return c;
}

int dist(const Graph& g, int a, int b) { return bfs_distances(g.multipole(), a)[static_cast<std::size_t>(b)]; }

}  // namespace

TEST_SUITE("superposition") {
  TEST_CASE("Petersen labelling") {
    const Graph p = petersen_graph();
    CHECK(p.num_vertices() == 10);
    CHECK(girth(p) == 5);
    const auto& L = kLabels;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK(dist(p, L.uvw[static_cast<std::size_t>(i)], L.uvw[static_cast<std::size_t>(j)]) == 2);
    for (int i = 0; i < 6; ++i) CHECK(dist(p, L.cycle[static_cast<std::size_t>(i)], L.cycle[static_cast<std::size_t>((i + 1) % 6)]) == 1);
    CHECK(dist(p, L.u, L.v) == 1);
    CHECK(dist(p, L.x[0], L.x[1]) == 1);
    CHECK(dist(p, L.x[2], L.x[3]) == 1);
  }

  TEST_CASE("K") {
    const KStructure k = build_K();
    CHECK(k.k.num_vertices() == 26);
    for (int z : k.z) CHECK(k.k.degree(z) == 5);
    CHECK(k.k.degree(k.u1) == 3);
    CHECK(k.k.degree(k.u3) == 3);
    CHECK(is_decycling(k.k, k.decycling));
    CHECK(find_nowhere_zero_flow(k.k).status == Search::none);
  }

  TEST_CASE("cage poles") {
    for (const auto& name : cage_names()) {
      CAPTURE(name);
      const CageEntry c = load_cage(name);
      const FivePole m = make_Mg(c);
      CHECK(m.pole.num_vertices() == c.graph.num_vertices() - 3);
      CHECK(m.pole.num_free_ends() == 5);
      CHECK(m.pole.connectors().size() == 1);
      CHECK(m.girth >= c.girth);
      int middle = 0;
      for (bool b : m.from_middle) middle += b;
      CHECK(middle == 1);
    }
    CHECK_THROWS_AS(load_cage("nope"), CageError);
    CHECK_THROWS_AS(cage_for_girth(9), CageError);
    CHECK(load_cage_file(oracle::corpus_path("heawood.g6"), 6).bipartite);
    CHECK_THROWS_AS(load_cage_file(oracle::corpus_path("heawood.g6"), 7), CageError);
  }

  TEST_CASE("Z") {
    const Multipole z = build_Z();
    CHECK(z.num_vertices() == 1);
    REQUIRE(z.connectors().size() == 3);
    CHECK(z.connectors()[0].size() == 3);
    CHECK(z.connectors()[1].size() == 3);
    CHECK(z.connectors()[2].size() == 1);
    int isolated = 0;
    for (const auto& e : z.edges()) isolated += e.is_isolated();
    CHECK(isolated == 2);
  }

  TEST_CASE("girth 5 and below are refused") {
    ConstructionPlan p;
    p.girth = 5;
    CHECK_THROWS_WITH_AS(build_snark(p), doctest::Contains("rotation snarks"), ConstructionError);
    p.girth = 4;
    CHECK_THROWS_AS(build_snark(p), ConstructionError);
    p.girth = 6;
    p.cage = "mcgee";
    CHECK_THROWS_AS(build_snark(p), CageError);
  }

  TEST_CASE("plan round trip") {
    const std::string j = plan_to_json(built6().plan);
    CHECK(plan_to_json(parse_plan(j)) == j);
    std::string bad = j;
    const auto pos = bad.find("\"u\": 7");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 6, "\"u\": 6");
    CHECK_THROWS_AS(parse_plan(bad), ConstructionError);
    CHECK_THROWS_AS(parse_plan("{"), ConstructionError);
  }

  TEST_CASE("plan replay reproduces the build") {
    const Construction again = build_snark(parse_plan(plan_to_json(built6().plan)));
    CHECK(again.graph == built6().graph);
    ConstructionPlan tampered = built6().plan;
    tampered.s_pattern = {tampered.s_pattern[0] == 0 ? 1 : 0, tampered.s_pattern[1]};
    CHECK_THROWS_AS(build_snark(tampered), ConstructionError);
  }

  TEST_CASE("girth 6 construction and its certificates") {
    const Construction& c = built6();
    CHECK(c.graph.num_vertices() == 306);
    CHECK(c.graph.is_cubic());
    CHECK(girth(c.graph) == 6);
    REQUIRE(c.bundle.near_colouring.has_value());
    const auto& nc = *c.bundle.near_colouring;
    CHECK(residual_support(c.graph.multipole(), nc.colours) == std::vector<int>{std::min(c.u, c.v), std::max(c.u, c.v)});
    CHECK(c.bundle.oddness == 2);
    CHECK(c.bundle.resistance == 2);
    CHECK(c.bundle.defect_at_least == 3);
    CHECK(certify_snark(c.graph, c.bundle.snark));
    for (const auto& item : verify_bundle(c.graph, c.bundle)) {
      CAPTURE(item.name);
      CHECK(item.ok);
    }
  }

  TEST_CASE("certificates reject tampering") {
    const Construction& c = built6();
    const std::string json = bundle_to_json(c.bundle);
    CHECK(bundle_to_json(parse_bundle(json)) == json);
    CHECK_THROWS_AS(parse_bundle("{}"), CertificateError);

    SnarkCertificate s = c.bundle.snark;
    std::size_t x = 0;
    while (s.classes[x] < s.base.num_vertices()) ++x;
    s.classes[x] = s.classes[x] == s.base.num_vertices() ? s.base.num_vertices() + 1 : s.base.num_vertices();
    CHECK_FALSE(check_snark_certificate(c.graph, s).ok());

    SnarkCertificate w = c.bundle.snark;
    w.superedges[0].spectrum.pop_back();
    CHECK_FALSE(check_snark_certificate(c.graph, w).ok());

    SnarkCertificate colourable_base = c.bundle.snark;
    colourable_base.base = oracle::corpus("prism-5.g6");
    CHECK_FALSE(check_snark_certificate(c.graph, colourable_base).ok());

    Bundle b = c.bundle;
    b.near_colouring->colours[10] = b.near_colouring->colours[10] % 3 + 1;
    bool near_ok = true;
    for (const auto& item : verify_bundle(c.graph, b))
      if (item.name == "near-colouring") near_ok = item.ok;
    CHECK_FALSE(near_ok);

    Bundle g = c.bundle;
    g.girth = 7;
    bool girth_ok = true;
    for (const auto& item : verify_bundle(c.graph, g))
      if (item.name == "girth") girth_ok = item.ok;
    CHECK_FALSE(girth_ok);

    Bundle k = c.bundle;
    k.checksum = "0000000000000000";
    CHECK_THROWS_AS(verify_bundle(c.graph, k), CertificateError);
  }

  TEST_CASE("colouring files") {
    const Construction& c = built6();
    const auto& col = c.bundle.near_colouring->colours;
    CHECK(parse_colouring(colouring_to_text(c.graph, col), c.graph) == col);
    CHECK_THROWS_AS(parse_colouring("COLOURING 3\n0 1 1\n", c.graph), CertificateError);
  }

  TEST_CASE("odd girth build") {
    ConstructionPlan p;
    p.girth = 7;
    p.cage = "mcgee";
    const Construction c = build_snark(p);
    CHECK(c.graph.num_vertices() == 506);
    CHECK(girth(c.graph) == 7);
    CHECK_FALSE(c.bundle.near_colouring.has_value());
    CHECK_FALSE(c.bundle.oddness.has_value());
    CHECK(c.bundle.defect_at_least == 4);
    for (const auto& item : verify_bundle(c.graph, c.bundle)) {
      CAPTURE(item.name);
      CHECK(item.ok);
    }
  }
}
