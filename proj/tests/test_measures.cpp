#include <doctest.h>

#include "oracles.hpp"
#include "snark/connectivity.hpp"
#include "snark/graph_algo.hpp"
#include "snark/measures.hpp"
#include "snark/report.hpp"

using namespace snark;

namespace {

const std::vector<std::string> kSmall{"k33.g6",     "prism.g6",     "cube.g6",   "mobius-8.g6",      "theta.s6",
                                      "petersen.g6", "prism-5.g6",  "franklin.g6", "frucht.g6",      "tietze.g6",
                                      "heawood.g6", "petersen-2tri.g6", "petersen-k33.g6", "prism-7.g6", "k4.g6"};

const std::vector<std::string> kSnarks{"petersen.g6", "blanusa-1.g6", "blanusa-2.g6", "flower-j5.g6",
                                       "tietze.g6",   "dot-pb1.g6",   "petersen-2tri.g6"};

MeasureReport fake(int d, int w, int r, int dn, int girth) {
  MeasureReport m;
  m.cubic = m.bridgeless = true;
  m.colourable = false;
  m.defect = Bounded::exactly(d);
  m.oddness = Bounded::exactly(w);
  m.resistance = Bounded::exactly(r);
  m.density = Bounded::exactly(dn);
  m.girth = Bounded::exactly(girth);
  return m;
}

AuditStatus status_of(const std::vector<AuditLine>& lines, const std::string& name) {
  for (const auto& l : lines)
    if (l.name == name) return l.status;
  FAIL("no audit line " << name);
  return AuditStatus::skipped;
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("bounded values print compactly") {
    CHECK(Bounded::exactly(3).str() == "3");
    CHECK(Bounded::at_least(3).str() == ">=3");
    CHECK((Bounded{3, 5, true}).str() == "3..5");
    CHECK(Bounded{}.str() == "?");
  }

  TEST_CASE("oddness and density agree with the oracles") {
    for (const auto& name : kSmall) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto os = oddness(g, Exec::serial);
      const auto op = oddness(g, Exec::parallel);
      CHECK(os.oddness == oracle::oddness(g));
      CHECK(op.oddness == os.oddness);
      CHECK(op.witness == os.witness);
      CHECK(static_cast<int>(os.odd_circuits.size()) == os.oddness);
      const auto ds = density(g, Exec::serial);
      const auto dp = density(g, Exec::parallel);
      CHECK(ds.density == oracle::density(g));
      CHECK(dp.density == ds.density);
      CHECK(dp.witness == ds.witness);
    }
  }

  TEST_CASE("resistance agrees with the oracle") {
    for (const auto& name : {"k33.g6", "cube.g6", "theta.s6", "petersen.g6", "tietze.g6", "petersen-2tri.g6"}) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto rs = resistance(g, Exec::serial);
      const auto rp = resistance(g, Exec::parallel);
      REQUIRE(rs.status == Search::found);
      CHECK(rs.resistance == oracle::resistance(g));
      CHECK(rp.resistance == rs.resistance);
      CHECK(rp.witness == rs.witness);
      CHECK(oracle::colourable(g.multipole(), oracle::mask_of(g.num_edges(), rs.witness)));
    }
    const auto capped = resistance(oracle::corpus("petersen.g6"), Exec::serial, 1);
    CHECK(capped.status != Search::found);
  }

  TEST_CASE("oddness rejects bridged input") {
    const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                                             {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9}, {4, 9}};
    CHECK_THROWS_AS(oddness(make_graph(10, e)), MeasureError);
  }

  TEST_CASE("cyclic connectivity agrees with the oracle") {
    for (const auto& name : kSmall) {
      const Graph g = oracle::corpus(name);
      CAPTURE(name);
      if (is_exceptional_cubic(g)) {
        CHECK_THROWS_AS(cyclic_connectivity_at_least(g, 5), ConnectivityError);
        continue;
      }
      const int below = oracle::cyclic_connectivity_below(g, 5);
      for (Exec ex : {Exec::serial, Exec::parallel}) {
        const auto r = cyclic_connectivity_at_least(g, 5, ex);
        CHECK(r.holds == (below < 0));
        if (!r.holds) {
          REQUIRE(r.witness.has_value());
          CHECK(static_cast<int>(r.witness->edges.size()) == below);
          CHECK(oracle::cycle_separating(g, r.witness->edges));
          CHECK(is_cycle_separating(g, r.witness->edges));
        }
        const auto v = cyclic_edge_connectivity(g, 5, ex);
        if (below >= 0) CHECK(v.exact == below);
        else CHECK(v.lower == 5);
      }
    }
    CHECK(is_exceptional_cubic(oracle::corpus("k4.g6")));
    CHECK(is_exceptional_cubic(oracle::corpus("theta.s6")));
  }

  TEST_CASE("circuit audits on optimal arrays") {
    for (const auto& name : kSnarks) {
      CAPTURE(name);
      const Graph g = oracle::corpus(name);
      const auto d = defect(g);
      const auto a = d.array(g);
      const auto au = audit_array_circuits(g, a);
      CHECK(au.ok(true));
      for (int i = 0; i < 3; ++i) {
        const auto& c = au.classes[static_cast<std::size_t>(i)];
        CHECK(c.c1_bound);
        CHECK(c.c3_bound);
      }
    }
  }

  TEST_CASE("Petersen report") {
    const Graph g = oracle::corpus("petersen.g6");
    const MeasureReport r = measure(g);
    CHECK(r.defect.exact());
    CHECK(r.defect.lo == 3);
    CHECK(r.oddness.lo == 2);
    CHECK(r.resistance.lo == 2);
    CHECK(r.density.lo == 1);
    CHECK(r.girth.lo == 5);
    CHECK(r.cyclic_connectivity.lo == 5);
    CHECK(r.perfect_matchings == std::size_t{6});
    CHECK_FALSE(r.undecided());
    CHECK(audit_passed(audit_inequalities(r)));
  }

  TEST_CASE("serial and parallel reports coincide") {
    for (const auto& name : kSnarks) {
      const Graph g = oracle::corpus(name);
      MeasureOptions s, p;
      s.exec = Exec::serial;
      p.exec = Exec::parallel;
      const auto rs = measure(g, s), rp = measure(g, p);
      CHECK(report_text(name, g, rs, audit_inequalities(rs)) == report_text(name, g, rp, audit_inequalities(rp)));
    }
  }

  TEST_CASE("matching limit degrades to bounds") {
    MeasureOptions o;
    o.matching_limit = 3;
    const MeasureReport r = measure(oracle::corpus("petersen.g6"), o);
    CHECK_FALSE(r.defect.exact());
    CHECK(r.defect.lo == 3);
    CHECK(r.undecided());
  }

  TEST_CASE("inequality audit") {
    auto ok = audit_inequalities(fake(3, 2, 2, 1, 5));
    CHECK(audit_passed(ok));
    for (const auto& l : ok) CHECK(l.status == AuditStatus::pass);

    auto bad = audit_inequalities(fake(3, 4, 2, 1, 5));
    CHECK_FALSE(audit_passed(bad));
    CHECK(status_of(bad, "oddness <= 2*density") == AuditStatus::fail);
    CHECK(status_of(bad, "defect >= 3*oddness/2") == AuditStatus::fail);
    CHECK(status_of(bad, "resistance = 2 iff oddness = 2") == AuditStatus::fail);

    CHECK(status_of(audit_inequalities(fake(3, 2, 2, 1, 8)), "defect >= ceil(girth/2)") == AuditStatus::fail);
    CHECK(status_of(audit_inequalities(fake(3, 2, 3, 1, 5)), "resistance <= oddness") == AuditStatus::fail);

    MeasureReport loose = fake(3, 2, 2, 1, 5);
    loose.defect = Bounded::at_least(3);
    loose.oddness = Bounded::at_least(2);
    auto l = audit_inequalities(loose);
    CHECK(status_of(l, "defect >= 3*oddness/2") == AuditStatus::undetermined);
    CHECK(status_of(l, "2*density <= defect-1") == AuditStatus::pass);

    MeasureReport col = fake(0, 0, 0, 0, 4);
    col.colourable = true;
    auto c = audit_inequalities(col);
    CHECK(status_of(c, "2*density <= defect-1") == AuditStatus::skipped);
    CHECK(status_of(c, "defect >= ceil(girth/2)") == AuditStatus::skipped);
    CHECK(audit_passed(c));

    MeasureReport missing = fake(3, 2, 2, 1, 5);
    missing.resistance = Bounded{};
    CHECK(status_of(audit_inequalities(missing), "resistance <= oddness") == AuditStatus::skipped);
  }
}
