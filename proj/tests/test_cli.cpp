#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "snark/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SNARKDEFECT_EXE) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "snarkdefect-cli-test";
  fs::create_directories(d);
  return d / name;
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("measure Petersen") {
    const Run r = run("measure " + oracle::corpus_path("petersen.g6") + " --all");
    CHECK(r.code == 0);
    for (const char* line : {"defect: 3\n", "oddness: 2\n", "resistance: 2\n", "density: 1\n", "girth: 5\n",
                             "cyclic_connectivity: 5\n", "perfect_matchings: 6\n", "audit.result: pass\n"}) {
      CHECK(r.out.find(line) != std::string::npos);
    }
  }

  TEST_CASE("measure K4 defect only") {
    const Run r = run("measure " + oracle::corpus_path("k4.g6") + " --defect");
    CHECK(r.code == 0);
    CHECK(r.out.find("defect: 0\n") != std::string::npos);
    CHECK(r.out.find("\noddness:") == std::string::npos);
  }

  TEST_CASE("defect oracle on the Blanusa snarks") {
    for (const char* f : {"blanusa-1.g6", "blanusa-2.g6"}) {
      const Run r = run("measure " + oracle::corpus_path(f) + " --defect --oracle");
      CHECK(r.code == 0);
      CHECK(r.out.find("defect oracle: exhaustive 3 agrees") != std::string::npos);
    }
  }

  TEST_CASE("undecided within budget") {
    const Run r = run("measure " + oracle::corpus_path("flower-j7.g6") + " --defect --budget 2 --matching-limit 5");
    CHECK(r.code == 2);
  }

  TEST_CASE("input errors") {
    write(scratch("garbage.g6"), "this is not a graph\n");
    CHECK(run("measure " + scratch("garbage.g6").string()).code == 1);
    CHECK(run("measure /nonexistent/file.g6").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("build-snark").code == 1);
    const Run g5 = run("build-snark --girth 5");
    CHECK(g5.code == 1);
    CHECK(g5.out.find("rotation snarks") != std::string::npos);
  }

  TEST_CASE("array files") {
    const fs::path arr = scratch("p.arr");
    CHECK(run("defect " + oracle::corpus_path("petersen.g6") + " --array-out " + arr.string()).code == 0);
    const Run ok = run("verify " + oracle::corpus_path("petersen.g6") + " --array " + arr.string());
    CHECK(ok.code == 0);
    std::string text = snark::read_text_file(arr);
    const auto pos = text.find("E0 3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "E0 4");
    write(scratch("bad.arr"), text);
    const Run bad = run("verify " + oracle::corpus_path("petersen.g6") + " --array " + scratch("bad.arr").string());
    CHECK(bad.code == 1);
    CHECK(bad.out.find("bookkeeping") != std::string::npos);
    CHECK(run("verify " + oracle::corpus_path("blanusa-1.g6") + " --array " + arr.string()).code == 1);
  }

  TEST_CASE("build, verify and corrupt a bundle") {
    const std::string prefix = scratch("s6").string();
    const Run b = run("build-snark --girth 6 --cage heawood --out " + prefix);
    REQUIRE(b.code == 0);
    CHECK(b.out.find("vertices: 306\n") != std::string::npos);
    const std::string g = prefix + ".s6";
    CHECK(run("verify " + g + " --bundle " + prefix + ".bundle.json --colouring " + prefix + ".colouring").code == 0);

    std::string col = snark::read_text_file(prefix + ".colouring");
    const auto nl = col.find('\n', col.find('\n') + 1);
    REQUIRE(nl != std::string::npos);
    char& last = col[nl - 1];
    last = last == '1' ? '2' : '1';
    write(prefix + ".bad.colouring", col);
    const Run c = run("verify " + g + " --bundle " + prefix + ".bundle.json --colouring " + prefix + ".bad.colouring");
    CHECK(c.code == 3);
    CHECK(c.out.find("differs from the bundle at edge 0") != std::string::npos);

    CHECK(run("verify " + oracle::corpus_path("petersen.g6") + " --bundle " + prefix + ".bundle.json").code == 1);
  }

  TEST_CASE("odd girth summary has no oddness claim") {
    const Run r = run("build-snark --girth 7 --cage mcgee --no-verify --out " + scratch("s7").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\noddness:") == std::string::npos);
    CHECK(r.out.find("defect_at_least: 4\n") != std::string::npos);
  }

  TEST_CASE("corpus audit") {
    const Run r = run("audit-corpus " + std::string(SNARK_DATA_DIR) + "/corpus");
    CHECK(r.code == 0);
    CHECK(r.out.find("0 fail") != std::string::npos);
    CHECK(r.out.find("cube.g6\t8\tyes\t0\t") != std::string::npos);

    const fs::path dir = scratch("mixed");
    fs::create_directories(dir);
    fs::copy_file(oracle::corpus_path("petersen.g6"), dir / "a.g6", fs::copy_options::overwrite_existing);
    write(dir / "b.g6", "garbage\n");
    fs::copy_file(oracle::corpus_path("flower-j7.g6"), dir / "c.g6", fs::copy_options::overwrite_existing);
    const Run m = run("audit-corpus " + dir.string() + " --budget 2");
    CHECK(m.code == 2);
    CHECK(m.out.find("b.g6\terror") != std::string::npos);
    CHECK(m.out.find("undecided") != std::string::npos);
    fs::remove(dir / "c.g6");
    CHECK(run("audit-corpus " + dir.string()).code == 1);
  }
}
