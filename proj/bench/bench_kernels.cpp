#include <benchmark/benchmark.h>

#include "snark/cages.hpp"
#include "snark/colouring.hpp"
#include "snark/connectivity.hpp"
#include "snark/graph_io.hpp"
#include "snark/matchings.hpp"
#include "snark/measures.hpp"
#include "snark/superposition.hpp"

using namespace snark;

namespace {

Graph corpus(const char* name) { return read_graph_file(std::string(SNARK_DATA_DIR) + "/corpus/" + name); }

Exec mode(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "parallel"); }

void BM_Spectrum(benchmark::State& s) {
  const FivePole m = make_Mg(load_cage("mcgee"));
  for (auto _ : s) benchmark::DoNotOptimize(boundary_spectrum(m.pole, mode(s)).vectors.size());
  label(s);
}

void BM_Defect(benchmark::State& s) {
  const Graph g = corpus("flower-j7.g6");
  const auto pms = enumerate_perfect_matchings(g);
  for (auto _ : s) benchmark::DoNotOptimize(defect(g, pms, mode(s)).defect);
  label(s);
}

void BM_Oddness(benchmark::State& s) {
  const Graph g = corpus("flower-j7.g6");
  const auto pms = enumerate_perfect_matchings(g);
  for (auto _ : s) benchmark::DoNotOptimize(oddness(g, pms, mode(s)).oddness);
  label(s);
}

void BM_Connectivity(benchmark::State& s) {
  const Graph g = load_cage("tutte-coxeter").graph;
  for (auto _ : s) benchmark::DoNotOptimize(cyclic_connectivity_at_least(g, 5, mode(s)).holds);
  label(s);
}

}  // namespace

BENCHMARK(BM_Spectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Defect)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Oddness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Connectivity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
