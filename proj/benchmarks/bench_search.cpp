#include <benchmark/benchmark.h>

#include "refinery/queries.hpp"
#include "refinery/search.hpp"

namespace {

using namespace refinery;

void register_query_benchmarks() {
  static const std::vector<BenchQuery> queries = standard_query_set();
  for (const auto& q : queries) {
    benchmark::RegisterBenchmark(("refined/" + q.name).c_str(),
                                 [&q](benchmark::State& state) {
                                   long nodes = 0;
                                   for (auto _ : state) {
                                     auto r = intersection_search(q.refiners, q.degree, true);
                                     nodes = r.tree_nodes;
                                     benchmark::DoNotOptimize(r.coset.degree);
                                   }
                                   state.counters["nodes"] = static_cast<double>(nodes);
                                 });
    benchmark::RegisterBenchmark(("unrefined/" + q.name).c_str(),
                                 [&q](benchmark::State& state) {
                                   long nodes = 0;
                                   for (auto _ : state) {
                                     auto r = intersection_search(q.refiners, q.degree, false);
                                     nodes = r.tree_nodes;
                                     benchmark::DoNotOptimize(r.coset.degree);
                                   }
                                   state.counters["nodes"] = static_cast<double>(nodes);
                                 });
  }
}

void bench_colour_refine(benchmark::State& state) {
  const Permutation p = parse_perm("(1 2)(3 6 5)", 6);
  std::vector<LabelledDigraph> stack{encode_perm_conj(p)};
  OrderedPartition unit = make_partition(6, {{1, 2, 3, 4, 5, 6}});
  for (auto _ : state) {
    SearchState st;
    st.left_stack = stack;
    st.right_stack = stack;
    st.left_cells = unit;
    st.right_cells = unit;
    auto out = colour_refine(std::move(st));
    benchmark::DoNotOptimize(out.dead);
  }
}
BENCHMARK(bench_colour_refine);

}  // namespace

int main(int argc, char** argv) {
  register_query_benchmarks();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
