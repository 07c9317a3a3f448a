// Compares the OpenMP enumeration kernels against their serial reference
// twins on the desk-scale universes the suites actually run.

#include <benchmark/benchmark.h>

#include "utp/merge.hpp"
#include "utp/sampling.hpp"

namespace {

using namespace utp;

struct World {
  TraceTablePtr traces = TraceTable::seq({"a", "b"}, 2);
  AlphabetPtr reactive = reactive_alphabet(traces, {{"v", Domain::boolean()}});
  AlphabetPtr merge = merge_alphabet(reactive);
  Predicate merge_sample = sample_predicate(merge, 7);
  Predicate p = R(sample_predicate(reactive, 1));
  Predicate q = R(sample_predicate(reactive, 2));
  Predicate inter = make_interleave_merge(merge);
};

World& world() {
  static World w;
  return w;
}

void set_mode(bool parallel) {
  kern::config().parallel = parallel;
  kern::config().min_parallel_items = 1;
}

void bm_merge_r2m(benchmark::State& state, bool parallel) {
  World& w = world();
  set_mode(parallel);
  for (auto _ : state) {
    Predicate out = R2m(w.merge_sample);
    benchmark::DoNotOptimize(out.rows().word(0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(w.merge->size()));
}

void bm_rm(benchmark::State& state, bool parallel) {
  World& w = world();
  set_mode(parallel);
  for (auto _ : state) {
    Predicate out = Rm(w.merge_sample);
    benchmark::DoNotOptimize(out.rows().word(0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(w.merge->size()));
}

void bm_seq_comp(benchmark::State& state, bool parallel) {
  World& w = world();
  set_mode(parallel);
  for (auto _ : state) {
    Predicate out = seq_comp(w.p, w.q);
    benchmark::DoNotOptimize(out.rows().word(0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(w.reactive->size()));
}

void bm_par_by_merge(benchmark::State& state, bool parallel) {
  World& w = world();
  set_mode(parallel);
  for (auto _ : state) {
    Predicate out = par_by_merge(w.p, w.inter, w.q);
    benchmark::DoNotOptimize(out.rows().word(0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(w.reactive->size()));
}

}  // namespace

BENCHMARK_CAPTURE(bm_merge_r2m, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_merge_r2m, openmp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_rm, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_rm, openmp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_seq_comp, serial, false)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(bm_seq_comp, openmp, true)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(bm_par_by_merge, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_par_by_merge, openmp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
