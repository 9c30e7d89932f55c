#include <benchmark/benchmark.h>

#include "covlab/gen.hpp"
#include "covlab/matching.hpp"
#include "covlab/metric.hpp"
#include "covlab/symbolic.hpp"
#include "covlab/uniformity.hpp"

using namespace covlab;

namespace {

struct GuardRaiser {
  GuardRaiser() { Limits::set_ground_limit(kMaxGround); }
} raise_guard;

void BM_MaxMatching(benchmark::State& state) {
  gen::Rng rng(1);
  std::vector<BipartiteGraph> graphs;
  for (int i = 0; i < 64; ++i)
    graphs.push_back(gen::random_bigraph(rng, static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching_number(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_MaxMatching)->Arg(10)->Arg(40)->Arg(120);

void BM_Complexity(benchmark::State& state) {
  gen::Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<UniformStructure, Covering>> cases;
  for (int i = 0; i < 32; ++i) {
    UniformStructure s = gen::random_chain(rng, n);
    Covering u = gen::random_admissible(rng, s);
    cases.emplace_back(std::move(s), std::move(u));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, u] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(complexity(u, s));
  }
}
BENCHMARK(BM_Complexity)->Arg(6)->Arg(8)->Arg(12);

void BM_GammaCircle(benchmark::State& state) {
  MetricSpace circle = MetricSpace::circle_net(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(circle, Rat(1, 16)));
  }
}
BENCHMARK(BM_GammaCircle)->Arg(64)->Arg(256);

void BM_JoinCanonicalize(benchmark::State& state) {
  gen::Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  GroundSet g(n);
  std::vector<Covering> covers;
  for (int i = 0; i < 64; ++i) covers.push_back(gen::random_covering(rng, g));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(join(covers[i % covers.size()], covers[(i + 1) % covers.size()]));
    ++i;
  }
}
BENCHMARK(BM_JoinCanonicalize)->Arg(8)->Arg(32)->Arg(64);

void BM_ExactOmega(benchmark::State& state) {
  gen::Rng rng(4);
  UniformStructure s = gen::random_chain(rng, static_cast<int>(state.range(0)));
  std::vector<Perm> gens = gen::random_automorphisms(rng, s, 2);
  DynamicalInstance d(std::move(s), std::move(gens));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_omega(d).omega_lower);
  }
}
BENCHMARK(BM_ExactOmega)->Arg(3)->Arg(4);

void BM_WordCount(benchmark::State& state) {
  SubshiftSpec golden = SubshiftSpec::sft({{1, 1}, {1, 0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_words(golden, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_WordCount)->Arg(31)->Arg(101);

}  // namespace

BENCHMARK_MAIN();
