#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "apt/basis.hpp"
#include "apt/classgroup.hpp"
#include "apt/decompose.hpp"

namespace {

void BM_ClassGroup(benchmark::State& state) {
  const apt::Modulus mod(state.range(0));
  for (auto _ : state) {
    apt::ClassGroup cg(mod);
    benchmark::DoNotOptimize(cg.order());
  }
}
BENCHMARK(BM_ClassGroup)->Arg(23)->Arg(974)->Arg(4999)->Arg(100003);

void BM_Enumerate(benchmark::State& state) {
  const apt::BasisBuilder b(apt::Modulus(974), {{5, 41}, apt::FactorStyle::InvariantFactors});
  for (auto _ : state) benchmark::DoNotOptimize(b.enumerate(state.range(0)).size());
}
BENCHMARK(BM_Enumerate)->Arg(200)->Arg(1000)->Arg(5000);

void BM_Decompose(benchmark::State& state) {
  const apt::BasisBuilder b(apt::Modulus(974), {{5, 41}, apt::FactorStyle::InvariantFactors});
  const apt::Decomposer d(b);
  std::vector<std::int64_t> ps;
  for (const auto& e : b.enumerate(300)) ps.push_back(e.p);
  std::mt19937_64 rng(5);
  std::vector<apt::Triple> inputs;
  for (int i = 0; i < 64; ++i) {
    apt::Decomposition s;
    std::vector<std::int64_t> pick(ps);
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(static_cast<std::size_t>(state.range(0)));
    std::sort(pick.begin(), pick.end());
    for (std::int64_t p : pick) {
      const long k = static_cast<long>(rng() % 6);  // coefficient in [-3, 3] \ {0}
      s.terms.emplace_back(p, k < 3 ? k - 3 : k - 2);
    }
    inputs.push_back(d.recombine(s));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d.decompose(inputs[i++ % inputs.size()]).verified);
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
