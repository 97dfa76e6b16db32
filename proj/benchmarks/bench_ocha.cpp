#include "ocha/campaign.hpp"
#include "ocha/cohomology.hpp"
#include "ocha/fixtures.hpp"
#include "ocha/random.hpp"

#include <benchmark/benchmark.h>

using namespace ocha;

namespace {

OchaStructure fixture(const std::string& name) {
  OchaData d = build_fixture(name);
  return *make_ocha(d.l, d.q);
}

}  // namespace

// D{E_1..E_m} on random cochains over dim-3 spaces, arity <= 3.
static void BM_Brace(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  auto b = random_space(rng, "B", 3, 2);
  auto a = random_space(rng, "A", 3, 1);
  const SupportSpec spec{3, 3, 6};
  OCCochain d = random_cochain(b, a, a, spec, rng).cochain;
  std::vector<OCCochain> es;
  for (int i = 0; i < m; ++i) es.push_back(random_cochain(b, a, a, spec, rng).cochain);
  for (auto _ : state) benchmark::DoNotOptimize(brace(d, es));
}
BENCHMARK(BM_Brace)->Arg(1)->Arg(2)->Arg(3);

static void BM_Delta(benchmark::State& state) {
  OchaStructure s = fixture("dual-numbers");
  Rng rng(2);
  OCCochain d = random_cochain(s.closed_space(), s.open_space(), s.open_space(),
                               SupportSpec{0, static_cast<int>(state.range(0)), 10}, rng)
                    .cochain;
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_differential(s, d));
}
BENCHMARK(BM_Delta)->DenseRange(1, 4);

static void BM_Cohomology(benchmark::State& state) {
  OchaStructure s = fixture("dual-numbers");
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedComplex c = assemble_complex(s, w);
    Cohomology h(c);
    benchmark::DoNotOptimize(h.by_degree().size());
  }
}
BENCHMARK(BM_Cohomology)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Campaign(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg).passed());
}
BENCHMARK(BM_Campaign)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
