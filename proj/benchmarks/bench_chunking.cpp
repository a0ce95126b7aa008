#include <random>

#include <benchmark/benchmark.h>

#include "nerkit/chunking.hpp"
#include "nerkit/metrics.hpp"

namespace {

std::vector<nerkit::Tag> random_sequence(std::mt19937_64& rng, std::size_t n) {
  static const char* names[] = {"O", "O", "O", "B-PER", "I-PER", "B-LOC", "I-LOC", "B-ORG"};
  std::vector<nerkit::Tag> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(*nerkit::Tag::parse(names[rng() % 8]));
  return out;
}

void BM_ExtractChunks(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto seq = random_sequence(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nerkit::extract_chunks(seq));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExtractChunks)->Arg(16)->Arg(64)->Arg(512);

void BM_Score(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<std::vector<nerkit::Tag>> gold, pred;
  for (int i = 0; i < 1000; ++i) {
    const auto n = 5 + rng() % 30;
    gold.push_back(random_sequence(rng, n));
    pred.push_back(random_sequence(rng, n));
  }
  const auto mode = state.range(0) ? nerkit::EvalMode::type_ignored : nerkit::EvalMode::type_aware;
  for (auto _ : state) benchmark::DoNotOptimize(nerkit::score(gold, pred, mode));
}
BENCHMARK(BM_Score)->Arg(0)->Arg(1);

}  // namespace
