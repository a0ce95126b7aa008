#include <random>

#include <benchmark/benchmark.h>

#include "nerkit/corpus.hpp"
#include "nerkit/tagger.hpp"

namespace {

const nerkit::Dataset& synthetic() {
  static const auto d = nerkit::load_dataset(std::filesystem::path(NERKIT_FIXTURES_DIR) / "synthetic");
  return d;
}

const nerkit::TaggerModel& model() {
  static const auto m = nerkit::train(std::vector<nerkit::Dataset>{synthetic()}, nerkit::TrainConfig{});
  return m;
}

void BM_Featurize(benchmark::State& state) {
  const auto& s = synthetic().split(nerkit::Split::train)[0];
  for (auto _ : state)
    for (std::size_t i = 0; i < s.tokens.size(); ++i) benchmark::DoNotOptimize(nerkit::featurize(s.tokens, i));
}
BENCHMARK(BM_Featurize);

void BM_ConstrainedViterbi(benchmark::State& state) {
  std::vector<nerkit::Tag> labels;
  for (const char* l : {"O", "B-LOC", "B-ORG", "B-PER", "I-LOC", "I-ORG", "I-PER"}) labels.push_back(*nerkit::Tag::parse(l));
  nerkit::EmissionScores scores(static_cast<std::size_t>(state.range(0)), labels.size());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-5, 5);
  for (auto& v : scores.values) v = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(nerkit::constrained_viterbi(scores, labels));
}
BENCHMARK(BM_ConstrainedViterbi)->Arg(20)->Arg(200);

void BM_Predict(benchmark::State& state) {
  const auto& s = synthetic().split(nerkit::Split::test)[0];
  const auto& m = model();
  for (auto _ : state) benchmark::DoNotOptimize(nerkit::predict(s.tokens, m));
}
BENCHMARK(BM_Predict);

void BM_TrainSynthetic(benchmark::State& state) {
  const std::vector<nerkit::Dataset> data{synthetic()};
  for (auto _ : state) benchmark::DoNotOptimize(nerkit::train(data, nerkit::TrainConfig{}));
}
BENCHMARK(BM_TrainSynthetic)->Unit(benchmark::kMillisecond);

}  // namespace
