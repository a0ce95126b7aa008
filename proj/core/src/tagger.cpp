#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "nerkit/chunking.hpp"
#include "nerkit/error.hpp"
#include "nerkit/tagger.hpp"
#include "nerkit/text.hpp"

namespace nerkit {

namespace {

// Dense weight table with lazily accumulated sums for averaging. A
// snapshot is taken after every training sentence; `step` counts them.
class AveragedWeights {
 public:
  AveragedWeights(std::size_t features, std::size_t labels)
      : labels_(labels), current_(features * labels), total_(features * labels), stamp_(features * labels) {}

  double weight(std::size_t f, std::size_t y) const { return current_[f * labels_ + y]; }

  // Applies `delta` while processing sentence number `step` (1-based).
  void update(std::size_t f, std::size_t y, double delta, std::uint64_t step) {
    const auto idx = f * labels_ + y;
    total_[idx] += current_[idx] * static_cast<double>(step - 1 - stamp_[idx]);
    stamp_[idx] = step - 1;
    current_[idx] += delta;
  }

  double average(std::size_t f, std::size_t y, std::uint64_t steps) const {
    const auto idx = f * labels_ + y;
    const double sum = total_[idx] + current_[idx] * static_cast<double>(steps - stamp_[idx]);
    return sum / static_cast<double>(steps);
  }

 private:
  std::size_t labels_;
  std::vector<double> current_;
  std::vector<double> total_;
  std::vector<std::uint64_t> stamp_;
};

struct Example {
  std::vector<std::vector<std::size_t>> features;  // per position
  std::vector<std::size_t> gold;
};

void shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  // Fisher-Yates with a plain modulo draw so the permutation depends only on
  // the mt19937_64 stream, not on the standard library's distributions.
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

std::vector<std::string> training_labels(const Dataset& merged, std::span<const Sentence> sentences) {
  std::vector<std::string> labels = merged.labels;
  std::set<std::string> extra;
  for (const auto& s : sentences)
    for (const auto& tag : normalize_iob2(s.tags)) extra.insert(tag.str());
  labels.insert(labels.end(), extra.begin(), extra.end());
  return labels;
}

}  // namespace

TaggerModel train(std::span<const Dataset> datasets, const TrainConfig& config, const EpochCallback& on_epoch) {
  if (config.epochs < 1) throw ConfigError("epochs must be >= 1, got " + std::to_string(config.epochs));
  if (config.feature_template_version != kFeatureTemplateVersion)
    throw ConfigError("unsupported feature template version " + std::to_string(config.feature_template_version));
  if (datasets.empty()) throw EmptyTrainingData("no datasets given");

  const auto merged = concat_datasets(datasets, "train");
  auto sentences = config.lowercase ? lowercase_sentences(merged.split(Split::train))
                                    : std::vector<Sentence>(merged.split(Split::train).begin(),
                                                            merged.split(Split::train).end());
  if (sentences.empty()) throw EmptyTrainingData("train split is empty");

  TaggerModel model;
  model.labels = LabelLookup(training_labels(merged, sentences));
  model.config = config;
  for (const auto& d : datasets) model.meta.trained_on.push_back(d.name);
  const auto k = model.labels.size();

  std::unordered_map<std::string, std::size_t> feature_ids;
  std::vector<std::string> feature_names;
  std::vector<Example> examples;
  examples.reserve(sentences.size());
  for (const auto& s : sentences) {
    Example ex;
    for (const auto& tag : normalize_iob2(s.tags)) ex.gold.push_back(*model.labels.find(tag));
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<std::size_t> ids;
      for (auto& f : featurize(s.tokens, i)) {
        auto [it, inserted] = feature_ids.try_emplace(f, feature_names.size());
        if (inserted) feature_names.push_back(f);
        ids.push_back(it->second);
      }
      ex.features.push_back(std::move(ids));
    }
    examples.push_back(std::move(ex));
  }

  AveragedWeights weights(feature_names.size(), k);
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t step = 0;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    shuffle(order, rng);
    std::size_t mistakes = 0;
    for (auto idx : order) {
      const auto& ex = examples[idx];
      ++step;
      EmissionScores scores(ex.gold.size(), k);
      for (std::size_t i = 0; i < ex.gold.size(); ++i)
        for (auto f : ex.features[i])
          for (std::size_t y = 0; y < k; ++y) scores.at(i, y) += weights.weight(f, y);
      const auto guess = constrained_viterbi(scores, model.labels.tags());
      for (std::size_t i = 0; i < guess.size(); ++i) {
        if (guess[i] == ex.gold[i]) continue;
        ++mistakes;
        for (auto f : ex.features[i]) {
          weights.update(f, ex.gold[i], 1.0, step);
          weights.update(f, guess[i], -1.0, step);
        }
      }
    }
    if (on_epoch) on_epoch(epoch, mistakes);
  }

  for (std::size_t f = 0; f < feature_names.size(); ++f) {
    std::vector<double> vec(k);
    bool nonzero = false;
    for (std::size_t y = 0; y < k; ++y) {
      vec[y] = weights.average(f, y, step);
      nonzero = nonzero || vec[y] != 0.0;
    }
    if (nonzero) model.weights.emplace(feature_names[f], std::move(vec));
  }
  return model;
}

Prediction predict(std::span<const std::string> tokens, const TaggerModel& model) {
  if (tokens.empty()) throw EmptySentence();
  if (model.labels.size() == 0) throw ModelLabelMismatch("model has no labels");

  std::vector<std::string> lowered;
  if (model.config.lowercase) {
    lowered.reserve(tokens.size());
    for (const auto& t : tokens) lowered.push_back(text::to_lower(t));
    tokens = lowered;
  }

  const auto scores = emission_scores(tokens, model);
  const auto path = constrained_viterbi(scores, model.labels.tags());

  Prediction out;
  out.tags.reserve(path.size());
  std::vector<double> prob(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.tags.push_back(model.labels.tag(path[i]));
    double top = scores.at(i, 0);
    for (std::size_t y = 1; y < scores.labels; ++y) top = std::max(top, scores.at(i, y));
    double z = 0.0;
    for (std::size_t y = 0; y < scores.labels; ++y) z += std::exp(scores.at(i, y) - top);
    prob[i] = std::exp(scores.at(i, path[i]) - top) / z;
  }
  for (auto& span : extract_chunks(out.tags)) {
    double sum = 0.0;
    for (auto i = span.start; i < span.end; ++i) sum += prob[i];
    const double mean = sum / static_cast<double>(span.end - span.start);
    out.spans.push_back({std::move(span), std::clamp(mean, 0.0, 1.0)});
  }
  return out;
}

EvalReport evaluate(const TaggerModel& model, std::span<const Sentence> sentences, EvalMode mode) {
  std::vector<std::vector<Tag>> gold;
  std::vector<std::vector<Tag>> pred;
  gold.reserve(sentences.size());
  pred.reserve(sentences.size());
  for (const auto& s : sentences) {
    gold.push_back(s.tags);
    pred.push_back(predict(s.tokens, model).tags);
  }
  return score(gold, pred, mode);
}

}  // namespace nerkit
