#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nerkit/chunking.hpp"
#include "nerkit/corpus.hpp"
#include "nerkit/metrics.hpp"

namespace nerkit {

inline constexpr int kFeatureTemplateVersion = 1;
inline constexpr int kModelFormatVersion = 1;

struct TrainConfig {
  int epochs = 10;
  std::uint64_t seed = 42;
  bool lowercase = false;
  int feature_template_version = kFeatureTemplateVersion;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct ModelMeta {
  std::vector<std::string> trained_on;
  std::string created_at;  // empty unless supplied by the caller

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

// Averaged-perceptron weights over sparse string features. Immutable once
// built; safe to share between any number of decoding threads.
struct TaggerModel {
  LabelLookup labels;
  // Feature key -> one weight per label id.
  std::map<std::string, std::vector<double>, std::less<>> weights;
  TrainConfig config;
  ModelMeta meta;

  friend bool operator==(const TaggerModel&, const TaggerModel&) = default;
};

// Feature templates for token `i`: bias, surface and lowercased word at
// offsets -1/0/+1 ("<s>" / "</s>" beyond the edges), word shape, and
// lowercased prefixes/suffixes of 1-3 code points. Throws IndexOutOfRange.
std::vector<std::string> featurize(std::span<const std::string> tokens, std::size_t i);

// Upper -> X, lower -> x, digit -> d, anything else kept. Runs of X or x
// collapse to one character; digit runs are kept ("B-52s" -> "X-ddx").
std::string word_shape(std::string_view word);

// Row-major [position][label] score table.
struct EmissionScores {
  std::size_t positions = 0;
  std::size_t labels = 0;
  std::vector<double> values;

  EmissionScores() = default;
  EmissionScores(std::size_t positions, std::size_t labels)
      : positions(positions), labels(labels), values(positions * labels, 0.0) {}

  double& at(std::size_t pos, std::size_t label) { return values[pos * labels + label]; }
  double at(std::size_t pos, std::size_t label) const { return values[pos * labels + label]; }
};

// Strict IOB2 transition constraints.
bool allowed_start(const Tag& tag);
bool allowed_transition(const Tag& prev, const Tag& next);

// Best constraint-satisfying label-id sequence. Among equal-scoring
// sequences the lexicographically smallest id sequence wins.
std::vector<std::size_t> constrained_viterbi(const EmissionScores& scores, std::span<const Tag> labels);

EmissionScores emission_scores(std::span<const std::string> tokens, const TaggerModel& model);

// Decodes `tokens` as given (no lowercasing). Throws EmptySentence.
std::vector<Tag> viterbi_decode(std::span<const std::string> tokens, const TaggerModel& model);

// Per-update observer for tests and progress reporting: (epoch, mistakes).
using EpochCallback = std::function<void(int epoch, std::size_t mistakes)>;

// Throws ConfigError for epochs < 1, EmptyTrainingData when the
// concatenated train split is empty.
TaggerModel train(std::span<const Dataset> datasets, const TrainConfig& config,
                  const EpochCallback& on_epoch = {});

struct ScoredSpan {
  EntitySpan span;
  double score = 0.0;  // in [0, 1]
};

struct Prediction {
  std::vector<Tag> tags;
  std::vector<ScoredSpan> spans;
};

// Lowercases first when the model was trained lowercased. Span score is
// the mean softmax probability of the decoded label over the span.
// Throws EmptySentence, ModelLabelMismatch.
Prediction predict(std::span<const std::string> tokens, const TaggerModel& model);

// Tags every sentence with `model` and scores against the gold tags.
EvalReport evaluate(const TaggerModel& model, std::span<const Sentence> sentences, EvalMode mode);

// Self-describing JSON document with sorted keys and a crc32 checksum.
std::string serialize_model(const TaggerModel& model);
// Throws VersionMismatch, CorruptModel.
TaggerModel parse_model(std::string_view document);

// Throws IoError plus everything parse_model throws.
void save_model(const TaggerModel& model, const std::filesystem::path& path);
TaggerModel load_model(const std::filesystem::path& path);

}  // namespace nerkit
