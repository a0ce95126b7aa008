#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nerkit/tag.hpp"

namespace nerkit {

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<Tag> tags;

  std::size_t size() const noexcept { return tokens.size(); }
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class Split { train, valid, test };

std::string_view to_string(Split split);
std::optional<Split> parse_split(std::string_view name);

struct Dataset {
  std::string name;
  std::map<Split, std::vector<Sentence>> splits;
  // "O" first, then the remaining tag strings in lexicographic order.
  std::vector<std::string> labels;

  bool has(Split split) const { return splits.contains(split); }
  // Empty span when the split is absent.
  std::span<const Sentence> split(Split split) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Canonical label order: "O" first, remaining labels sorted, duplicates removed.
// "O" is inserted when missing.
std::vector<std::string> canonical_labels(std::vector<std::string> labels);

// Bijection label string <-> contiguous id. Id assignment depends only on
// the label set, never on input order.
class LabelLookup {
 public:
  LabelLookup() : LabelLookup(std::vector<std::string>{}) {}
  explicit LabelLookup(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Tag>& tags() const noexcept { return tags_; }

  std::optional<std::size_t> find(std::string_view label) const;
  std::optional<std::size_t> find(const Tag& tag) const { return find(tag.str()); }
  const std::string& label(std::size_t id) const { return labels_.at(id); }
  const Tag& tag(std::size_t id) const { return tags_.at(id); }

  friend bool operator==(const LabelLookup& a, const LabelLookup& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Tag> tags_;
  std::unordered_map<std::string, std::size_t> ids_;
};

// Unified CoNLL/IOB text: one "token ... tag" line per word, blank lines
// between sentences. Throws MalformedLine / BadTag.
std::vector<Sentence> parse_conll(std::string_view text);
std::string serialize_conll(std::span<const Sentence> sentences);

// Reads <dir>/{train,valid,test}.txt. Throws MissingSplit when neither
// train.txt nor test.txt exists, IoError on read failure.
Dataset load_dataset(const std::filesystem::path& dir);

// Splits concatenated in input order, label union. Throws EmptyInput.
Dataset concat_datasets(std::span<const Dataset> datasets, std::string name);

Dataset lowercase_dataset(const Dataset& dataset);
std::vector<Sentence> lowercase_sentences(std::span<const Sentence> sentences);

struct DatasetStats {
  std::map<Split, std::size_t> sentences;
  std::size_t entity_types = 0;
};

DatasetStats dataset_stats(const Dataset& dataset);

}  // namespace nerkit
