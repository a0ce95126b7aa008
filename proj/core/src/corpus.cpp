#include "nerkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nerkit/error.hpp"
#include "nerkit/text.hpp"

namespace nerkit {

namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

bool is_field_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_field_space(line[i])) ++i;
    const auto begin = i;
    while (i < line.size() && !is_field_space(line[i])) ++i;
    if (i > begin) fields.push_back(line.substr(begin, i - begin));
  }
  return fields;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return buf.str();
}

void collect_labels(std::span<const Sentence> sentences, std::set<std::string>& out) {
  for (const auto& s : sentences)
    for (const auto& tag : s.tags) out.insert(tag.str());
}

std::vector<std::string> labels_of(const Dataset& d) {
  std::set<std::string> seen;
  for (const auto& [split, sentences] : d.splits) collect_labels(sentences, seen);
  return canonical_labels({seen.begin(), seen.end()});
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::train: return "train";
    case Split::valid: return "valid";
    case Split::test: return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::train;
  if (name == "valid") return Split::valid;
  if (name == "test") return Split::test;
  return std::nullopt;
}

std::span<const Sentence> Dataset::split(Split which) const {
  auto it = splits.find(which);
  if (it == splits.end()) return {};
  return it->second;
}

std::vector<std::string> canonical_labels(std::vector<std::string> labels) {
  std::erase(labels, "O");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  labels.insert(labels.begin(), "O");
  return labels;
}

LabelLookup::LabelLookup(std::vector<std::string> labels) : labels_(canonical_labels(std::move(labels))) {
  tags_.reserve(labels_.size());
  for (std::size_t id = 0; id < labels_.size(); ++id) {
    auto tag = Tag::parse(labels_[id]);
    if (!tag) throw ConfigError("invalid label '" + labels_[id] + "'");
    tags_.push_back(std::move(*tag));
    ids_.emplace(labels_[id], id);
  }
}

std::optional<std::size_t> LabelLookup::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<Sentence> parse_conll(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = {};
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields.front() == kDocStart) continue;
    if (fields.size() < 2) throw MalformedLine(line_no);
    auto tag = Tag::parse(fields.back());
    if (!tag) throw BadTag(line_no, std::string(fields.back()));
    current.tokens.emplace_back(fields.front());
    current.tags.push_back(std::move(*tag));
  }
  flush();
  return sentences;
}

std::string serialize_conll(std::span<const Sentence> sentences) {
  std::string out;
  bool first = true;
  for (const auto& s : sentences) {
    if (!first) out += '\n';
    first = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += s.tokens[i];
      out += ' ';
      out += s.tags[i].str();
      out += '\n';
    }
  }
  return out;
}

Dataset load_dataset(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  Dataset d;
  auto clean = dir.lexically_normal();
  d.name = (clean.has_filename() ? clean.filename() : clean.parent_path().filename()).string();

  const bool has_train = fs::is_regular_file(dir / "train.txt");
  const bool has_test = fs::is_regular_file(dir / "test.txt");
  if (!has_train && !has_test)
    throw MissingSplit("neither train.txt nor test.txt found in " + dir.string());

  for (auto split : {Split::train, Split::valid, Split::test}) {
    const auto file = dir / (std::string(to_string(split)) + ".txt");
    if (!fs::is_regular_file(file)) continue;
    try {
      d.splits[split] = parse_conll(read_file(file));
    } catch (const BadTag& e) {
      throw BadTag(e.line_no(), e.text(), file.string());
    } catch (const MalformedLine& e) {
      throw MalformedLine(e.line_no(), file.string());
    }
  }
  d.labels = labels_of(d);
  return d;
}

Dataset concat_datasets(std::span<const Dataset> datasets, std::string name) {
  if (datasets.empty()) throw EmptyInput("concat_datasets: no datasets given");
  Dataset out;
  out.name = std::move(name);
  std::vector<std::string> labels;
  for (const auto& d : datasets) {
    for (const auto& [split, sentences] : d.splits) {
      auto& dst = out.splits[split];
      dst.insert(dst.end(), sentences.begin(), sentences.end());
    }
    labels.insert(labels.end(), d.labels.begin(), d.labels.end());
  }
  out.labels = canonical_labels(std::move(labels));
  return out;
}

std::vector<Sentence> lowercase_sentences(std::span<const Sentence> sentences) {
  std::vector<Sentence> out(sentences.begin(), sentences.end());
  for (auto& s : out)
    for (auto& token : s.tokens) token = text::to_lower(token);
  return out;
}

Dataset lowercase_dataset(const Dataset& dataset) {
  Dataset out = dataset;
  for (auto& [split, sentences] : out.splits) sentences = lowercase_sentences(sentences);
  return out;
}

DatasetStats dataset_stats(const Dataset& dataset) {
  DatasetStats stats;
  for (const auto& [split, sentences] : dataset.splits) stats.sentences[split] = sentences.size();
  std::set<std::string> types;
  for (const auto& label : dataset.labels) {
    auto tag = Tag::parse(label);
    if (tag && !tag->is_outside()) types.insert(tag->type);
  }
  stats.entity_types = types.size();
  return stats;
}

}  // namespace nerkit
