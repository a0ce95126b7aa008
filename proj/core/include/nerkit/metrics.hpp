#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nerkit/tag.hpp"

namespace nerkit {

enum class EvalMode { type_aware, type_ignored };

std::string_view to_string(EvalMode mode);
std::optional<EvalMode> parse_eval_mode(std::string_view name);

struct EvalCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  EvalCounts& operator+=(const EvalCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend EvalCounts operator+(EvalCounts a, const EvalCounts& b) { return a += b; }
  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const Prf&, const Prf&) = default;
};

// 0/0 is taken as 0 for precision, recall and F1.
Prf prf(const EvalCounts& counts);

struct TypeScore {
  Prf scores;
  std::size_t support = 0;  // gold chunks of this type
  EvalCounts counts;

  friend bool operator==(const TypeScore&, const TypeScore&) = default;
};

struct EvalReport {
  EvalMode mode = EvalMode::type_aware;
  Prf micro;
  std::map<std::string, TypeScore> per_type;
  EvalCounts counts;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Span micro P/R/F1. A predicted chunk counts as a true positive when the
// same sentence holds a gold chunk with identical (type, start, end).
// Throws LengthMismatch on any shape disagreement.
EvalReport score(std::span<const std::vector<Tag>> gold, std::span<const std::vector<Tag>> pred,
                 EvalMode mode);

// Sentence-level counts, the unit score() sums over.
EvalCounts count_matches(std::span<const Tag> gold, std::span<const Tag> pred, EvalMode mode);

// Arithmetic mean. Throws EmptyInput.
double row_average(std::span<const double> values);

// Fixed one-decimal rendering used by every report table ("40.3").
std::string format_fixed1(double value);

nlohmann::json to_json(const EvalReport& report);
// Aligned-column TSV: micro row first, then one row per entity type.
std::string render_tsv(const EvalReport& report);

}  // namespace nerkit
