#include "nerkit/metrics.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include <fmt/format.h>

#include "nerkit/chunking.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::vector<EntitySpan> chunks_for(std::span<const Tag> tags, EvalMode mode) {
  if (mode == EvalMode::type_ignored) return extract_chunks(erase_types(tags));
  return extract_chunks(tags);
}

void check_shapes(std::span<const std::vector<Tag>> gold, std::span<const std::vector<Tag>> pred) {
  if (gold.size() != pred.size()) throw LengthMismatch(std::min(gold.size(), pred.size()));
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (gold[i].size() != pred[i].size()) throw LengthMismatch(i);
}

}  // namespace

std::string_view to_string(EvalMode mode) {
  return mode == EvalMode::type_ignored ? "type-ignored" : "type-aware";
}

std::optional<EvalMode> parse_eval_mode(std::string_view name) {
  if (name == "type-aware") return EvalMode::type_aware;
  if (name == "type-ignored") return EvalMode::type_ignored;
  return std::nullopt;
}

Prf prf(const EvalCounts& counts) {
  Prf out;
  out.precision = ratio(counts.tp, counts.tp + counts.fp);
  out.recall = ratio(counts.tp, counts.tp + counts.fn);
  const double sum = out.precision + out.recall;
  out.f1 = sum == 0.0 ? 0.0 : 2.0 * out.precision * out.recall / sum;
  return out;
}

EvalCounts count_matches(std::span<const Tag> gold, std::span<const Tag> pred, EvalMode mode) {
  if (gold.size() != pred.size()) throw LengthMismatch(0);
  const auto g = chunks_for(gold, mode);
  const auto p = chunks_for(pred, mode);
  std::vector<EntitySpan> common;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common),
                        [](const auto& a, const auto& b) {
                          return std::tie(a.start, a.end, a.type) < std::tie(b.start, b.end, b.type);
                        });
  return {common.size(), p.size() - common.size(), g.size() - common.size()};
}

EvalReport score(std::span<const std::vector<Tag>> gold, std::span<const std::vector<Tag>> pred,
                 EvalMode mode) {
  check_shapes(gold, pred);
  EvalReport report;
  report.mode = mode;

  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto g = chunks_for(gold[s], mode);
    const auto p = chunks_for(pred[s], mode);
    // Both lists are sorted by start and non-overlapping.
    std::set<EntitySpan> gold_set(g.begin(), g.end());
    std::set<EntitySpan> matched;
    for (const auto& span : p) {
      auto& entry = report.per_type[span.type];
      if (gold_set.contains(span)) {
        ++entry.counts.tp;
        matched.insert(span);
      } else {
        ++entry.counts.fp;
      }
    }
    for (const auto& span : g) {
      auto& entry = report.per_type[span.type];
      ++entry.support;
      if (!matched.contains(span)) ++entry.counts.fn;
    }
  }

  for (auto& [type, entry] : report.per_type) {
    entry.scores = prf(entry.counts);
    report.counts += entry.counts;
  }
  report.micro = prf(report.counts);
  return report;
}

double row_average(std::span<const double> values) {
  if (values.empty()) throw EmptyInput("row_average: no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::string format_fixed1(double value) {
  auto out = fmt::format("{:.1f}", value);
  if (out == "-0.0") out = "0.0";
  return out;
}

nlohmann::json to_json(const EvalReport& report) {
  auto prf_json = [](const Prf& p) {
    return nlohmann::json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
  };
  nlohmann::json per_type = nlohmann::json::object();
  for (const auto& [type, entry] : report.per_type) {
    auto j = prf_json(entry.scores);
    j["support"] = entry.support;
    per_type[type] = std::move(j);
  }
  return {
      {"mode", std::string(to_string(report.mode))},
      {"micro", prf_json(report.micro)},
      {"per_type", std::move(per_type)},
      {"counts", {{"tp", report.counts.tp}, {"fp", report.counts.fp}, {"fn", report.counts.fn}}},
  };
}

std::string render_tsv(const EvalReport& report) {
  struct Row {
    std::string name, p, r, f, support;
  };
  std::vector<Row> rows;
  rows.push_back({"type", "precision", "recall", "f1", "support"});
  auto pct = [](double v) { return format_fixed1(100.0 * v); };
  std::size_t total_support = 0;
  for (const auto& [type, entry] : report.per_type) total_support += entry.support;
  rows.push_back({"micro[" + std::string(to_string(report.mode)) + "]", pct(report.micro.precision),
                  pct(report.micro.recall), pct(report.micro.f1), std::to_string(total_support)});
  for (const auto& [type, entry] : report.per_type)
    rows.push_back({type, pct(entry.scores.precision), pct(entry.scores.recall), pct(entry.scores.f1),
                    std::to_string(entry.support)});

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  std::string out;
  for (const auto& row : rows) {
    out += fmt::format("{:<{}}\t{:>9}\t{:>9}\t{:>9}\t{:>7}\n", row.name, width, row.p, row.r, row.f,
                       row.support);
  }
  return out;
}

}  // namespace nerkit
