#include <algorithm>

#include <fmt/format.h>

#include "nerkit/error.hpp"
#include "nerkit/harness.hpp"

namespace nerkit {

namespace {

constexpr std::string_view kCorner = "train\\test";

std::vector<std::vector<std::string>> table_rows(const CrossDomainMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{std::string(kCorner)};
  header.insert(header.end(), m.cols.begin(), m.cols.end());
  header.emplace_back("avg");
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<std::string> row{m.rows[r]};
    for (double v : m.cells[r]) row.push_back(format_fixed1(v));
    row.push_back(format_fixed1(m.avg[r]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_markdown(const CrossDomainMatrix& m) {
  const auto rows = table_rows(m);
  std::vector<std::size_t> width(rows.front().size(), 3);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    out += '|';
    for (std::size_t c = 0; c < row.size(); ++c)
      out += c == 0 ? fmt::format(" {:<{}} |", row[c], width[c]) : fmt::format(" {:>{}} |", row[c], width[c]);
    out += '\n';
  };
  emit(rows.front());
  out += '|';
  for (std::size_t c = 0; c < width.size(); ++c)
    out += c == 0 ? ' ' + std::string(width[c], '-') + " |" : ' ' + std::string(width[c] - 1, '-') + ": |";
  out += '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) {
    emit(rows[r]);
  }
  return out;
}

std::string render_tsv(const CrossDomainMatrix& m) {
  std::string out;
  for (const auto& row : table_rows(m)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += '\t';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  if (name == "tsv") return TableFormat::tsv;
  if (name == "json") return TableFormat::json;
  return std::nullopt;
}

std::optional<TableFormat> table_format_for(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".md" || ext == ".markdown") return TableFormat::markdown;
  if (ext == ".tsv") return TableFormat::tsv;
  if (ext == ".json") return TableFormat::json;
  return std::nullopt;
}

std::string render_table(const CrossDomainMatrix& matrix, TableFormat format) {
  switch (format) {
    case TableFormat::markdown: return render_markdown(matrix);
    case TableFormat::tsv: return render_tsv(matrix);
    case TableFormat::json: {
      nlohmann::json j{{"rows", matrix.rows}, {"cols", matrix.cols}, {"cells", matrix.cells}, {"avg", matrix.avg}};
      return j.dump(2) + "\n";
    }
  }
  return {};
}

CrossDomainMatrix parse_matrix_json(std::string_view document) {
  try {
    const auto j = nlohmann::json::parse(document);
    auto m = make_matrix(j.at("rows").get<std::vector<std::string>>(), j.at("cols").get<std::vector<std::string>>(),
                         j.at("cells").get<std::vector<std::vector<double>>>());
    // Keep the stored avg column; it was computed from the same cells.
    if (j.contains("avg")) {
      auto avg = j.at("avg").get<std::vector<double>>();
      if (avg.size() != m.rows.size()) throw Error("matrix json: avg length mismatch");
      m.avg = std::move(avg);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matrix json: ") + e.what());
  }
}

}  // namespace nerkit
