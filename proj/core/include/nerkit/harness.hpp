#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nerkit/corpus.hpp"
#include "nerkit/metrics.hpp"
#include "nerkit/tagger.hpp"

namespace nerkit {

inline constexpr std::string_view kAllRowName = "all";

struct MatrixSpec {
  std::vector<std::filesystem::path> dataset_dirs;
  EvalMode mode = EvalMode::type_aware;
  bool lowercase = false;
  bool include_all_row = false;
  TrainConfig train_config;
};

// Rows are train datasets (plus "all"), columns test datasets. Cells are
// micro-F1 percentages; avg[r] is row_average(cells[r]).
struct CrossDomainMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<double>> cells;
  std::vector<double> avg;

  friend bool operator==(const CrossDomainMatrix&, const CrossDomainMatrix&) = default;
};

struct CellTiming {
  std::string row;
  std::string col;
  double train_ms = 0.0;
  double eval_ms = 0.0;
};

struct MatrixRun {
  CrossDomainMatrix matrix;
  std::vector<CellTiming> timings;  // row-major, same order as the cells
};

// Worker threads used for rows. The result never depends on it.
struct RunOptions {
  unsigned threads = 1;
};

// One training per row, reused across all columns. Every dataset is a
// column and needs a test split; datasets with a train split are rows.
// Failures are rethrown as MatrixError naming the row and column.
MatrixRun run_matrix(std::span<const Dataset> datasets, EvalMode mode, bool lowercase,
                     bool include_all_row, const TrainConfig& config, RunOptions options = {});
MatrixRun run_matrix(const MatrixSpec& spec, RunOptions options = {});

// Rebuilds the avg column from the cells.
CrossDomainMatrix make_matrix(std::vector<std::string> rows, std::vector<std::string> cols,
                              std::vector<std::vector<double>> cells);

enum class TableFormat { markdown, tsv, json };

std::optional<TableFormat> parse_table_format(std::string_view name);
// Format implied by a report file name (.md, .tsv, .json).
std::optional<TableFormat> table_format_for(const std::filesystem::path& path);

std::string render_table(const CrossDomainMatrix& matrix, TableFormat format);
// Inverse of render_table(..., TableFormat::json). Throws Error on bad input.
CrossDomainMatrix parse_matrix_json(std::string_view document);

// Spec, seed and per-cell timings of a run.
nlohmann::json run_manifest(const MatrixSpec& spec, const MatrixRun& run);

}  // namespace nerkit
