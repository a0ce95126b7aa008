#include "nerkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct RowJob {
  std::string name;
  std::vector<Dataset> train_on;
};

struct RowResult {
  std::vector<double> cells;
  std::vector<CellTiming> timings;
};

RowResult run_row(const RowJob& job, std::span<const Dataset> columns, EvalMode mode, const TrainConfig& config) {
  RowResult out;
  const auto train_start = Clock::now();
  TaggerModel model;
  try {
    model = train(job.train_on, config);
  } catch (const std::exception& e) {
    throw MatrixError(job.name, "", e.what());
  }
  const double train_ms = ms_since(train_start);

  for (const auto& column : columns) {
    const auto eval_start = Clock::now();
    try {
      const auto report = evaluate(model, column.split(Split::test), mode);
      out.cells.push_back(100.0 * report.micro.f1);
    } catch (const std::exception& e) {
      throw MatrixError(job.name, column.name, e.what());
    }
    out.timings.push_back({job.name, column.name, train_ms, ms_since(eval_start)});
  }
  return out;
}

}  // namespace

CrossDomainMatrix make_matrix(std::vector<std::string> rows, std::vector<std::string> cols,
                              std::vector<std::vector<double>> cells) {
  CrossDomainMatrix m{std::move(rows), std::move(cols), std::move(cells), {}};
  if (m.cells.size() != m.rows.size()) throw Error("matrix: cell rows do not match row names");
  for (const auto& row : m.cells) {
    if (row.size() != m.cols.size()) throw Error("matrix: cell columns do not match column names");
    m.avg.push_back(row_average(row));
  }
  return m;
}

MatrixRun run_matrix(std::span<const Dataset> datasets, EvalMode mode, bool lowercase, bool include_all_row,
                     const TrainConfig& config, RunOptions options) {
  if (datasets.empty()) throw EmptyInput("matrix: no datasets");
  std::set<std::string> names;
  for (const auto& d : datasets) {
    if (!names.insert(d.name).second) throw MatrixError(d.name, "", "duplicate dataset name");
    if (d.split(Split::test).empty()) throw MatrixError("", d.name, "dataset has no test split");
  }

  std::vector<Dataset> prepared;
  prepared.reserve(datasets.size());
  for (const auto& d : datasets) prepared.push_back(lowercase ? lowercase_dataset(d) : d);

  TrainConfig row_config = config;
  row_config.lowercase = row_config.lowercase || lowercase;

  std::vector<RowJob> jobs;
  std::vector<Dataset> trainable;
  for (const auto& d : prepared) {
    if (d.split(Split::train).empty()) continue;
    jobs.push_back({d.name, {d}});
    trainable.push_back(d);
  }
  if (jobs.empty()) throw MatrixError("", "", "no dataset has a train split");
  if (include_all_row) {
    if (names.contains(std::string(kAllRowName)))
      throw MatrixError(std::string(kAllRowName), "", "dataset name collides with the pooled row");
    // Only train splits are pooled; columns keep their own test sets.
    std::vector<Dataset> train_only;
    for (const auto& d : trainable) {
      Dataset t{d.name, {{Split::train, d.splits.at(Split::train)}}, d.labels};
      train_only.push_back(std::move(t));
    }
    jobs.push_back({std::string(kAllRowName), {concat_datasets(train_only, std::string(kAllRowName))}});
  }

  std::vector<RowResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = run_row(jobs[i], prepared, mode, row_config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = std::clamp<std::size_t>(options.threads, 1, jobs.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<double>> cells;
  MatrixRun run;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    rows.push_back(jobs[i].name);
    cells.push_back(std::move(results[i].cells));
    run.timings.insert(run.timings.end(), results[i].timings.begin(), results[i].timings.end());
  }
  for (const auto& d : prepared) cols.push_back(d.name);
  run.matrix = make_matrix(std::move(rows), std::move(cols), std::move(cells));
  return run;
}

MatrixRun run_matrix(const MatrixSpec& spec, RunOptions options) {
  if (spec.dataset_dirs.empty()) throw EmptyInput("matrix: no dataset directories");
  std::vector<Dataset> datasets;
  for (const auto& dir : spec.dataset_dirs) {
    try {
      datasets.push_back(load_dataset(dir));
    } catch (const std::exception& e) {
      throw MatrixError(dir.string(), "", e.what());
    }
  }
  return run_matrix(datasets, spec.mode, spec.lowercase, spec.include_all_row, spec.train_config, options);
}

nlohmann::json run_manifest(const MatrixSpec& spec, const MatrixRun& run) {
  std::vector<std::string> dirs;
  for (const auto& d : spec.dataset_dirs) dirs.push_back(d.string());
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& t : run.timings)
    cells.push_back({{"row", t.row}, {"col", t.col}, {"train_ms", t.train_ms}, {"eval_ms", t.eval_ms}});
  return {
      {"spec",
       {{"dataset_dirs", dirs},
        {"mode", std::string(to_string(spec.mode))},
        {"lowercase", spec.lowercase},
        {"include_all_row", spec.include_all_row},
        {"train_config",
         {{"epochs", spec.train_config.epochs},
          {"seed", spec.train_config.seed},
          {"lowercase", spec.train_config.lowercase},
          {"feature_template_version", spec.train_config.feature_template_version}}}}},
      {"seed", spec.train_config.seed},
      {"rows", run.matrix.rows},
      {"cols", run.matrix.cols},
      {"cells", std::move(cells)},
  };
}

}  // namespace nerkit
