#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nerkit/corpus.hpp"
#include "nerkit/error.hpp"
#include "nerkit/harness.hpp"
#include "nerkit/metrics.hpp"
#include "nerkit/server.hpp"
#include "nerkit/service.hpp"
#include "nerkit/tagger.hpp"

namespace nerkit::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kSeedEnv = "NERKIT_SEED";

constexpr const char* kSynopsis =
    "usage: nerkit <command> [options]\n"
    "\n"
    "commands:\n"
    "  train    --data <dir>[,<dir>...] --out <model> [--epochs N] [--seed S] [--lowercase]\n"
    "  evaluate --model <file> --data <dir> [--split test] [--type-ignored] [--format json|tsv]\n"
    "  predict  --model <file> [--text \"...\"]   (reads one sentence per stdin line without --text)\n"
    "  stats    --data <dir>\n"
    "  matrix   --data <dir>,<dir>... --out <report> [--include-all] [--type-ignored] [--lowercase]\n"
    "  serve    --model <name>=<file>[,...] --port <p> [--static <dir>]\n"
    "\n"
    "run `nerkit <command> --help` for details.\n";

// Raised for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> flatten(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values)
    for (auto& item : split_list(v)) out.push_back(std::move(item));
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (!env || !*env) return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(fmt::format("{} must be a non-negative integer, got '{}'", kSeedEnv, text));
  return seed;
}

std::string created_at() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (!epoch || !*epoch) return {};
  std::time_t t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

struct TrainArgs {
  std::vector<std::string> data;
  std::string out;
  int epochs = 10;
  std::optional<std::uint64_t> seed;
  bool lowercase = false;
};

struct EvaluateArgs {
  std::string model;
  std::string data;
  std::string split = "test";
  bool type_ignored = false;
  std::string format = "json";
  bool lowercase = false;
};

struct PredictArgs {
  std::string model;
  std::optional<std::string> text;
};

struct MatrixArgs {
  std::vector<std::string> data;
  std::string out;
  std::optional<std::string> format;
  std::optional<std::string> manifest;
  bool include_all = false;
  bool type_ignored = false;
  bool lowercase = false;
  int epochs = 10;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

struct ServeArgs {
  std::vector<std::string> models;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::optional<std::string> static_dir;
  std::string cors_origin = "*";
};

int do_train(const TrainArgs& a, std::ostream& err) {
  std::vector<Dataset> datasets;
  for (const auto& dir : flatten(a.data)) datasets.push_back(load_dataset(dir));
  TrainConfig config;
  config.epochs = a.epochs;
  config.seed = a.seed ? *a.seed : default_seed();
  config.lowercase = a.lowercase;
  auto model = train(datasets, config, [&](int epoch, std::size_t mistakes) {
    err << fmt::format("epoch {}/{}: {} token errors\n", epoch, config.epochs, mistakes);
  });
  model.meta.created_at = created_at();
  save_model(model, a.out);
  err << fmt::format("saved {} ({} labels, {} features)\n", a.out, model.labels.size(), model.weights.size());
  return kExitOk;
}

int do_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  const auto model = load_model(a.model);
  if (a.lowercase && model.config.lowercase) {
    err << "warning: --lowercase rejected: model " << a.model << " already lowercases its input\n";
    return kExitUsage;
  }
  const auto split = parse_split(a.split);
  if (!split) throw UsageError("unknown split '" + a.split + "'");
  const auto dataset = load_dataset(a.data);
  if (!dataset.has(*split))
    throw MissingSplit(fmt::format("dataset {} has no {} split", dataset.name, a.split));

  std::vector<Sentence> sentences(dataset.split(*split).begin(), dataset.split(*split).end());
  if (a.lowercase) sentences = lowercase_sentences(sentences);
  const auto report = evaluate(model, sentences, a.type_ignored ? EvalMode::type_ignored : EvalMode::type_aware);
  if (a.format == "tsv")
    out << render_tsv(report);
  else
    out << to_json(report).dump(2) << '\n';
  return kExitOk;
}

void predict_line(const TaggerModel& model, const std::string& line, std::ostream& out) {
  std::vector<std::string> words;
  for (auto& t : tokenize(line)) words.push_back(std::move(t.text));
  if (words.empty()) {
    out << prediction_json({}, Prediction{}).dump() << '\n';
    return;
  }
  out << prediction_json(words, predict(words, model)).dump() << '\n';
}

int do_predict(const PredictArgs& a, std::istream& in, std::ostream& out) {
  const auto model = load_model(a.model);
  if (a.text) {
    predict_line(model, *a.text, out);
    return kExitOk;
  }
  std::string line;
  while (std::getline(in, line)) {
    predict_line(model, line, out);
    out.flush();
  }
  return kExitOk;
}

int do_stats(const std::string& dir, std::ostream& out) {
  const auto dataset = load_dataset(dir);
  const auto stats = dataset_stats(dataset);
  nlohmann::json sentences = nlohmann::json::object();
  for (const auto& [split, count] : stats.sentences) sentences[std::string(to_string(split))] = count;
  out << nlohmann::json{{"name", dataset.name},
                        {"sentences", sentences},
                        {"entity_types", stats.entity_types},
                        {"labels", dataset.labels}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int do_matrix(const MatrixArgs& a, std::ostream& err) {
  TableFormat format;
  if (a.format) {
    auto f = parse_table_format(*a.format);
    if (!f) throw UsageError("unknown format '" + *a.format + "'");
    format = *f;
  } else {
    format = table_format_for(a.out).value_or(TableFormat::markdown);
  }

  MatrixSpec spec;
  for (const auto& dir : flatten(a.data)) spec.dataset_dirs.emplace_back(dir);
  spec.mode = a.type_ignored ? EvalMode::type_ignored : EvalMode::type_aware;
  spec.lowercase = a.lowercase;
  spec.include_all_row = a.include_all;
  spec.train_config.epochs = a.epochs;
  spec.train_config.seed = a.seed ? *a.seed : default_seed();

  const auto run = run_matrix(spec, RunOptions{a.threads});
  write_file(a.out, render_table(run.matrix, format));
  const auto manifest_path = a.manifest.value_or(a.out + ".manifest.json");
  write_file(manifest_path, run_manifest(spec, run).dump(2) + "\n");
  err << fmt::format("wrote {} ({}x{}) and {}\n", a.out, run.matrix.rows.size(), run.matrix.cols.size(),
                     manifest_path);
  return kExitOk;
}

int do_serve(const ServeArgs& a, std::ostream& err) {
  ModelRegistry registry;
  for (const auto& entry : flatten(a.models)) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw UsageError("--model expects <name>=<file>, got '" + entry + "'");
    registry.add(entry.substr(0, eq), load_model(entry.substr(eq + 1)));
  }
  ServerOptions options;
  options.host = a.host;
  options.port = a.port;
  if (a.static_dir) options.static_dir = *a.static_dir;
  options.cors_origin = a.cors_origin;

  PredictionServer server(registry, options);
  const int port = server.bind();
  err << fmt::format("serving {} model(s) on http://{}:{}\n", registry.size(), a.host, port);
  err.flush();
  server.listen();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kSynopsis;
    return kExitUsage;
  }

  CLI::App app{"Named-entity tagging toolkit: corpora, training, evaluation, serving", "nerkit"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Train a tagger on one or more dataset directories");
  train_cmd->add_option("--data", train_args.data, "Dataset directories (comma-separated)")->required();
  train_cmd->add_option("--out", train_args.out, "Model file to write")->required();
  train_cmd->add_option("--epochs", train_args.epochs, "Training epochs")->check(CLI::Range(1, 100000));
  train_cmd->add_option("--seed", train_args.seed, "Shuffle seed (default: $NERKIT_SEED or 42)");
  train_cmd->add_flag("--lowercase", train_args.lowercase, "Lowercase tokens for training and inference");

  EvaluateArgs eval_args;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a model on a dataset split");
  eval_cmd->add_option("--model", eval_args.model, "Model file")->required();
  eval_cmd->add_option("--data", eval_args.data, "Dataset directory")->required();
  eval_cmd->add_option("--split", eval_args.split, "Split to score")
      ->check(CLI::IsMember({"train", "valid", "test"}));
  eval_cmd->add_flag("--type-ignored", eval_args.type_ignored, "Ignore entity types (span detection F1)");
  eval_cmd->add_option("--format", eval_args.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  eval_cmd->add_flag("--lowercase", eval_args.lowercase, "Lowercase the evaluation tokens");

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "Tag raw text, one JSON line per sentence");
  predict_cmd->add_option("--model", predict_args.model, "Model file")->required();
  predict_cmd->add_option("--text", predict_args.text, "Text to tag (default: read lines from stdin)");

  std::string stats_dir;
  auto* stats_cmd = app.add_subcommand("stats", "Print sentence counts and entity types of a dataset");
  stats_cmd->add_option("--data", stats_dir, "Dataset directory")->required();

  MatrixArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix", "Train on each dataset and test on all of them");
  matrix_cmd->add_option("--data", matrix_args.data, "Dataset directories (comma-separated)")->required();
  matrix_cmd->add_option("--out", matrix_args.out, "Report file")->required();
  matrix_cmd->add_option("--format", matrix_args.format, "markdown|tsv|json (default: from --out extension)")
      ->check(CLI::IsMember({"markdown", "md", "tsv", "json"}));
  matrix_cmd->add_option("--manifest", matrix_args.manifest, "Run manifest (default: <out>.manifest.json)");
  matrix_cmd->add_flag("--include-all", matrix_args.include_all, "Add a row trained on all train splits");
  matrix_cmd->add_flag("--type-ignored", matrix_args.type_ignored, "Ignore entity types");
  matrix_cmd->add_flag("--lowercase", matrix_args.lowercase, "Lowercase every dataset");
  matrix_cmd->add_option("--epochs", matrix_args.epochs, "Training epochs")->check(CLI::Range(1, 100000));
  matrix_cmd->add_option("--seed", matrix_args.seed, "Shuffle seed (default: $NERKIT_SEED or 42)");
  matrix_cmd->add_option("--threads", matrix_args.threads, "Rows trained in parallel")->check(CLI::Range(1, 256));

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the prediction HTTP API");
  serve_cmd->add_option("--model", serve_args.models, "Models as <name>=<file> (comma-separated)")->required();
  serve_cmd->add_option("--port", serve_args.port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve_args.host, "Bind address");
  serve_cmd->add_option("--static", serve_args.static_dir, "Directory served at /");
  serve_cmd->add_option("--cors-origin", serve_args.cors_origin, "Access-Control-Allow-Origin value");

  std::vector<const char*> argv{"nerkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << kSynopsis;
    return kExitUsage;
  }

  try {
    if (*train_cmd) return do_train(train_args, err);
    if (*eval_cmd) return do_evaluate(eval_args, out, err);
    if (*predict_cmd) return do_predict(predict_args, in, out);
    if (*stats_cmd) return do_stats(stats_dir, out);
    if (*matrix_cmd) return do_matrix(matrix_args, err);
    if (*serve_cmd) return do_serve(serve_args, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kSynopsis;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << kSynopsis;
  return kExitUsage;
}

}  // namespace nerkit::cli
