#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nerkit/tagger.hpp"

namespace nerkit {

inline constexpr std::size_t kMaxRequestChars = 10'000;

struct TextToken {
  std::string text;
  std::size_t start_char = 0;  // code-point offsets into the source text
  std::size_t end_char = 0;
  std::size_t start_byte = 0;  // byte offsets into the source text
  std::size_t end_byte = 0;

  friend bool operator==(const TextToken&, const TextToken&) = default;
};

// Splits on Unicode whitespace, then peels leading and trailing punctuation
// off each piece, one character per token.
std::vector<TextToken> tokenize(std::string_view text);

// Fixed set of named models, built once at startup and read-only afterwards.
class ModelRegistry {
 public:
  void add(std::string name, TaggerModel model);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  // nullptr when unknown.
  const TaggerModel* find(std::string_view name) const;
  // First registered model.
  const std::pair<std::string, TaggerModel>& default_entry() const;
  const std::vector<std::pair<std::string, TaggerModel>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<std::string, TaggerModel>> entries_;
};

struct PredictRequest {
  std::string text;
  std::optional<std::string> model;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

// 400 on blank or oversize text, 404 on an unknown model, 500 with an
// opaque message on anything else.
ServiceResponse handle_predict(const ModelRegistry& registry, const PredictRequest& request);
// Same, starting from a raw JSON request body.
ServiceResponse handle_predict_body(const ModelRegistry& registry, std::string_view body);

nlohmann::json health_body();
nlohmann::json models_body(const ModelRegistry& registry);

// One predict line as emitted by `nerkit predict`.
nlohmann::json prediction_json(const std::vector<std::string>& tokens, const Prediction& prediction);

}  // namespace nerkit
