#include "nerkit/service.hpp"

#include <chrono>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "nerkit/error.hpp"
#include "nerkit/text.hpp"

namespace nerkit {

namespace {

using nlohmann::json;

struct CodePoint {
  bool space = false;
  bool punct = false;
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;
};

std::vector<CodePoint> decode(std::string_view text) {
  const auto* p = reinterpret_cast<const uint8_t*>(text.data());
  const auto len = static_cast<int32_t>(text.size());
  std::vector<CodePoint> out;
  out.reserve(text.size());
  for (int32_t i = 0; i < len;) {
    const auto begin = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    CodePoint cp;
    cp.space = c >= 0 && u_isUWhiteSpace(c);
    cp.punct = c >= 0 && u_ispunct(c);
    cp.byte_begin = static_cast<std::size_t>(begin);
    cp.byte_end = static_cast<std::size_t>(i);
    out.push_back(cp);
  }
  return out;
}

json error_body(std::string_view message) { return json{{"error", message}}; }

}  // namespace

std::vector<TextToken> tokenize(std::string_view text) {
  const auto cps = decode(text);
  std::vector<TextToken> tokens;
  auto emit = [&](std::size_t first, std::size_t last) {  // code points [first, last)
    TextToken t;
    t.start_char = first;
    t.end_char = last;
    t.start_byte = cps[first].byte_begin;
    t.end_byte = cps[last - 1].byte_end;
    t.text = std::string(text.substr(t.start_byte, t.end_byte - t.start_byte));
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    if (cps[i].space) {
      ++i;
      continue;
    }
    auto end = i;
    while (end < cps.size() && !cps[end].space) ++end;

    auto core_begin = i;
    while (core_begin < end && cps[core_begin].punct) ++core_begin;
    auto core_end = end;
    while (core_end > core_begin && cps[core_end - 1].punct) --core_end;

    for (auto k = i; k < core_begin; ++k) emit(k, k + 1);
    if (core_begin < core_end) emit(core_begin, core_end);
    for (auto k = std::max(core_end, core_begin); k < end; ++k) emit(k, k + 1);
    i = end;
  }
  return tokens;
}

void ModelRegistry::add(std::string name, TaggerModel model) {
  if (name.empty()) throw ConfigError("model name must not be empty");
  if (find(name)) throw ConfigError("duplicate model name '" + name + "'");
  entries_.emplace_back(std::move(name), std::move(model));
}

const TaggerModel* ModelRegistry::find(std::string_view name) const {
  for (const auto& [n, m] : entries_)
    if (n == name) return &m;
  return nullptr;
}

const std::pair<std::string, TaggerModel>& ModelRegistry::default_entry() const {
  if (entries_.empty()) throw ConfigError("no models registered");
  return entries_.front();
}

ServiceResponse handle_predict(const ModelRegistry& registry, const PredictRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if (text::code_point_count(request.text) > kMaxRequestChars)
      return {400, error_body("text exceeds " + std::to_string(kMaxRequestChars) + " characters")};
    const auto tokens = tokenize(request.text);
    if (tokens.empty()) return {400, error_body("text must not be blank")};

    const std::string* name = nullptr;
    const TaggerModel* model = nullptr;
    if (request.model) {
      model = registry.find(*request.model);
      if (!model) return {404, error_body("unknown model '" + *request.model + "'")};
      name = &*request.model;
    } else {
      const auto& entry = registry.default_entry();
      name = &entry.first;
      model = &entry.second;
    }

    std::vector<std::string> words;
    words.reserve(tokens.size());
    for (const auto& t : tokens) words.push_back(t.text);
    const auto prediction = predict(words, *model);

    json token_list = json::array();
    for (const auto& t : tokens)
      token_list.push_back({{"text", t.text}, {"start_char", t.start_char}, {"end_char", t.end_char}});
    json spans = json::array();
    for (const auto& s : prediction.spans) {
      const auto& first = tokens[s.span.start];
      const auto& last = tokens[s.span.end - 1];
      spans.push_back({{"type", s.span.type},
                       {"start_token", s.span.start},
                       {"end_token", s.span.end},
                       {"text", request.text.substr(first.start_byte, last.end_byte - first.start_byte)},
                       {"score", s.score}});
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {200, json{{"tokens", std::move(token_list)}, {"spans", std::move(spans)}, {"model", *name},
                      {"elapsed_ms", elapsed}}};
  } catch (...) {
    return {500, error_body("internal error")};
  }
}

ServiceResponse handle_predict_body(const ModelRegistry& registry, std::string_view body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return {400, error_body("request body must be a JSON object")};
  auto text = j.find("text");
  if (text == j.end() || !text->is_string()) return {400, error_body("field 'text' must be a string")};
  PredictRequest request{text->get<std::string>(), std::nullopt};
  if (auto model = j.find("model"); model != j.end() && !model->is_null()) {
    if (!model->is_string()) return {400, error_body("field 'model' must be a string")};
    request.model = model->get<std::string>();
  }
  return handle_predict(registry, request);
}

nlohmann::json health_body() { return json{{"status", "ok"}}; }

nlohmann::json models_body(const ModelRegistry& registry) {
  json models = json::array();
  for (std::size_t i = 0; i < registry.entries().size(); ++i) {
    const auto& [name, model] = registry.entries()[i];
    models.push_back({{"name", name}, {"labels", model.labels.labels()}, {"default", i == 0}});
  }
  return json{{"models", std::move(models)}};
}

nlohmann::json prediction_json(const std::vector<std::string>& tokens, const Prediction& prediction) {
  json tags = json::array();
  for (const auto& t : prediction.tags) tags.push_back(t.str());
  json spans = json::array();
  for (const auto& s : prediction.spans) {
    std::string surface;
    for (auto i = s.span.start; i < s.span.end; ++i) {
      if (i > s.span.start) surface += ' ';
      surface += tokens[i];
    }
    spans.push_back({{"type", s.span.type},
                     {"start", s.span.start},
                     {"end", s.span.end},
                     {"text", surface},
                     {"score", s.score}});
  }
  return json{{"tokens", tokens}, {"tags", std::move(tags)}, {"spans", std::move(spans)}};
}

}  // namespace nerkit
