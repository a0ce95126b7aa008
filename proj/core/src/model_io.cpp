#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <zlib.h>

#include "nerkit/error.hpp"
#include "nerkit/tagger.hpp"

namespace nerkit {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

std::string checksum_of(const std::string& payload) {
  auto crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size()));
  return fmt::format("crc32:{:08x}", crc);
}

json body_of(const TaggerModel& model) {
  json weights = json::object();
  for (const auto& [feature, vec] : model.weights) weights[feature] = vec;
  return {
      {"format_version", kModelFormatVersion},
      {"labels", model.labels.labels()},
      {"weights", std::move(weights)},
      {"config",
       {{"epochs", model.config.epochs},
        {"seed", model.config.seed},
        {"lowercase", model.config.lowercase},
        {"feature_template_version", model.config.feature_template_version}}},
      {"meta", {{"trained_on", model.meta.trained_on}, {"created_at", model.meta.created_at}}},
  };
}

}  // namespace

std::string serialize_model(const TaggerModel& model) {
  auto doc = body_of(model);
  doc["checksum"] = checksum_of(dump(doc));
  return dump(doc) + "\n";
}

TaggerModel parse_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw CorruptModel(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CorruptModel("model file is not a JSON object");

  auto version = doc.find("format_version");
  if (version == doc.end()) throw CorruptModel("model file lacks format_version");
  if (!version->is_number_integer() || version->get<long long>() != kModelFormatVersion)
    throw VersionMismatch("unsupported model format_version " + version->dump() + " (expected " +
                          std::to_string(kModelFormatVersion) + ")");

  auto stored = doc.find("checksum");
  if (stored == doc.end() || !stored->is_string()) throw CorruptModel("model file lacks checksum");
  const auto expected = stored->get<std::string>();
  doc.erase("checksum");
  if (checksum_of(dump(doc)) != expected) throw CorruptModel("model checksum mismatch");

  try {
    TaggerModel model;
    model.labels = LabelLookup(doc.at("labels").get<std::vector<std::string>>());
    if (model.labels.labels() != doc.at("labels").get<std::vector<std::string>>())
      throw CorruptModel("labels are not in canonical order");
    for (const auto& [feature, vec] : doc.at("weights").items()) {
      auto values = vec.get<std::vector<double>>();
      if (values.size() != model.labels.size())
        throw CorruptModel("weight vector for '" + feature + "' has wrong length");
      model.weights.emplace(feature, std::move(values));
    }
    const auto& config = doc.at("config");
    model.config.epochs = config.at("epochs").get<int>();
    model.config.seed = config.at("seed").get<std::uint64_t>();
    model.config.lowercase = config.at("lowercase").get<bool>();
    model.config.feature_template_version = config.at("feature_template_version").get<int>();
    if (model.config.feature_template_version != kFeatureTemplateVersion)
      throw VersionMismatch("unsupported feature template version " +
                            std::to_string(model.config.feature_template_version));
    const auto& meta = doc.at("meta");
    model.meta.trained_on = meta.at("trained_on").get<std::vector<std::string>>();
    model.meta.created_at = meta.at("created_at").get<std::string>();
    return model;
  } catch (const json::exception& e) {
    throw CorruptModel(std::string("malformed model field: ") + e.what());
  } catch (const ConfigError& e) {
    throw CorruptModel(e.what());
  }
}

void save_model(const TaggerModel& model, const std::filesystem::path& path) {
  const auto bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

TaggerModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace nerkit
