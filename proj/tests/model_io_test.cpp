#include <gtest/gtest.h>

#include "nerkit/error.hpp"
#include "nerkit/tagger.hpp"
#include "support/fixtures.hpp"

using namespace nerkit;
using nerkit::testing::TempDir;

namespace {

TaggerModel trained() {
  const std::vector<Dataset> data{load_dataset(nerkit::testing::fixture("conll-mini"))};
  auto model = train(data, TrainConfig{});
  model.meta.created_at = "2026-01-01T00:00:00Z";
  return model;
}

}  // namespace

TEST(ModelIo, RoundTrip) {
  TempDir dir;
  const auto model = trained();
  save_model(model, dir / "m.json");
  EXPECT_EQ(load_model(dir / "m.json"), model);
  EXPECT_EQ(serialize_model(load_model(dir / "m.json")), serialize_model(model));
}

TEST(ModelIo, SelfDescribingSortedDocument) {
  const auto doc = nlohmann::json::parse(serialize_model(trained()));
  EXPECT_EQ(doc["format_version"], 1);
  for (const char* key : {"labels", "weights", "config", "meta", "checksum"}) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["labels"][0], "O");
  const auto text = serialize_model(trained());
  EXPECT_LT(text.find("\"checksum\""), text.find("\"config\""));
  EXPECT_LT(text.find("\"config\""), text.find("\"format_version\""));
}

TEST(ModelIo, FullPrecisionWeights) {
  TaggerModel m;
  m.labels = LabelLookup({"O", "B-X"});
  m.weights["bias"] = {0.1 + 0.2, 1.0 / 3.0};
  m.weights["w0=x"] = {-1e-300, 123456789.123456789};
  EXPECT_EQ(parse_model(serialize_model(m)), m);
}

TEST(ModelIo, TruncatedFileIsCorrupt) {
  const auto text = serialize_model(trained());
  EXPECT_THROW(parse_model(text.substr(0, text.size() / 2)), CorruptModel);
}

TEST(ModelIo, TamperedWeightIsCorrupt) {
  auto doc = nlohmann::json::parse(serialize_model(trained()));
  doc["weights"]["bias"][0] = 99.0;
  EXPECT_THROW(parse_model(doc.dump()), CorruptModel);
}

TEST(ModelIo, FutureVersionRejected) {
  auto doc = nlohmann::json::parse(serialize_model(trained()));
  doc["format_version"] = 999;
  EXPECT_THROW(parse_model(doc.dump()), VersionMismatch);
}

TEST(ModelIo, MissingFileIsIoError) {
  TempDir dir;
  EXPECT_THROW(load_model(dir / "absent.json"), IoError);
  EXPECT_THROW(save_model(trained(), dir / "no" / "such" / "dir.json"), IoError);
}
